//! Seeded generators for property sweeps.
//!
//! Plain uniform blocks almost never have nontrivial twist stabilizers, so
//! a third of the generated parameters are built as unions of the twists
//! of a smaller parameter by a finite-order character, which forces one.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cuspidal::{CuspidalDatum, FieldParams, ResidueCharacter};
use crate::exact_groups::{gcd, Phase};
use crate::tame::{TameCharacter, TameParameter, TameSegment};
use crate::zelevinsky::{Multisegment, Segment};

const MAX_DEGREE: u32 = 4;
const PHASE_DENOMINATORS: [u64; 6] = [1, 2, 3, 4, 5, 6];

/// A uniformly chosen cuspidal datum of degree `d` (regular orbits only).
pub fn random_cuspidal<R: Rng + ?Sized>(rng: &mut R, field: FieldParams, d: u32) -> CuspidalDatum {
    let m = field.torus_order(d).expect("small degree");
    loop {
        let a = rng.gen_range(0..m);
        if let Ok(c) = CuspidalDatum::new(field, d, a) {
            return c;
        }
    }
}

fn random_block_shape<R: Rng + ?Sized>(rng: &mut R, remaining: u32) -> (u32, u32) {
    let d = rng.gen_range(1..=remaining.min(MAX_DEGREE));
    let l = rng.gen_range(1..=remaining / d);
    (d, l)
}

fn random_phase<R: Rng + ?Sized>(rng: &mut R) -> Phase {
    let den = *PHASE_DENOMINATORS.choose(rng).expect("nonempty");
    Phase::new(rng.gen_range(0..den) as i128, den).expect("den >= 1")
}

fn uniform_blocks<R: Rng + ?Sized>(rng: &mut R, field: FieldParams, n: u32) -> Vec<TameSegment> {
    let mut blocks = Vec::new();
    let mut remaining = n;
    while remaining > 0 {
        let (d, l) = random_block_shape(rng, remaining);
        blocks.push(TameSegment {
            cuspidal: random_cuspidal(rng, field, d),
            phase: random_phase(rng),
            length: l,
        });
        remaining -= d * l;
    }
    blocks
}

/// A random tame parameter of dimension `n >= 1`.
pub fn random_parameter<R: Rng + ?Sized>(rng: &mut R, field: FieldParams, n: u32) -> TameParameter {
    assert!(n >= 1, "dimension must be positive");
    let divisors: Vec<u32> = (2..=n).filter(|m| n.is_multiple_of(*m)).collect();
    if !divisors.is_empty() && rng.gen_ratio(1, 3) {
        let m = *divisors.choose(rng).expect("nonempty");
        // (b, v) of order dividing m: m b = 0 mod q - 1, v = k / m.
        let units = field.units();
        let step = units / gcd(units, m as u64);
        let b = step * rng.gen_range(0..m as u64);
        let v = Phase::new(rng.gen_range(0..m) as i128, m as u64).expect("m >= 2");
        let chi = TameCharacter {
            inertial: ResidueCharacter::new(field, b as i128),
            unramified: v,
        };
        let base = uniform_blocks(rng, field, n / m);
        let mut blocks = Vec::with_capacity(base.len() * m as usize);
        let mut power = TameCharacter::trivial(field);
        for _ in 0..m {
            blocks.extend(base.iter().map(|blk| blk.twist(power)));
            power = power.compose(chi);
        }
        return TameParameter::new(field, blocks).expect("valid blocks");
    }
    TameParameter::new(field, uniform_blocks(rng, field, n)).expect("valid blocks")
}

/// A random multisegment of degree `n >= 1`.
pub fn random_multisegment<R: Rng + ?Sized>(
    rng: &mut R,
    field: FieldParams,
    n: u32,
) -> Multisegment {
    assert!(n >= 1, "degree must be positive");
    let mut segments = Vec::new();
    let mut remaining = n;
    while remaining > 0 {
        let (d, l) = random_block_shape(rng, remaining);
        segments.push(Segment {
            cuspidal: random_cuspidal(rng, field, d),
            length: l,
        });
        remaining -= d * l;
    }
    Multisegment::new(field, segments).expect("valid segments")
}
