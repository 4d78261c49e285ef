//! Cuspidal representations of `GL_d(F_q)` as Frobenius orbits of regular
//! characters of `F_{q^d}^*`, and the residue-character twist on them.
//!
//! A character of the cyclic group `F_{q^d}^*` is an index `a` mod
//! `q^d - 1`; Frobenius acts by `a -> q a`. Cuspidals of degree `d` are the
//! orbits of size exactly `d`, each named by its smallest element.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_groups::Residue;

/// The residue field size `q = p^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldParams {
    q: u64,
    p: u64,
    r: u32,
}

impl FieldParams {
    pub fn new(q: u64) -> Result<Self> {
        let (p, r) =
            prime_power(q).ok_or_else(|| Error::Domain(format!("q = {q} is not a prime power")))?;
        Ok(FieldParams { q, p, r })
    }

    pub fn q(self) -> u64 {
        self.q
    }

    pub fn characteristic(self) -> u64 {
        self.p
    }

    pub fn exponent(self) -> u32 {
        self.r
    }

    /// `q - 1`, the order of `k_F^*` and of its character group.
    pub fn units(self) -> u64 {
        self.q - 1
    }

    /// `q^d - 1`, the order of `F_{q^d}^*`.
    pub fn torus_order(self, d: u32) -> Result<u64> {
        if d == 0 {
            return Err(Error::Domain("degree must be at least 1".into()));
        }
        self.q
            .checked_pow(d)
            .map(|x| x - 1)
            .ok_or_else(|| Error::Capacity(format!("{}^{d} does not fit in 64 bits", self.q)))
    }
}

/// `Some((p, r))` with `q = p^r`, `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut r) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p, r))
}

fn orbit_of(a: u64, q: u64, modulus: u64) -> Vec<u64> {
    let mut orbit = vec![a];
    let mut x = ((a as u128 * q as u128) % modulus as u128) as u64;
    while x != a {
        orbit.push(x);
        x = ((x as u128 * q as u128) % modulus as u128) as u64;
    }
    orbit
}

/// A cuspidal representation of `GL_d(F_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspidalDatum {
    d: u32,
    orbit: u64,
    q: u64,
}

impl CuspidalDatum {
    /// The cuspidal whose Frobenius orbit contains the character index `a`.
    /// Fails if that orbit is not regular (size smaller than `d`).
    pub fn new(field: FieldParams, d: u32, a: u64) -> Result<Self> {
        let modulus = field.torus_order(d)?;
        let a = a % modulus;
        let orbit = orbit_of(a, field.q, modulus);
        if orbit.len() != d as usize {
            return Err(Error::Domain(format!(
                "character {a} mod {modulus} has a Frobenius orbit of size {}, not {d}",
                orbit.len()
            )));
        }
        Ok(CuspidalDatum {
            d,
            orbit: *orbit.iter().min().expect("nonempty orbit"),
            q: field.q,
        })
    }

    /// The trivial character of `GL_1`.
    pub fn trivial(field: FieldParams) -> Self {
        CuspidalDatum {
            d: 1,
            orbit: 0,
            q: field.q,
        }
    }

    pub fn degree(self) -> u32 {
        self.d
    }

    /// Smallest element of the Frobenius orbit.
    pub fn orbit_rep(self) -> u64 {
        self.orbit
    }

    pub fn q(self) -> u64 {
        self.q
    }

    pub fn modulus(self) -> u64 {
        self.q.pow(self.d) - 1
    }

    pub fn orbit_rep_residue(self) -> Residue {
        Residue::new(self.orbit as i128, self.modulus()).expect("modulus >= 1")
    }

    pub fn orbit(self) -> Vec<u64> {
        let mut o = orbit_of(self.orbit, self.q, self.modulus());
        o.sort_unstable();
        o
    }

    /// `tau ⊗ (chi ∘ det)`: shifts the index by `b (q^d - 1)/(q - 1)`, since
    /// the dual of the norm `F_{q^d}^* -> F_q^*` multiplies indices by that
    /// factor.
    pub fn twist(self, chi: ResidueCharacter) -> Self {
        assert_eq!(chi.modulus(), self.q - 1, "character of the wrong field");
        let m = self.modulus();
        let step = m / (self.q - 1);
        let a = ((self.orbit as u128 + chi.index() as u128 * step as u128) % m as u128) as u64;
        let orbit = orbit_of(a, self.q, m);
        debug_assert_eq!(orbit.len(), self.d as usize);
        CuspidalDatum {
            d: self.d,
            orbit: *orbit.iter().min().expect("nonempty orbit"),
            q: self.q,
        }
    }
}

impl fmt::Display for CuspidalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.d, self.orbit)
    }
}

/// A character of `k_F^*`, indexed by `b` mod `q - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueCharacter {
    b: u64,
    modulus: u64,
}

impl ResidueCharacter {
    pub fn new(field: FieldParams, b: i128) -> Self {
        let modulus = field.units();
        ResidueCharacter {
            b: b.rem_euclid(modulus as i128) as u64,
            modulus,
        }
    }

    pub fn trivial(field: FieldParams) -> Self {
        Self::new(field, 0)
    }

    pub fn index(self) -> u64 {
        self.b
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn residue(self) -> Residue {
        Residue::new(self.b as i128, self.modulus).expect("modulus >= 1")
    }

    pub fn compose(self, other: ResidueCharacter) -> Self {
        assert_eq!(
            self.modulus, other.modulus,
            "characters of different fields"
        );
        ResidueCharacter {
            b: (self.b + other.b) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn inverse(self) -> Self {
        ResidueCharacter {
            b: (self.modulus - self.b) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// Every character of `k_F^*`.
    pub fn all(field: FieldParams) -> impl Iterator<Item = ResidueCharacter> {
        (0..field.units()).map(move |b| Self::new(field, b as i128))
    }
}

pub fn twist_cuspidal(tau: CuspidalDatum, chi: ResidueCharacter) -> CuspidalDatum {
    tau.twist(chi)
}

/// All cuspidals of `GL_d(F_q)`, sorted by orbit representative.
pub fn enumerate_cuspidals(field: FieldParams, d: u32) -> Result<Vec<CuspidalDatum>> {
    let modulus = field.torus_order(d)?;
    let mut out = Vec::new();
    for a in 0..modulus {
        let orbit = orbit_of(a, field.q, modulus);
        if orbit.len() == d as usize && orbit.iter().all(|&x| x >= a) {
            out.push(CuspidalDatum {
                d,
                orbit: a,
                q: field.q,
            });
        }
    }
    Ok(out)
}

pub fn cuspidal_count(field: FieldParams, d: u32) -> Result<u64> {
    Ok(enumerate_cuspidals(field, d)?.len() as u64)
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Closed-form count of regular Frobenius orbits of size `d`:
/// `(1/d) sum_{e | d} mu(d/e) (q^e - 1)`.
pub fn necklace_count(field: FieldParams, d: u32) -> Result<u64> {
    let mut total: i128 = 0;
    for e in 1..=d {
        if d.is_multiple_of(e) {
            total += mobius((d / e) as u64) as i128 * field.torus_order(e)? as i128;
        }
    }
    Ok((total / d as i128) as u64)
}
