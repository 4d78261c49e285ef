//! Property suites behind `macvogan verify`.
//!
//! Each suite returns a [`SuiteReport`] listing how many checks ran and a
//! message for each failure. Suites never panic on a failed property.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cuspidal::{cuspidal_count, necklace_count, FieldParams, ResidueCharacter};
use crate::error::{Error, Result};
use crate::exact_groups::{FinAbGroup, GroupHom, Phase};
use crate::oracle::{conj_class_count, GroupKind, MatrixGroupSpec};
use crate::partition::{enumerate_degree, orbits_and_stabilizers};
use crate::random::{random_multisegment, random_parameter};
use crate::sl::{
    check_compatibility_packet, check_finalcomp, check_member_equivariance, hp_sl_member,
    hp_sl_packet, l_packet, mv_class_of, mv_fiber, sl_canonicalize, sl_census,
};
use crate::tame::{make_example1, make_example2, TameCharacter, TameParameter};
use crate::zelevinsky::hp_gl;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Counting,
    Twist,
    Torsor,
    Examples,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "counting" => Ok(Suite::Counting),
            "twist" => Ok(Suite::Twist),
            "torsor" => Ok(Suite::Torsor),
            "examples" => Ok(Suite::Examples),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
    /// Checks that were not run, with the reason.
    pub skipped: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checks: 0,
            failures: Vec::new(),
            skipped: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{}: {} ({} checks, {} failures",
            self.name,
            status,
            self.checks,
            self.failures.len()
        )?;
        if !self.skipped.is_empty() {
            write!(f, ", {} skipped", self.skipped.len())?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub field: FieldParams,
    pub n: u32,
    pub seed: u64,
    /// Random objects drawn by each sampling check.
    pub samples: usize,
    /// Element budget for the brute-force oracle.
    pub budget: u64,
}

impl VerifyConfig {
    pub fn new(field: FieldParams, n: u32) -> Self {
        VerifyConfig {
            field,
            n,
            seed: 0,
            samples: 200,
            budget: crate::oracle::DEFAULT_BUDGET,
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    if cfg.n == 0 {
        return Err(Error::Domain("N must be at least 1".into()));
    }
    Ok(match suite {
        Suite::Counting => vec![counting(cfg)?],
        Suite::Twist => vec![twist(cfg)?],
        Suite::Torsor => vec![torsor(cfg)],
        Suite::Examples => vec![examples(cfg)],
        Suite::All => vec![
            counting(cfg)?,
            twist(cfg)?,
            torsor(cfg),
            examples(cfg),
            substrate(cfg),
        ],
    })
}

/// Censuses against the oracle, necklace counts, orbit–stabilizer and
/// fiber sizes.
pub fn counting(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("counting");
    let (field, n) = (cfg.field, cfg.n);
    let fns = enumerate_degree(field, n)?;
    let gl = fns.len() as u64;
    let sl = sl_census(field, n)?;
    for (kind, ours) in [(GroupKind::Gl, gl), (GroupKind::Sl, sl)] {
        let spec = MatrixGroupSpec::new(kind, n, field.q());
        match conj_class_count(spec, cfg.budget) {
            Ok(c) => r.check(c.classes == ours, || {
                format!("{spec}: census {ours}, brute force {}", c.classes)
            }),
            Err(Error::Capacity(msg)) => r.skipped.push(msg),
            Err(e) => return Err(e),
        }
    }
    for d in 1..=n {
        let a = cuspidal_count(field, d)?;
        let b = necklace_count(field, d)?;
        r.check(a == b, || {
            format!("degree {d}: {a} cuspidals, necklace formula {b}")
        });
    }
    let orbits = orbits_and_stabilizers(field, n)?;
    let covered: u64 = orbits.iter().map(|o| o.orbit_len).sum();
    r.check(covered == gl, || {
        format!("orbits cover {covered} of {gl} functions")
    });
    for o in &orbits {
        let stab = o.stabilizer.order();
        r.check(o.orbit_len * stab == field.units(), || {
            format!(
                "{}: orbit {} x stab {stab} != q - 1",
                o.representative, o.orbit_len
            )
        });
        let class = mv_class_of(&o.representative);
        r.check(mv_fiber(&class).len() as u64 == stab, || {
            format!("{}: fiber size differs from |stab|", o.representative)
        });
    }
    Ok(r)
}

/// Action laws on partition-valued functions and parameters, and
/// commutation of the head of restriction with twisting.
pub fn twist(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("twist");
    let field = cfg.field;
    let chars: Vec<ResidueCharacter> = ResidueCharacter::all(field).collect();
    let mut rng = cfg.rng(1);

    let mut fns = enumerate_degree(field, cfg.n)?;
    if fns.len() > cfg.samples {
        fns.shuffle(&mut rng);
        fns.truncate(cfg.samples);
    }
    for m in &fns {
        r.check(m.twist(ResidueCharacter::trivial(field)) == *m, || {
            format!("{m}: trivial twist moves it")
        });
        let a = *chars.choose(&mut rng).expect("q - 1 >= 1");
        let b = *chars.choose(&mut rng).expect("q - 1 >= 1");
        r.check(m.twist(a).twist(b) == m.twist(a.compose(b)), || {
            format!(
                "{m}: twists by {} and {} do not compose",
                a.index(),
                b.index()
            )
        });
        let stab = m.stabilizer();
        r.check(
            chars
                .iter()
                .all(|c| (m.twist(*c) == *m) == stab.contains(&[c.index()])),
            || format!("{m}: stabilizer disagrees with the sweep"),
        );
        r.check(
            m.orbit().len() as u64 * stab.order() == field.units(),
            || format!("{m}: orbit-stabilizer fails"),
        );
    }

    for _ in 0..cfg.samples {
        let ms = random_multisegment(&mut rng, field, cfg.n);
        let chi = *chars.choose(&mut rng).expect("q - 1 >= 1");
        r.check(hp_gl(&ms.twist(chi)) == hp_gl(&ms).twist(chi), || {
            format!(
                "{ms}: head of restriction does not commute with twist by {}",
                chi.index()
            )
        });
    }

    for _ in 0..cfg.samples {
        let p = random_parameter(&mut rng, field, cfg.n);
        let a = random_character(&mut rng, field);
        let b = random_character(&mut rng, field);
        r.check(p.twist(a).twist(b) == p.twist(a.compose(b)), || {
            format!("{p}: parameter twists do not compose")
        });
        r.check(sl_canonicalize(&p.twist(a)) == sl_canonicalize(&p), || {
            format!("{p}: canonical form changes under twist")
        });
        let stab = p.stab_full();
        r.check(
            stab.elements().all(|x| p.twist(p.character_at(&x)) == p),
            || format!("{p}: stabilizer element moves the parameter"),
        );
    }
    Ok(r)
}

fn random_character<R: Rng>(rng: &mut R, field: FieldParams) -> TameCharacter {
    let den = rng.gen_range(1..=12u64);
    TameCharacter::new(
        field,
        rng.gen_range(0..field.units()) as i128,
        Phase::new(rng.gen_range(0..den) as i128, den).expect("den >= 1"),
    )
}

/// Packet-level compatibility, the partition of the fiber by member heads,
/// relabeling equivariance and well-definedness of `ι`.
pub fn torsor(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = SuiteReport::new("torsor");
    let mut rng = cfg.rng(2);
    for _ in 0..cfg.samples {
        let p = random_parameter(&mut rng, cfg.field, cfg.n);
        torsor_checks(&mut r, &p);
    }
    r
}

fn torsor_checks(r: &mut SuiteReport, p: &TameParameter) {
    r.check(p.try_iota().is_ok(), || {
        format!("{p}: iota is not well defined")
    });
    r.check(check_compatibility_packet(p), || {
        format!("{p}: packet compatibility fails")
    });
    let c = sl_canonicalize(p);
    r.check(check_finalcomp(&c), || {
        format!("{p}: member heads do not partition the fiber")
    });
    let stab = c.canonical.stab_full();
    r.check(l_packet(&c).len() as u64 == stab.order(), || {
        format!("{p}: packet size differs from |A|")
    });
    if stab.order() <= 24 && hp_sl_packet(&c).stab.order() <= 24 {
        r.check(check_member_equivariance(&c), || {
            format!("{p}: relabeling is not equivariant")
        });
    }
}

/// The two worked examples at this `(N, q)`: the first whenever `N >= 2`,
/// the second for every `e > 1` dividing `gcd(q - 1, N)`.
pub fn examples(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = SuiteReport::new("examples");
    let (field, n) = (cfg.field, cfg.n);
    match make_example1(field, n) {
        Ok(p) => {
            for msg in example1_failures(&p) {
                r.failures.push(msg);
            }
            r.checks += 1;
            torsor_checks(&mut r, &p);
        }
        Err(_) => r.skipped.push(format!("example 1 needs N >= 2, got {n}")),
    }
    let mut any = false;
    for e in 2..=n {
        if let Ok(p) = make_example2(field, n, e) {
            any = true;
            for msg in example2_failures(&p, e) {
                r.failures.push(msg);
            }
            r.checks += 1;
            torsor_checks(&mut r, &p);
        }
    }
    if !any {
        r.skipped.push(format!(
            "example 2 needs some e > 1 dividing q - 1 and N at q = {}",
            field.q()
        ));
    }
    r
}

/// Deviations of a first-example parameter from `|A| = N`, a singleton
/// fiber and `ι̂` injective but not surjective.
pub fn example1_failures(p: &TameParameter) -> Vec<String> {
    let n = p.dimension() as u64;
    let mut out = Vec::new();
    let a = p.component_group_l();
    if a.order() != n || !a.group.is_cyclic() {
        out.push(format!(
            "|A| = {} (cyclic: {}), expected cyclic of order {n}",
            a.order(),
            a.group.is_cyclic()
        ));
    }
    let fiber = mv_fiber(&mv_class_of(&p.inertial_class())).len();
    if fiber != 1 {
        out.push(format!("MV fiber has {fiber} elements, expected 1"));
    }
    let h = p.iota_hat();
    if !h.is_injective() || h.is_surjective() {
        out.push(format!(
            "iota_hat injective={} surjective={}, expected true/false",
            h.is_injective(),
            h.is_surjective()
        ));
    }
    out
}

/// Deviations of a second-example parameter from `|A| = 1`, inertial group
/// cyclic of order `e`, fiber of size `e` and `ι̂` onto with kernel of
/// order `e`.
pub fn example2_failures(p: &TameParameter, e: u32) -> Vec<String> {
    let e = e as u64;
    let mut out = Vec::new();
    let a = p.component_group_l();
    if a.order() != 1 {
        out.push(format!("|A| = {}, expected 1", a.order()));
    }
    let inert = p.component_group_inertial();
    if inert.order() != e || !inert.group.is_cyclic() {
        out.push(format!(
            "inertial group {} is not cyclic of order {e}",
            inert.group
        ));
    }
    let fiber = mv_fiber(&mv_class_of(&p.inertial_class())).len() as u64;
    if fiber != e {
        out.push(format!("MV fiber has {fiber} elements, expected {e}"));
    }
    let h = p.iota_hat();
    if !h.is_surjective() || h.kernel().order() != e {
        out.push(format!(
            "iota_hat surjective={} kernel={}, expected true/{e}",
            h.is_surjective(),
            h.kernel().order()
        ));
    }
    let c = sl_canonicalize(p);
    let members = l_packet(&c)
        .first()
        .and_then(|l| hp_sl_member(&c, &l.packet_index))
        .map_or(0, |m| m.len() as u64);
    if members != e {
        out.push(format!(
            "the packet's member head has {members} labels, expected {e}"
        ));
    }
    out
}

/// Laws of the finite abelian group substrate on random subgroups and
/// homomorphisms.
pub fn substrate(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = SuiteReport::new("groups");
    let mut rng = cfg.rng(3);
    for _ in 0..cfg.samples {
        let g = random_subgroup(&mut rng);
        let d = g.dual();
        r.check(
            d.dual().invariant_factors() == g.invariant_factors(),
            || format!("{g}: dual of dual has a different shape"),
        );
        r.check(d.order() == g.order(), || format!("{g}: |dual| != |G|"));
        let ok = d
            .elements()
            .filter(|chi| chi.iter().any(|&c| c != 0))
            .all(|chi| {
                g.elements()
                    .any(|x| !g.pair(&chi, &x).expect("in group").is_zero())
            });
        r.check(ok, || format!("{g}: pairing is degenerate"));

        let t = random_subgroup(&mut rng);
        let f = random_hom(&mut rng, g.clone(), t);
        let (ker, im) = f.kernel_image();
        r.check(ker.order() * im.order() == g.order(), || {
            format!("{g}: |ker| |im| != |source|")
        });
        r.check(
            ker.elements()
                .all(|x| f.apply(&x).is_some_and(|y| y.iter().all(|&c| c == 0))),
            || format!("{g}: kernel element with nonzero image"),
        );
        let fd = f.dual();
        let x = random_element(&mut rng, f.source());
        let chi = random_element(&mut rng, fd.source());
        let lhs = f.source().pair(&fd.apply(&chi).expect("in dual"), &x);
        let rhs = f.target().pair(&chi, &f.apply(&x).expect("in source"));
        r.check(lhs.is_some() && lhs == rhs, || {
            format!("{g}: dual map breaks the pairing")
        });
    }
    r
}

fn random_subgroup<R: Rng>(rng: &mut R) -> FinAbGroup {
    let k = rng.gen_range(1..=3);
    let ambient: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=12)).collect();
    let gens: Vec<Vec<u64>> = (0..rng.gen_range(0..=3))
        .map(|_| ambient.iter().map(|&m| rng.gen_range(0..m)).collect())
        .collect();
    FinAbGroup::generated_by(&ambient, &gens).expect("entries reduced")
}

fn random_element<R: Rng>(rng: &mut R, g: &FinAbGroup) -> Vec<u64> {
    let coords: Vec<u64> = g
        .invariant_factors()
        .iter()
        .map(|&d| rng.gen_range(0..d))
        .collect();
    g.element(&coords)
}

fn random_hom<R: Rng>(rng: &mut R, source: FinAbGroup, target: FinAbGroup) -> GroupHom {
    let images = source
        .invariant_factors()
        .iter()
        .map(|&d| {
            let y = random_element(rng, &target);
            let o = target.element_order(&y);
            target.scale(&y, o / crate::exact_groups::gcd(o, d))
        })
        .collect();
    GroupHom::new(source, target, images).expect("image orders divide source orders")
}
