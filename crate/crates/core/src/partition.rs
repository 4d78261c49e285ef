//! Partitions, partition-valued functions on cuspidal data, and the action
//! of `k_F^*`-characters on them.
//!
//! A degree-`N` [`PartitionFn`] labels an irreducible representation of
//! `GL_N(F_q)` and, through the Macdonald correspondence, an inertial
//! class of tame parameters.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cuspidal::{enumerate_cuspidals, CuspidalDatum, FieldParams, ResidueCharacter};
use crate::error::{Error, Result};
use crate::exact_groups::FinAbGroup;

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(n)`.
    pub fn row(n: u32) -> Self {
        Partition::new(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition::new(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Usual dominance `self <=_dom other`: equal sizes and every partial
    /// sum of `self` bounded by the corresponding one of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finitely supported map from cuspidal data to partitions.
///
/// Only nonempty partitions are stored, so equality is equality of the
/// functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionFn {
    field: FieldParams,
    entries: BTreeMap<CuspidalDatum, Partition>,
    degree: u64,
}

impl PartitionFn {
    pub fn new(
        field: FieldParams,
        entries: impl IntoIterator<Item = (CuspidalDatum, Partition)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<CuspidalDatum, Partition> = BTreeMap::new();
        for (tau, lambda) in entries {
            if tau.q() != field.q() {
                return Err(Error::Domain(format!(
                    "cuspidal {tau} belongs to q = {}, not {}",
                    tau.q(),
                    field.q()
                )));
            }
            if lambda.is_empty() {
                continue;
            }
            if map.insert(tau, lambda).is_some() {
                return Err(Error::Domain(format!("cuspidal {tau} listed twice")));
            }
        }
        Ok(Self::from_map(field, map))
    }

    fn from_map(field: FieldParams, entries: BTreeMap<CuspidalDatum, Partition>) -> Self {
        let degree = entries
            .iter()
            .map(|(t, l)| t.degree() as u64 * l.size() as u64)
            .sum();
        PartitionFn {
            field,
            entries,
            degree,
        }
    }

    pub fn empty(field: FieldParams) -> Self {
        Self::from_map(field, BTreeMap::new())
    }

    pub fn field(&self) -> FieldParams {
        self.field
    }

    /// `sum d(tau) |M(tau)|`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn get(&self, tau: &CuspidalDatum) -> Option<&Partition> {
        self.entries.get(tau)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CuspidalDatum, &Partition)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &CuspidalDatum> {
        self.entries.keys()
    }

    /// `(chi M)(tau) = M(tau ⊗ chi^{-1} ∘ det)`: the support moves by `chi`.
    pub fn twist(&self, chi: ResidueCharacter) -> PartitionFn {
        let entries = self
            .entries
            .iter()
            .map(|(t, l)| (t.twist(chi), l.clone()))
            .collect();
        PartitionFn {
            field: self.field,
            entries,
            degree: self.degree,
        }
    }

    /// The order on partition-valued functions used to bound the
    /// constituents of parahoric restriction: `self <= other` iff both have
    /// the same sizes on every cuspidal and `other(tau)` is dominated by
    /// `self(tau)` everywhere.
    ///
    /// Note the reversal: the function that is *larger* here is the one
    /// whose partitions are *lower* in the usual dominance order. See
    /// [`pointwise_dominated_by`](Self::pointwise_dominated_by) for the
    /// unreversed relation.
    pub fn dominance_leq(&self, other: &PartitionFn) -> bool {
        other.pointwise_dominated_by(self)
    }

    /// `self(tau) <=_dom other(tau)` for every cuspidal, with equal sizes.
    pub fn pointwise_dominated_by(&self, other: &PartitionFn) -> bool {
        if self.field != other.field {
            return false;
        }
        let keys: BTreeSet<&CuspidalDatum> =
            self.entries.keys().chain(other.entries.keys()).collect();
        let empty = Partition::empty();
        keys.into_iter().all(|t| {
            let a = self.entries.get(t).unwrap_or(&empty);
            let b = other.entries.get(t).unwrap_or(&empty);
            a.dominated_by(b)
        })
    }

    /// `{b : chi_b M = M}` inside `Z/(q-1)`; always cyclic.
    pub fn stabilizer(&self) -> FinAbGroup {
        let gens: Vec<Vec<u64>> = ResidueCharacter::all(self.field)
            .filter(|&chi| self.twist(chi) == *self)
            .map(|chi| vec![chi.index()])
            .collect();
        FinAbGroup::generated_by(&[self.field.units()], &gens).expect("modulus q-1 >= 1")
    }

    /// The minimum of the `k_F^*`-orbit under [`Ord`].
    pub fn orbit_min(&self) -> PartitionFn {
        ResidueCharacter::all(self.field)
            .map(|chi| self.twist(chi))
            .min()
            .expect("k_F^* is nonempty")
    }

    pub fn orbit(&self) -> BTreeSet<PartitionFn> {
        ResidueCharacter::all(self.field)
            .map(|chi| self.twist(chi))
            .collect()
    }

    pub fn to_json(&self) -> PartitionFnJson {
        PartitionFnJson {
            q: self.field.q(),
            entries: self
                .entries
                .iter()
                .map(|(t, l)| EntryJson {
                    d: t.degree(),
                    orbit: t.orbit_rep(),
                    partition: l.parts().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(doc: &PartitionFnJson) -> Result<Self> {
        let field = FieldParams::new(doc.q)?;
        let mut entries = Vec::with_capacity(doc.entries.len());
        for e in &doc.entries {
            let tau = CuspidalDatum::new(field, e.d, e.orbit)?;
            if tau.orbit_rep() != e.orbit {
                return Err(Error::Parse(format!(
                    "orbit {} is not the minimal representative {}",
                    e.orbit,
                    tau.orbit_rep()
                )));
            }
            entries.push((tau, Partition::new(e.partition.clone())));
        }
        PartitionFn::new(field, entries)
    }
}

// Support first, then partitions, so that orbit minima are stable.
impl Ord for PartitionFn {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.entries.keys().cmp(other.entries.keys()))
            .then_with(|| self.entries.values().cmp(other.entries.values()))
    }
}

impl PartialOrd for PartitionFn {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartitionFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(t, l)| format!("{t}={l}"))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// Canonical JSON form: `{"entries": [{"d", "orbit", "partition"}], "q"}`,
/// entries sorted by `(d, orbit)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionFnJson {
    pub entries: Vec<EntryJson>,
    pub q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub d: u32,
    pub orbit: u64,
    pub partition: Vec<u32>,
}

pub fn degree(m: &PartitionFn) -> u64 {
    m.degree()
}

pub fn dominance_leq(a: &PartitionFn, b: &PartitionFn) -> bool {
    a.dominance_leq(b)
}

pub fn twist_fn(m: &PartitionFn, chi: ResidueCharacter) -> PartitionFn {
    m.twist(chi)
}

pub fn stabilizer(m: &PartitionFn) -> FinAbGroup {
    m.stabilizer()
}

/// Every partition-valued function of degree `n`, sorted.
///
/// This is the census of irreducible representations of `GL_n(F_q)`.
pub fn enumerate_degree(field: FieldParams, n: u32) -> Result<Vec<PartitionFn>> {
    let mut cuspidals = Vec::new();
    for d in 1..=n {
        cuspidals.extend(enumerate_cuspidals(field, d)?);
    }
    fn go(
        cuspidals: &[CuspidalDatum],
        start: usize,
        rest: u32,
        current: &mut BTreeMap<CuspidalDatum, Partition>,
        field: FieldParams,
        out: &mut Vec<PartitionFn>,
    ) {
        if rest == 0 {
            out.push(PartitionFn::from_map(field, current.clone()));
            return;
        }
        for (i, &tau) in cuspidals.iter().enumerate().skip(start) {
            let d = tau.degree();
            for size in 1..=rest / d {
                for lambda in Partition::all(size) {
                    current.insert(tau, lambda);
                    go(cuspidals, i + 1, rest - d * size, current, field, out);
                    current.remove(&tau);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(&cuspidals, 0, n, &mut BTreeMap::new(), field, &mut out);
    out.sort();
    Ok(out)
}

/// A `k_F^*`-orbit of partition-valued functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistOrbit {
    pub representative: PartitionFn,
    pub stabilizer: FinAbGroup,
    pub orbit_len: u64,
}

/// One entry per orbit, keyed by the orbit minimum, with its stabilizer.
pub fn orbits_and_stabilizers(field: FieldParams, n: u32) -> Result<Vec<TwistOrbit>> {
    let mut seen: BTreeSet<PartitionFn> = BTreeSet::new();
    let mut out = Vec::new();
    for m in enumerate_degree(field, n)? {
        if seen.contains(&m) {
            continue;
        }
        let orbit = m.orbit();
        let representative = orbit.iter().next().expect("orbit contains m").clone();
        let stab = representative.stabilizer();
        let orbit_len = orbit.len() as u64;
        if orbit_len * stab.order() != field.units() {
            return Err(Error::Domain(format!(
                "orbit-stabilizer violated at {representative}: {orbit_len} * {} != {}",
                stab.order(),
                field.units()
            )));
        }
        seen.extend(orbit);
        out.push(TwistOrbit {
            representative,
            stabilizer: stab,
            orbit_len,
        });
    }
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}
