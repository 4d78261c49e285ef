//! Multisegments of depth-zero representations of `GL_N(F)`, read through
//! the unramified-twist classes of their cuspidal supports, and the head of
//! parahoric restriction they determine.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cuspidal::{CuspidalDatum, FieldParams, ResidueCharacter};
use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionFn};

/// `Δ(τ, l)` with the unramified twist of `τ` forgotten.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub cuspidal: CuspidalDatum,
    pub length: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multisegment {
    field: FieldParams,
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(field: FieldParams, segments: impl IntoIterator<Item = Segment>) -> Result<Self> {
        let mut segments: Vec<Segment> = segments.into_iter().collect();
        for s in &segments {
            if s.length == 0 {
                return Err(Error::Domain("segment length must be at least 1".into()));
            }
            if s.cuspidal.q() != field.q() {
                return Err(Error::Domain(format!(
                    "cuspidal {} belongs to q = {}",
                    s.cuspidal,
                    s.cuspidal.q()
                )));
            }
        }
        segments.sort();
        Ok(Multisegment { field, segments })
    }

    pub fn field(&self) -> FieldParams {
        self.field
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// `sum d(τ) l`.
    pub fn degree(&self) -> u64 {
        self.segments
            .iter()
            .map(|s| s.cuspidal.degree() as u64 * s.length as u64)
            .sum()
    }

    /// `Λ(τ)` is the partition formed by the lengths of the segments on `τ`.
    pub fn lambda(&self) -> PartitionFn {
        let mut lengths: BTreeMap<CuspidalDatum, Vec<u32>> = BTreeMap::new();
        for s in &self.segments {
            lengths.entry(s.cuspidal).or_default().push(s.length);
        }
        PartitionFn::new(
            self.field,
            lengths.into_iter().map(|(t, l)| (t, Partition::new(l))),
        )
        .expect("segments share the field")
    }

    pub fn twist(&self, chi: ResidueCharacter) -> Multisegment {
        let mut segments: Vec<Segment> = self
            .segments
            .iter()
            .map(|s| Segment {
                cuspidal: s.cuspidal.twist(chi),
                length: s.length,
            })
            .collect();
        segments.sort();
        Multisegment {
            field: self.field,
            segments,
        }
    }

    pub fn to_json(&self) -> MultisegmentJson {
        MultisegmentJson {
            q: self.field.q(),
            segments: self
                .segments
                .iter()
                .map(|s| SegmentJson {
                    d: s.cuspidal.degree(),
                    length: s.length,
                    orbit: s.cuspidal.orbit_rep(),
                })
                .collect(),
        }
    }

    pub fn from_json(doc: &MultisegmentJson) -> Result<Self> {
        let field = FieldParams::new(doc.q)?;
        let segments = doc
            .segments
            .iter()
            .map(|s| {
                Ok(Segment {
                    cuspidal: CuspidalDatum::new(field, s.d, s.orbit)?,
                    length: s.length,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Multisegment::new(field, segments)
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .segments
            .iter()
            .map(|s| format!("[{} x{}]", s.cuspidal, s.length))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultisegmentJson {
    pub q: u64,
    pub segments: Vec<SegmentJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentJson {
    pub d: u32,
    pub length: u32,
    pub orbit: u64,
}

pub fn lambda_of(ms: &Multisegment) -> PartitionFn {
    ms.lambda()
}

/// Label of the head of parahoric restriction: the irreducible of
/// `GL_N(F_q)` indexed by `Λ_π` itself.
pub fn hp_gl(ms: &Multisegment) -> PartitionFn {
    ms.lambda()
}

pub fn twist_multisegment(ms: &Multisegment, chi: ResidueCharacter) -> Multisegment {
    ms.twist(chi)
}

/// All `Λ` with `Λ <= Λ_π` in the order of
/// [`PartitionFn::dominance_leq`], `Λ_π` included exactly once.
///
/// For tempered `π` these label exactly the constituents of parahoric
/// restriction; in general the list is a superset of them.
pub fn constituent_lower_set(lambda_pi: &PartitionFn) -> Vec<PartitionFn> {
    let field = lambda_pi.field();
    let mut acc: Vec<Vec<(CuspidalDatum, Partition)>> = vec![Vec::new()];
    for (tau, mu) in lambda_pi.entries() {
        // Λ(τ) must dominate Λ_π(τ).
        let options: Vec<Partition> = Partition::all(mu.size())
            .into_iter()
            .filter(|p| mu.dominated_by(p))
            .collect();
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push((*tau, p.clone()));
                    next
                })
            })
            .collect();
    }
    let mut out: Vec<PartitionFn> = acc
        .into_iter()
        .map(|entries| PartitionFn::new(field, entries).expect("distinct cuspidals"))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> FieldParams {
        FieldParams::new(q).unwrap()
    }

    fn seg(q: u64, d: u32, a: u64, length: u32) -> Segment {
        Segment {
            cuspidal: CuspidalDatum::new(f(q), d, a).unwrap(),
            length,
        }
    }

    fn pf(q: u64, entries: &[(CuspidalDatum, &[u32])]) -> PartitionFn {
        PartitionFn::new(
            f(q),
            entries
                .iter()
                .map(|(t, p)| (*t, Partition::new(p.to_vec()))),
        )
        .unwrap()
    }

    #[test]
    fn lambda_examples() {
        let triv = CuspidalDatum::trivial(f(3));
        let chi = CuspidalDatum::new(f(3), 1, 1).unwrap();
        let one = Multisegment::new(f(3), [seg(3, 1, 0, 2)]).unwrap();
        assert_eq!(lambda_of(&one), pf(3, &[(triv, &[2])]));
        let two = Multisegment::new(f(3), [seg(3, 1, 0, 1), seg(3, 1, 0, 1)]).unwrap();
        assert_eq!(lambda_of(&two), pf(3, &[(triv, &[1, 1])]));
        let mixed = Multisegment::new(f(3), [seg(3, 1, 0, 1), seg(3, 1, 1, 1)]).unwrap();
        assert_eq!(lambda_of(&mixed), pf(3, &[(triv, &[1]), (chi, &[1])]));
        for ms in [&one, &two, &mixed] {
            assert_eq!(hp_gl(ms), lambda_of(ms));
            assert_eq!(lambda_of(ms).degree(), ms.degree());
        }
    }

    #[test]
    fn lower_set_follows_the_reversed_order() {
        let triv = CuspidalDatum::trivial(f(3));
        // Λ <= {triv -> (2)} forces Λ(triv) to dominate (2): only (2) itself.
        assert_eq!(constituent_lower_set(&pf(3, &[(triv, &[2])])).len(), 1);
        // {triv -> (1,1)}: both (1,1) and (2) dominate (1,1).
        let low = constituent_lower_set(&pf(3, &[(triv, &[1, 1])]));
        assert_eq!(low, vec![pf(3, &[(triv, &[1, 1])]), pf(3, &[(triv, &[2])])]);
        assert_eq!(constituent_lower_set(&pf(3, &[(triv, &[1])])).len(), 1);
        // (1,1,1) is dominated by all three partitions of 3.
        let low3 = constituent_lower_set(&pf(3, &[(triv, &[1, 1, 1])]));
        let parts: Vec<Vec<u32>> = low3
            .iter()
            .map(|m| m.get(&triv).unwrap().parts().to_vec())
            .collect();
        assert_eq!(parts, vec![vec![1, 1, 1], vec![2, 1], vec![3]]);
    }

    #[test]
    fn lower_set_contains_lambda_pi_once_and_is_a_product() {
        let triv = CuspidalDatum::trivial(f(5));
        let chi = CuspidalDatum::new(f(5), 1, 2).unwrap();
        let lam = pf(5, &[(triv, &[1, 1, 1]), (chi, &[2, 1, 1])]);
        let low = constituent_lower_set(&lam);
        // 3 partitions above (1,1,1) times 4 above (2,1,1) in dominance.
        assert_eq!(low.len(), 3 * 4);
        assert_eq!(low.iter().filter(|m| **m == lam).count(), 1);
        for m in &low {
            assert!(m.dominance_leq(&lam));
            for (t, p) in lam.entries() {
                assert_eq!(m.get(t).unwrap().size(), p.size());
            }
        }
    }

    #[test]
    fn twist_examples() {
        let ms = Multisegment::new(f(3), [seg(3, 1, 0, 2)]).unwrap();
        assert_eq!(ms.twist(ResidueCharacter::trivial(f(3))), ms);
        let shifted = ms.twist(ResidueCharacter::new(f(3), 1));
        assert_eq!(shifted, Multisegment::new(f(3), [seg(3, 1, 1, 2)]).unwrap());

        let cusp = Multisegment::new(f(3), [seg(3, 2, 1, 1)]).unwrap();
        let t = cusp.twist(ResidueCharacter::new(f(3), 1));
        assert_eq!(t.segments()[0].cuspidal.orbit(), vec![5, 7]);
    }

    #[test]
    fn json_round_trip_and_errors() {
        let ms = Multisegment::new(f(3), [seg(3, 2, 1, 1), seg(3, 1, 0, 2)]).unwrap();
        let s = serde_json::to_string(&ms.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"q":3,"segments":[{"d":1,"length":2,"orbit":0},{"d":2,"length":1,"orbit":1}]}"#
        );
        let doc: MultisegmentJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Multisegment::from_json(&doc).unwrap(), ms);
        assert!(Multisegment::new(f(3), [seg(3, 1, 0, 0)]).is_err());
    }
}
