//! Tame Langlands parameters for `GL_N`, encoded combinatorially.
//!
//! An indecomposable summand of a tame parameter `(ρ, E)` is recorded as a
//! [`TameSegment`]: the Frobenius orbit of its inertial character (a
//! [`CuspidalDatum`] of degree `d`), the phase `u` of the eigenvalue of
//! `Fr^d` on the induced block, and the size `l` of the Jordan block of
//! `E`. Frobenius acting on inertia by `q`-th powers is built into the
//! orbit encoding.
//!
//! Tame characters of `W_F` are pairs `(b, v)`: `b` indexes the character
//! of `k_F^*` they restrict to, and `v` is the phase of their value on
//! Frobenius. Twisting sends a block `(τ, u, l)` to
//! `(τ ⊗ χ_b, u + d v, l)`.
//!
//! Both component groups attached to a parameter are computed through the
//! stabilizers they are isomorphic to: the L-packet group through the
//! stabilizer of `(ρ, E)` in the tame characters of `W_F`, the inertial
//! group through the stabilizer of the inertial class in the characters of
//! `k_F^*`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cuspidal::{CuspidalDatum, FieldParams, ResidueCharacter};
use crate::error::{domain, Error, Result};
use crate::exact_groups::{gcd, lcm, FinAbGroup, GroupHom, Phase};
use crate::partition::{Partition, PartitionFn};
use crate::zelevinsky::{Multisegment, Segment};

/// A tame character `(b, v)` of `W_F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TameCharacter {
    pub inertial: ResidueCharacter,
    pub unramified: Phase,
}

impl TameCharacter {
    pub fn new(field: FieldParams, b: i128, v: Phase) -> Self {
        TameCharacter {
            inertial: ResidueCharacter::new(field, b),
            unramified: v,
        }
    }

    pub fn trivial(field: FieldParams) -> Self {
        Self::new(field, 0, Phase::ZERO)
    }

    pub fn compose(self, other: TameCharacter) -> Self {
        TameCharacter {
            inertial: self.inertial.compose(other.inertial),
            unramified: self.unramified + other.unramified,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TameSegment {
    pub cuspidal: CuspidalDatum,
    pub phase: Phase,
    pub length: u32,
}

impl TameSegment {
    pub fn dimension(&self) -> u64 {
        self.cuspidal.degree() as u64 * self.length as u64
    }

    pub fn twist(&self, chi: TameCharacter) -> TameSegment {
        TameSegment {
            cuspidal: self.cuspidal.twist(chi.inertial),
            phase: self.phase + chi.unramified.times(self.cuspidal.degree() as i128),
            length: self.length,
        }
    }
}

/// A tame parameter for `GL_N`, as a sorted multiset of blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TameParameter {
    field: FieldParams,
    n: u32,
    blocks: Vec<TameSegment>,
}

impl TameParameter {
    pub fn new(field: FieldParams, blocks: impl IntoIterator<Item = TameSegment>) -> Result<Self> {
        let mut blocks: Vec<TameSegment> = blocks.into_iter().collect();
        if blocks.is_empty() {
            return domain("a tame parameter needs at least one block");
        }
        for b in &blocks {
            if b.length == 0 {
                return domain("Jordan block length must be at least 1");
            }
            if b.cuspidal.q() != field.q() {
                return domain(format!(
                    "block {} belongs to q = {}",
                    b.cuspidal,
                    b.cuspidal.q()
                ));
            }
        }
        let n: u64 = blocks.iter().map(TameSegment::dimension).sum();
        let n = u32::try_from(n).map_err(|_| Error::Capacity(format!("dimension {n}")))?;
        blocks.sort();
        Ok(TameParameter { field, n, blocks })
    }

    pub fn field(&self) -> FieldParams {
        self.field
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[TameSegment] {
        &self.blocks
    }

    pub fn twist(&self, chi: TameCharacter) -> TameParameter {
        let mut blocks: Vec<TameSegment> = self.blocks.iter().map(|b| b.twist(chi)).collect();
        blocks.sort();
        TameParameter {
            field: self.field,
            n: self.n,
            blocks,
        }
    }

    /// `L = N * lcm(phase denominators)`. A twist `(b, v)` fixing the
    /// parameter fixes the sum of its weighted phases, which moves by
    /// `N v`; so `v` lies in `(1/L) Z / Z`.
    pub fn unramified_bound(&self) -> u64 {
        let den = self
            .blocks
            .iter()
            .fold(1, |acc, b| lcm(acc, b.phase.denominator()));
        self.n as u64 * den
    }

    /// Ambient product `Z/(q-1) x Z/L` holding every stabilizing twist;
    /// `(b, k)` stands for the character `(b, k/L)`.
    pub fn twist_ambient(&self) -> [u64; 2] {
        [self.field.units(), self.unramified_bound()]
    }

    pub fn character_at(&self, element: &[u64]) -> TameCharacter {
        let [_, l] = self.twist_ambient();
        TameCharacter::new(
            self.field,
            element[0] as i128,
            Phase::new(element[1] as i128, l).expect("L >= 1"),
        )
    }

    /// `{χ : ρ ⊗ χ ≅ ρ}`, found by sweeping the finite ambient.
    pub fn stab_full(&self) -> FinAbGroup {
        let ambient = self.twist_ambient();
        let mut gens = Vec::new();
        for b in 0..ambient[0] {
            for k in 0..ambient[1] {
                let chi = self.character_at(&[b, k]);
                if self.twist(chi) == *self {
                    gens.push(vec![b, k]);
                }
            }
        }
        FinAbGroup::generated_by(&ambient, &gens).expect("ambient moduli >= 1")
    }

    /// The Macdonald label of the `I_F`-class: Frobenius phases dropped,
    /// Jordan lengths grouped by inertial orbit.
    pub fn inertial_class(&self) -> PartitionFn {
        let mut lengths: BTreeMap<CuspidalDatum, Vec<u32>> = BTreeMap::new();
        for b in &self.blocks {
            lengths.entry(b.cuspidal).or_default().push(b.length);
        }
        PartitionFn::new(
            self.field,
            lengths.into_iter().map(|(t, l)| (t, Partition::new(l))),
        )
        .expect("blocks share the field")
    }

    pub fn drop_phases(&self) -> Multisegment {
        Multisegment::new(
            self.field,
            self.blocks.iter().map(|b| Segment {
                cuspidal: b.cuspidal,
                length: b.length,
            }),
        )
        .expect("blocks are valid segments")
    }

    pub fn component_group_l(&self) -> ComponentGroup {
        ComponentGroup::new(ComponentKind::LPacket, self.stab_full())
    }

    pub fn component_group_inertial(&self) -> ComponentGroup {
        ComponentGroup::new(ComponentKind::Inertial, self.inertial_class().stabilizer())
    }

    /// The map between component groups induced by inclusion of
    /// centralizers; on stabilizers it forgets the unramified part.
    pub fn iota(&self) -> GroupHom {
        self.try_iota()
            .expect("a stabilizing twist stabilizes the inertial class")
    }

    /// [`iota`](Self::iota), reporting instead of panicking when some
    /// stabilizing twist fails to land in the inertial stabilizer.
    pub fn try_iota(&self) -> Result<GroupHom> {
        let source = self.stab_full();
        let target = self.inertial_class().stabilizer();
        GroupHom::from_fn(source, target, |x| vec![x[0]])
    }

    /// Dual of [`iota`](Self::iota), from the characters of the inertial
    /// component group to those of the L-packet component group.
    pub fn iota_hat(&self) -> GroupHom {
        self.iota().dual()
    }

    pub fn to_json(&self) -> TameParameterJson {
        TameParameterJson {
            n: self.n,
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockJson {
                    d: b.cuspidal.degree(),
                    length: b.length,
                    orbit: b.cuspidal.orbit_rep(),
                    u: b.phase,
                })
                .collect(),
            q: self.field.q(),
        }
    }

    pub fn from_json(doc: &TameParameterJson) -> Result<Self> {
        let field = FieldParams::new(doc.q)?;
        let blocks = doc
            .blocks
            .iter()
            .map(|b| {
                Ok(TameSegment {
                    cuspidal: CuspidalDatum::new(field, b.d, b.orbit)?,
                    phase: b.u,
                    length: b.length,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let p = TameParameter::new(field, blocks)?;
        if p.n != doc.n {
            return Err(Error::Parse(format!(
                "blocks have total dimension {}, document says N = {}",
                p.n, doc.n
            )));
        }
        Ok(p)
    }
}

impl fmt::Display for TameParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("({} u={} l={})", b.cuspidal, b.phase, b.length))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `{"N", "blocks": [{"d", "length", "orbit", "u": "num/den"}], "q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TameParameterJson {
    #[serde(rename = "N")]
    pub n: u32,
    pub blocks: Vec<BlockJson>,
    pub q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockJson {
    pub d: u32,
    pub length: u32,
    pub orbit: u64,
    pub u: Phase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    /// `A(ρ, E)`, whose characters index the L-packet.
    LPacket,
    /// `A(ρ|_{I_F}, ρ(Fr) C⁰, E)`, whose characters index the
    /// Macdonald–Vogan fiber.
    Inertial,
}

/// A component group, given abstractly and through the stabilizer it is
/// isomorphic to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGroup {
    pub group: FinAbGroup,
    pub kind: ComponentKind,
    pub witness: FinAbGroup,
}

impl ComponentGroup {
    fn new(kind: ComponentKind, witness: FinAbGroup) -> Self {
        let group = FinAbGroup::from_invariant_factors(witness.invariant_factors())
            .expect("invariant factors form a chain");
        ComponentGroup {
            group,
            kind,
            witness,
        }
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }
}

pub fn twist_parameter(p: &TameParameter, chi: TameCharacter) -> TameParameter {
    p.twist(chi)
}

pub fn stab_full(p: &TameParameter) -> FinAbGroup {
    p.stab_full()
}

pub fn inertial_class(p: &TameParameter) -> PartitionFn {
    p.inertial_class()
}

pub fn drop_phases(p: &TameParameter) -> Multisegment {
    p.drop_phases()
}

/// `ρ|_{I_F}` trivial, `ρ(Fr) = diag(1, ζ, …, ζ^{N-1})` with `ζ` a
/// primitive `N`-th root of unity, `E = 0`.
pub fn make_example1(field: FieldParams, n: u32) -> Result<TameParameter> {
    if n < 2 {
        return domain(format!("example 1 needs N >= 2, got {n}"));
    }
    let triv = CuspidalDatum::trivial(field);
    TameParameter::new(
        field,
        (0..n).map(|j| TameSegment {
            cuspidal: triv,
            phase: Phase::new(j as i128, n as u64).expect("n >= 2"),
            length: 1,
        }),
    )
}

/// Same as [`make_example2_with_offset`] with offset 1.
pub fn make_example2(field: FieldParams, n: u32, e: u32) -> Result<TameParameter> {
    make_example2_with_offset(field, n, e, 1)
}

/// `ρ(I_F)` generated by `diag(1_{N/e}, ζ 1_{N/e}, …, ζ^{e-1} 1_{N/e})`
/// with `ζ` of order `e`, `ρ(Fr)` regular in the torus, `E = 0`.
///
/// Block `(i, j)` (`0 <= i < e`, `0 <= j < N/e`) has inertial index
/// `i (q-1)/e` and phase `(i N/e + j) / (N + offset)`. For any
/// `offset >= 1` the `N` phases occupy `N` consecutive slots of a cycle of
/// length `N + offset`, so no nonzero translation preserves them and the
/// centralizer of `ρ(Fr)` in `PGL_N` is the torus alone.
pub fn make_example2_with_offset(
    field: FieldParams,
    n: u32,
    e: u32,
    offset: u64,
) -> Result<TameParameter> {
    let units = field.units();
    if e <= 1 || !n.is_multiple_of(e) || !units.is_multiple_of(e as u64) {
        return domain(format!(
            "example 2 needs 1 < e dividing gcd(q - 1, N) = {}, got e = {e}",
            gcd(units, n as u64)
        ));
    }
    if offset == 0 {
        return domain("phase offset must be at least 1");
    }
    let per = n / e;
    let den = n as u64 + offset;
    let mut blocks = Vec::with_capacity(n as usize);
    for i in 0..e {
        let cuspidal = CuspidalDatum::new(field, 1, i as u64 * (units / e as u64))?;
        for j in 0..per {
            blocks.push(TameSegment {
                cuspidal,
                phase: Phase::new((i * per + j) as i128, den)?,
                length: 1,
            });
        }
    }
    TameParameter::new(field, blocks)
}
