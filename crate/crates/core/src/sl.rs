//! The `SL_N` side: Macdonald–Vogan classes and their fibers, L-packets of
//! tame parameters, and the head of parahoric restriction for packets and
//! their members.
//!
//! Irreducibles of `SL_N(F_q)` in a fiber are never named as
//! representations. They are torsor coordinates: elements of the dual of
//! the stabilizer, measured from a base point. The base point here is the
//! trivial character at the canonical orbit representative. This choice
//! is a convention and carries no intrinsic meaning.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::cuspidal::FieldParams;
use crate::error::Result;
use crate::exact_groups::{Element, FinAbGroup, GroupHom, Phase};
use crate::partition::{orbits_and_stabilizers, PartitionFn};
use crate::tame::{TameCharacter, TameParameter};
use crate::zelevinsky::hp_gl;

/// A `k_F^*`-orbit of partition-valued functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MVClass {
    pub representative: PartitionFn,
    pub stab: FinAbGroup,
}

impl MVClass {
    pub fn fiber_size(&self) -> u64 {
        self.stab.order()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SLIrrepLabel {
    pub mv_class: MVClass,
    pub torsor_index: Element,
}

/// A tame parameter up to twisting by characters of `W_F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SLParameterClass {
    pub canonical: TameParameter,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LPacketLabel {
    pub sl_param: SLParameterClass,
    pub packet_index: Element,
}

pub fn mv_class_of(m: &PartitionFn) -> MVClass {
    MVClass {
        representative: m.orbit_min(),
        stab: m.stabilizer(),
    }
}

pub fn mv_fiber(c: &MVClass) -> Vec<SLIrrepLabel> {
    c.stab
        .dual()
        .elements()
        .map(|torsor_index| SLIrrepLabel {
            mv_class: c.clone(),
            torsor_index,
        })
        .collect()
}

/// Number of irreducibles of `SL_N(F_q)`: each MV class contributes one
/// label per element of the dual of its stabilizer.
pub fn sl_census(field: FieldParams, n: u32) -> Result<u64> {
    Ok(orbits_and_stabilizers(field, n)?
        .iter()
        .map(|o| o.stabilizer.order())
        .sum())
}

/// Lexicographic minimum over the twists that bring the phase of some block
/// to zero.
///
/// That set of twists is a union of finitely many cosets and does not
/// depend on the chosen orbit member, so the minimum is an orbit invariant.
pub fn sl_canonicalize(p: &TameParameter) -> SLParameterClass {
    let field = p.field();
    let mut best: Option<TameParameter> = None;
    let mut seen_anchor = BTreeSet::new();
    for block in p.blocks() {
        let d = block.cuspidal.degree();
        if !seen_anchor.insert((d, block.phase)) {
            continue;
        }
        for v in (-block.phase).divide(d as u64) {
            for b in 0..field.units() {
                let t = p.twist(TameCharacter::new(field, b as i128, v));
                if best.as_ref().is_none_or(|cur| t < *cur) {
                    best = Some(t);
                }
            }
        }
    }
    SLParameterClass {
        canonical: best.expect("parameters have at least one block"),
    }
}

pub fn l_packet(c: &SLParameterClass) -> Vec<LPacketLabel> {
    c.canonical
        .stab_full()
        .dual()
        .elements()
        .map(|packet_index| LPacketLabel {
            sl_param: c.clone(),
            packet_index,
        })
        .collect()
}

/// The MV class attached to the whole packet `π^⊕`.
pub fn hp_sl_packet(c: &SLParameterClass) -> MVClass {
    mv_class_of(&c.canonical.inertial_class())
}

/// Inertial extraction commutes with passing to `SL_N`: the MV class of
/// the head of restriction of the `GL_N` representation agrees with the
/// one read off the canonical `SL_N` parameter.
pub fn check_compatibility_packet(p: &TameParameter) -> bool {
    let via_gl = mv_class_of(&hp_gl(&p.drop_phases()));
    let via_sl = hp_sl_packet(&sl_canonicalize(p));
    via_gl == via_sl
}

/// Torsor indices `ι̂⁻¹(ψ)`. Returns `None` when `ψ` is not a character of
/// the L-packet component group.
pub fn hp_sl_member(c: &SLParameterClass, psi: &[u64]) -> Option<Vec<SLIrrepLabel>> {
    let iota_hat = c.canonical.iota_hat();
    let class = hp_sl_packet(c);
    member_indices(&iota_hat, psi).map(|indices| {
        indices
            .into_iter()
            .map(|torsor_index| SLIrrepLabel {
                mv_class: class.clone(),
                torsor_index,
            })
            .collect()
    })
}

fn member_indices(iota_hat: &GroupHom, psi: &[u64]) -> Option<Vec<Element>> {
    if !iota_hat.target().contains(psi) {
        return None;
    }
    let mut indices = iota_hat
        .preimage_coset(psi)
        .map(|coset| coset.elements())
        .unwrap_or_default();
    indices.sort();
    Some(indices)
}

/// The member heads `hp_sl_member(c, ψ)` are pairwise disjoint and together
/// exhaust the MV fiber of the packet.
pub fn check_finalcomp(c: &SLParameterClass) -> bool {
    let iota_hat = c.canonical.iota_hat();
    let class = hp_sl_packet(c);
    // The fiber of the packet's class is indexed by the same dual group
    // that ι̂ starts from.
    if class.stab.dual() != *iota_hat.source() {
        return false;
    }
    let fiber: BTreeSet<Element> = mv_fiber(&class)
        .into_iter()
        .map(|l| l.torsor_index)
        .collect();
    let packet: Vec<Element> = c.canonical.stab_full().dual().elements().collect();
    let mut covered = BTreeSet::new();
    let mut total = 0usize;
    for psi in &packet {
        let Some(members) = member_indices(&iota_hat, psi) else {
            return false;
        };
        total += members.len();
        covered.extend(members);
    }
    total == covered.len() && covered == fiber
}

/// Moving the base point of the fiber by `ψ̄₀` moves the member heads by
/// the same amount and their packet labels by `ι̂(ψ̄₀)`. Checked for every
/// `ψ` and `ψ̄₀`.
pub fn check_member_equivariance(c: &SLParameterClass) -> bool {
    let iota_hat = c.canonical.iota_hat();
    let fiber_dual = iota_hat.source().clone();
    let packet_dual = iota_hat.target().clone();
    for psi in packet_dual.elements() {
        let Some(base) = member_indices(&iota_hat, &psi) else {
            return false;
        };
        for shift in fiber_dual.elements() {
            let moved_psi = packet_dual.add(&psi, &iota_hat.apply(&shift).expect("in source"));
            let Some(moved) = member_indices(&iota_hat, &moved_psi) else {
                return false;
            };
            let got: BTreeSet<Element> = moved.into_iter().collect();
            let want: BTreeSet<Element> = base.iter().map(|x| fiber_dual.add(x, &shift)).collect();
            if got != want {
                return false;
            }
        }
    }
    true
}

/// Census record with keys in sorted order.
pub fn census_json(field: FieldParams, n: u32) -> Result<Value> {
    let classes: Vec<Value> = orbits_and_stabilizers(field, n)?
        .into_iter()
        .map(|o| {
            let class = MVClass {
                representative: o.representative,
                stab: o.stabilizer,
            };
            let fiber: Vec<Element> = mv_fiber(&class)
                .into_iter()
                .map(|l| l.torsor_index)
                .collect();
            json!({
                "fiber": fiber,
                "representative": class.representative.to_json(),
                "stab_order": class.stab.order(),
            })
        })
        .collect();
    Ok(json!({ "N": n, "classes": classes, "q": field.q() }))
}

/// Canonical twist bringing `p` to its class representative, if one is
/// wanted explicitly.
pub fn normalizing_twist(p: &TameParameter) -> Option<TameCharacter> {
    let target = sl_canonicalize(p).canonical;
    let field = p.field();
    p.blocks().iter().find_map(|block| {
        (-block.phase)
            .divide(block.cuspidal.degree() as u64)
            .into_iter()
            .flat_map(|v: Phase| {
                (0..field.units()).map(move |b| TameCharacter::new(field, b as i128, v))
            })
            .find(|chi| p.twist(*chi) == target)
    })
}
