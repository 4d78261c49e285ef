use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use macvogan::cuspidal::{FieldParams, ResidueCharacter};
use macvogan::exact_groups::{lcm, Phase};
use macvogan::partition::{enumerate_degree, PartitionFn, PartitionFnJson};
use macvogan::random::{random_multisegment, random_parameter};
use macvogan::sl::{
    check_compatibility_packet, check_finalcomp, check_member_equivariance, hp_sl_packet, l_packet,
    mv_class_of, mv_fiber, sl_canonicalize,
};
use macvogan::tame::{TameCharacter, TameParameter, TameParameterJson};
use macvogan::zelevinsky::{constituent_lower_set, hp_gl, Multisegment, MultisegmentJson};

fn field(q: u64) -> FieldParams {
    FieldParams::new(q).unwrap()
}

fn arb_field() -> impl Strategy<Value = FieldParams> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]).prop_map(field)
}

fn arb_parameter() -> impl Strategy<Value = TameParameter> {
    (
        prop::sample::select(vec![2u64, 3, 5, 7]),
        1u32..=5,
        any::<u64>(),
    )
        .prop_map(|(q, n, seed)| {
            random_parameter(&mut ChaCha8Rng::seed_from_u64(seed), field(q), n)
        })
}

fn arb_multisegment() -> impl Strategy<Value = Multisegment> {
    (arb_field(), 1u32..=5, any::<u64>())
        .prop_map(|(f, n, seed)| random_multisegment(&mut ChaCha8Rng::seed_from_u64(seed), f, n))
}

fn arb_character(f: FieldParams) -> impl Strategy<Value = TameCharacter> {
    (0..f.units() as i128, 1u64..=24, any::<i128>()).prop_map(move |(b, den, k)| {
        TameCharacter::new(f, b, Phase::new(k.rem_euclid(den as i128), den).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parameter_twists_form_an_action(
        (p, a, b) in arb_parameter().prop_flat_map(|p| {
            let f = p.field();
            (Just(p), arb_character(f), arb_character(f))
        })
    ) {
        prop_assert_eq!(p.twist(TameCharacter::trivial(p.field())), p.clone());
        prop_assert_eq!(p.twist(a).twist(b), p.twist(a.compose(b)));
        prop_assert_eq!(p.twist(a).dimension(), p.dimension());
    }

    #[test]
    fn inertial_class_intertwines_the_actions(
        (p, chi) in arb_parameter().prop_flat_map(|p| {
            let f = p.field();
            (Just(p), arb_character(f))
        })
    ) {
        prop_assert_eq!(p.twist(chi).inertial_class(), p.inertial_class().twist(chi.inertial));
    }

    #[test]
    fn canonical_form_is_an_orbit_invariant(
        (p, chi) in arb_parameter().prop_flat_map(|p| {
            let f = p.field();
            (Just(p), arb_character(f))
        })
    ) {
        let c = sl_canonicalize(&p);
        prop_assert_eq!(sl_canonicalize(&p.twist(chi)), c.clone());
        prop_assert_eq!(sl_canonicalize(&c.canonical), c);
    }

    #[test]
    fn stabilizer_properties(p in arb_parameter()) {
        let stab = p.stab_full();
        let bound = lcm(p.field().units(), p.unramified_bound());
        for x in stab.elements() {
            prop_assert_eq!(p.twist(p.character_at(&x)), p.clone());
            prop_assert_eq!(bound % stab.element_order(&x), 0);
        }
        prop_assert!(p.try_iota().is_ok());
        prop_assert_eq!(p.drop_phases().lambda(), p.inertial_class());
    }

    #[test]
    fn packet_level_statements(p in arb_parameter()) {
        prop_assert!(check_compatibility_packet(&p));
        let c = sl_canonicalize(&p);
        prop_assert!(check_finalcomp(&c));
        prop_assert_eq!(l_packet(&c).len() as u64, c.canonical.stab_full().order());
        let class = hp_sl_packet(&c);
        prop_assert_eq!(mv_fiber(&class).len() as u64, class.stab.order());
        if class.stab.order() <= 24 && c.canonical.stab_full().order() <= 24 {
            prop_assert!(check_member_equivariance(&c));
        }
    }

    #[test]
    fn head_of_restriction_commutes_with_twist(ms in arb_multisegment(), b in 0i128..64) {
        let chi = ResidueCharacter::new(ms.field(), b);
        prop_assert_eq!(hp_gl(&ms.twist(chi)), hp_gl(&ms).twist(chi));
        prop_assert_eq!(ms.lambda().degree(), ms.degree());
        let head = hp_gl(&ms);
        let low = constituent_lower_set(&head);
        prop_assert_eq!(low.iter().filter(|m| **m == head).count(), 1);
        for m in &low {
            for (t, p) in head.entries() {
                prop_assert_eq!(m.get(t).map(|x| x.size()), Some(p.size()));
            }
        }
    }

    #[test]
    fn json_round_trips(p in arb_parameter(), ms in arb_multisegment()) {
        let s = serde_json::to_string(&p.to_json()).unwrap();
        let back: TameParameterJson = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(TameParameter::from_json(&back).unwrap(), p.clone());

        let s = serde_json::to_string(&ms.to_json()).unwrap();
        let back: MultisegmentJson = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(Multisegment::from_json(&back).unwrap(), ms);

        let m = p.inertial_class();
        let s = serde_json::to_string(&m.to_json()).unwrap();
        let back: PartitionFnJson = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(PartitionFn::from_json(&back).unwrap(), m);
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for (q, n_max) in [(2, 4), (3, 4), (4, 3), (5, 3)] {
        for n in 1..=n_max {
            let fns = enumerate_degree(field(q), n).unwrap();
            for a in &fns {
                assert!(a.dominance_leq(a));
                for b in &fns {
                    if a.dominance_leq(b) && b.dominance_leq(a) {
                        assert_eq!(a, b);
                    }
                    for c in &fns {
                        if a.dominance_leq(b) && b.dominance_leq(c) {
                            assert!(a.dominance_leq(c));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn stabilizers_match_the_twist_sweep() {
    for q in [2, 3, 4, 5, 7, 9] {
        let f = field(q);
        for n in 1..=4 {
            for m in enumerate_degree(f, n).unwrap() {
                let stab = m.stabilizer();
                for chi in ResidueCharacter::all(f) {
                    assert_eq!(m.twist(chi) == m, stab.contains(&[chi.index()]));
                }
                assert_eq!(m.orbit().len() as u64 * stab.order(), f.units());
                let class = mv_class_of(&m);
                assert_eq!(class, mv_class_of(&class.representative));
                assert_eq!(mv_fiber(&class).len() as u64, stab.order());
            }
        }
    }
}

#[test]
fn one_dimensional_parameters_are_degenerate() {
    for q in [2, 3, 5, 7, 9] {
        let mut rng = ChaCha8Rng::seed_from_u64(q);
        for _ in 0..20 {
            let p = random_parameter(&mut rng, field(q), 1);
            let c = sl_canonicalize(&p);
            assert!(c.canonical.stab_full().is_trivial());
            assert!(hp_sl_packet(&c).stab.is_trivial());
            assert_eq!(l_packet(&c).len(), 1);
            assert_eq!(c.canonical.blocks()[0].phase, Phase::ZERO);
        }
    }
}

#[test]
fn shared_values_cross_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<TameParameter>();
    assert_send_sync::<PartitionFn>();
    assert_send_sync::<Multisegment>();
    assert_send_sync::<macvogan::exact_groups::FinAbGroup>();
    assert_send_sync::<macvogan::exact_groups::GroupHom>();
    assert_send_sync::<macvogan::oracle::FiniteField>();
    assert_send_sync::<macvogan::Error>();
}
