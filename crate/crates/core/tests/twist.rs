mod common;

use crossed_core::corpus::{builtin_corpus, cyclic_table};
use crossed_core::twist::{complete_pair, induced_map, random_twist_pair};
use crossed_core::{
    algebra_from_group, apply_twist, check_twist_conditions, make_r_prime, make_sigma_prime, twisted_tensor_product,
    CrossedData, Field, Law, LinMap, TwistPair, TwistingMapData,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn flip(field: Field, m: usize, n: usize) -> CrossedData {
    let a = algebra_from_group(field, &cyclic_table(m), 0).unwrap();
    let b = algebra_from_group(field, &cyclic_table(n), 0).unwrap();
    twisted_tensor_product(&TwistingMapData::flip(a, b)).unwrap()
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime(5)), Just(Field::Prime(7))]
}

#[test]
fn sweedler_oracles_on_corpus_pairs() {
    for inst in builtin_corpus().unwrap() {
        let (c, t) = (&inst.crossed, &inst.pair);
        assert_eq!(make_r_prime(c, t).unwrap(), common::r_prime(c, t), "{}", inst.name);
        assert_eq!(
            make_sigma_prime(c, t).unwrap(),
            common::sigma_prime(c, t),
            "{}",
            inst.name
        );
    }
}

#[test]
fn twisting_back_recovers_the_source() {
    for inst in builtin_corpus().unwrap() {
        let forward = apply_twist(&inst.crossed, &inst.pair).unwrap();
        let back_pair = inst.pair.swapped();
        let conditions = check_twist_conditions(forward.data_prime(), &back_pair).unwrap();
        if conditions.passed() {
            let back = apply_twist(forward.data_prime(), &back_pair).unwrap();
            assert_eq!(back.data_prime(), &inst.crossed, "{}", inst.name);
        } else {
            // only cros4 can fail for the swapped pair; cros1-cros3 are symmetric
            assert_eq!(conditions.failed_laws(), vec![Law::Cros4], "{}", inst.name);
        }
    }
}

#[test]
fn twisted_products_match_crossed_oracle() {
    for inst in builtin_corpus().unwrap() {
        let result = apply_twist(&inst.crossed, &inst.pair).unwrap();
        let prime = crossed_core::build_crossed_product(result.data_prime()).unwrap();
        assert_eq!(
            prime.mult(),
            &common::crossed_mult(result.data_prime()),
            "{}",
            inst.name
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sweedler_oracles_on_random_pairs(field in fields(), m in 1usize..4, n in 1usize..4, seed in any::<u64>()) {
        let c = flip(field, m, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(t) = random_twist_pair(&c, &mut rng, 20) {
            prop_assert_eq!(make_r_prime(&c, &t).unwrap(), common::r_prime(&c, &t));
            prop_assert_eq!(make_sigma_prime(&c, &t).unwrap(), common::sigma_prime(&c, &t));
        }
    }

    #[test]
    fn completed_pairs_are_mutually_inverse(field in fields(), m in 1usize..4, n in 1usize..4, seed in any::<u64>()) {
        let c = flip(field, m, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(t) = random_twist_pair(&c, &mut rng, 20) {
            let report = check_twist_conditions(&c, &t).unwrap();
            for law in [Law::Cros1, Law::Cros2, Law::Cros3] {
                prop_assert!(report.law_passed(law), "{}", report.to_text());
            }
            let (pt, pg) = (induced_map(c.a(), t.theta()), induced_map(c.a(), t.gamma()));
            prop_assert!(pt.compose(&pg).unwrap().is_identity());
            prop_assert!(pg.compose(&pt).unwrap().is_identity());
        }
    }

    /// Whenever all four conditions hold, the twist certifies; otherwise it is refused.
    #[test]
    fn apply_twist_follows_conditions(m in 1usize..3, n in 1usize..4, seed in any::<u64>()) {
        let c = flip(Field::Rationals, m, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(t) = random_twist_pair(&c, &mut rng, 20) {
            let conditions = check_twist_conditions(&c, &t).unwrap();
            let result = apply_twist(&c, &t);
            prop_assert_eq!(conditions.passed(), result.is_ok());
            if let Err(e) = result {
                let refused = matches!(e, crossed_core::Error::Precondition { .. });
                prop_assert!(refused);
            }
        }
    }
}

#[test]
fn singular_theta_has_no_completion() {
    let c = flip(Field::Rationals, 2, 2);
    let zero = LinMap::zero(Field::Rationals, &[2], &[2, 2]);
    assert!(complete_pair(&c, zero).is_none());
}

#[test]
fn trivial_pair_twist_is_identity() {
    for inst in builtin_corpus().unwrap() {
        let t = TwistPair::trivial(&inst.crossed);
        let result = apply_twist(&inst.crossed, &t).unwrap();
        assert_eq!(result.data_prime(), &inst.crossed);
        assert!(result.phi().is_identity());
    }
}
