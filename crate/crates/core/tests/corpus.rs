mod common;

use crossed_core::corpus::{
    builtin_corpus, builtin_corpus_over, character_gauge, corpus_instance, cyclic_table, diagonal_action,
    drinfeld_twist, elementary_abelian_table, gauge_twist_pair, module_algebra_twist, order_two_gauge,
    smash_product_data, QuasiBialgebra, CORPUS_NAMES,
};
use crossed_core::io::serialize;
use crossed_core::{
    algebra_from_group, apply_twist, build_crossed_product, check_brz_axioms, check_twist_conditions, Field,
};
use proptest::prelude::*;

#[test]
fn smash_products_match_displayed_formula() {
    for inst in builtin_corpus().unwrap() {
        let Some(g) = &inst.gauge else { continue };
        let data = smash_product_data(&g.quasi, &g.module).unwrap();
        let product = build_crossed_product(&data).unwrap();
        assert_eq!(
            product.mult(),
            &common::smash_mult(&g.quasi, &g.module),
            "{}",
            inst.name
        );
    }
}

#[test]
fn gauge_twist_reproduces_twisted_smash_product() {
    for inst in builtin_corpus().unwrap() {
        let Some(g) = &inst.gauge else { continue };
        let source = smash_product_data(&g.quasi, &g.module).unwrap();
        let result = apply_twist(&source, &gauge_twist_pair(&g.module, &g.gauge).unwrap()).unwrap();
        let twisted = smash_product_data(
            &drinfeld_twist(&g.quasi, &g.gauge).unwrap(),
            &module_algebra_twist(&g.quasi, &g.module, &g.gauge).unwrap(),
        )
        .unwrap();
        assert_eq!(result.data_prime(), &twisted, "{}", inst.name);
        assert_eq!(
            result.phi(),
            &common::gauge_phi(g.quasi.algebra(), &g.module, &g.gauge),
            "{}",
            inst.name
        );
    }
}

#[test]
fn corpus_verifies_over_small_primes() {
    for p in [3, 5] {
        for inst in builtin_corpus_over(Field::Prime(p)).unwrap() {
            assert!(check_brz_axioms(&inst.crossed).passed(), "{} over GF({p})", inst.name);
            let report = check_twist_conditions(&inst.crossed, &inst.pair).unwrap();
            assert!(report.passed(), "{} over GF({p}): {}", inst.name, report.to_text());
            apply_twist(&inst.crossed, &inst.pair).unwrap();
        }
    }
}

#[test]
fn corpus_is_deterministic() {
    let first: Vec<String> = builtin_corpus()
        .unwrap()
        .iter()
        .map(|i| serialize(&i.to_document()))
        .collect();
    let second: Vec<String> = builtin_corpus()
        .unwrap()
        .iter()
        .map(|i| serialize(&i.to_document()))
        .collect();
    assert_eq!(first, second);
    assert_eq!(first.len(), CORPUS_NAMES.len());
}

#[test]
fn associator_instance_untwists_to_group_algebra() {
    let inst = corpus_instance(Field::Rationals, "associator_klein_c2").unwrap();
    let g = inst.gauge.unwrap();
    let base =
        QuasiBialgebra::from_group(algebra_from_group(Field::Rationals, &elementary_abelian_table(2), 0).unwrap())
            .unwrap();
    assert_ne!(g.quasi.associator(), base.associator());
    let untwisted = drinfeld_twist(&g.quasi, &g.gauge).unwrap();
    assert_eq!(untwisted.comult(), base.comult());
    assert_eq!(untwisted.associator(), base.associator());
}

#[test]
fn gauge_composition_on_c2_module() {
    let field = Field::Rationals;
    let h = algebra_from_group(field, &cyclic_table(2), 0).unwrap();
    let q = QuasiBialgebra::from_group(h.clone()).unwrap();
    let b = diagonal_action(h.clone(), &[vec![1, 1], vec![1, -1]]).unwrap();
    let f = order_two_gauge(&h, 1).unwrap();
    let f2 = character_gauge(&h, 1, &[vec![1, 1], vec![1, 5]]).unwrap();
    let q_f = drinfeld_twist(&q, &f).unwrap();
    let b_f = module_algebra_twist(&q, &b, &f).unwrap();
    let product = f2.after(&f, &h);
    assert_eq!(
        drinfeld_twist(&q_f, &f2).unwrap(),
        drinfeld_twist(&q, &product).unwrap()
    );
    assert_eq!(
        module_algebra_twist(&q_f, &b_f, &f2).unwrap(),
        module_algebra_twist(&q, &b, &product).unwrap()
    );
}

fn gauge_value() -> impl Strategy<Value = i64> {
    prop_oneof![Just(1i64), Just(-1), Just(2), Just(3), Just(-2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Diagonal gauges on k[C2xC2] acting on a graded k[C2xC2]: the gauge pair always
    /// satisfies the twist conditions and reproduces the twisted smash product.
    #[test]
    fn random_klein_gauges(values in proptest::collection::vec(gauge_value(), 9), chi in 1usize..4) {
        let field = Field::Rationals;
        let h = algebra_from_group(field, &elementary_abelian_table(2), 0).unwrap();
        let q = QuasiBialgebra::from_group(h.clone()).unwrap();
        let signs: Vec<Vec<i64>> = (0..4usize)
            .map(|g| vec![1, if (chi & g).count_ones() % 2 == 0 { 1 } else { -1 }])
            .collect();
        let b = diagonal_action(algebra_from_group(field, &cyclic_table(2), 0).unwrap(), &signs).unwrap();
        let mut f = vec![vec![1i64; 4]; 4];
        for s in 1..4 {
            for t in 1..4 {
                f[s][t] = values[(s - 1) * 3 + (t - 1)];
            }
        }
        let gauge = character_gauge(&h, 2, &f).unwrap();
        let source = smash_product_data(&q, &b).unwrap();
        let pair = gauge_twist_pair(&b, &gauge).unwrap();
        prop_assert!(check_twist_conditions(&source, &pair).unwrap().passed());
        let result = apply_twist(&source, &pair).unwrap();
        let twisted = smash_product_data(
            &drinfeld_twist(&q, &gauge).unwrap(),
            &module_algebra_twist(&q, &b, &gauge).unwrap(),
        ).unwrap();
        prop_assert_eq!(result.data_prime(), &twisted);
    }
}
