use crossed_core::corpus::{builtin_corpus, builtin_corpus_over, corpus_instance};
use crossed_core::io::{parse, parse_into, report_json, serialize};
use crossed_core::{check_brz_axioms, Error, Field};

const GOLDEN_FLIP: &str = include_str!("golden/flip_c2_c2.json");

#[test]
fn flip_instance_matches_golden_file() {
    let doc = corpus_instance(Field::Rationals, "flip_c2_c2").unwrap().to_document();
    assert_eq!(serialize(&doc), GOLDEN_FLIP);
    assert_eq!(parse(GOLDEN_FLIP).unwrap(), doc);
}

#[test]
fn corpus_documents_round_trip_over_each_field() {
    for field in [Field::Rationals, Field::Prime(3), Field::Prime(5)] {
        for inst in builtin_corpus_over(field).unwrap() {
            let text = serialize(&inst.to_document());
            let back = parse(&text).unwrap();
            assert_eq!(back, inst.to_document(), "{} over {field}", inst.name);
            assert_eq!(serialize(&back), text);
        }
    }
}

#[test]
fn reducing_a_rational_document_matches_building_mod_p() {
    for (rational, modular) in builtin_corpus()
        .unwrap()
        .iter()
        .zip(builtin_corpus_over(Field::Prime(5)).unwrap())
    {
        let reduced = parse_into(&serialize(&rational.to_document()), Field::Prime(5)).unwrap();
        assert_eq!(reduced, modular.to_document(), "{}", rational.name);
    }
}

#[test]
fn half_cannot_be_reduced_mod_two() {
    let text = serialize(&corpus_instance(Field::Rationals, "gauge_c2").unwrap().to_document());
    let err = parse_into(&text, Field::Prime(2)).unwrap_err();
    assert!(
        matches!(&err, Error::Parse { message, .. } if message.contains("not invertible")),
        "{err}"
    );
}

#[test]
fn reports_serialize_identically() {
    let inst = corpus_instance(Field::Rationals, "associator_klein_c2").unwrap();
    assert_eq!(
        report_json(&check_brz_axioms(&inst.crossed)),
        report_json(&check_brz_axioms(&inst.crossed))
    );
}

#[test]
fn shape_violations_carry_paths() {
    let bad_dims = GOLDEN_FLIP.replacen(r#""domain_dims":[2,2]"#, r#""domain_dims":[2,3]"#, 1);
    let err = parse(&bad_dims).unwrap_err();
    assert!(
        matches!(&err, Error::Parse { path, .. } if path.starts_with("$.objects.crossed.a.mult")),
        "{err}"
    );

    let bad_field = GOLDEN_FLIP.replace(r#"{"kind":"rationals"}"#, r#"{"kind":"prime_field","p":4}"#);
    let err = parse(&bad_field).unwrap_err();
    assert!(
        matches!(&err, Error::Parse { path, .. } if path == "$.field_spec.p"),
        "{err}"
    );
}
