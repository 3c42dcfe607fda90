use serde_json::json;

use hopfgen::formats::{
    cocycle_from_json, cocycle_to_json, group_from_json, group_to_json, hopf_from_json, hopf_to_json, parse_tmonomial,
    telement_to_json,
};
use hopfgen::selftest::{all_instances, test_groups};
use hopfgen_core::cocycle::TwoCocycle;
use hopfgen_core::hopf::{taft, verify_hopf_axioms};
use hopfgen_core::tring::TRing;
use hopfgen_core::Scalar;

#[test]
fn hopf_dumps_reload_with_identical_structure() {
    for (name, h) in all_instances() {
        let v = hopf_to_json(&h);
        assert_eq!(v["schema"], 1);
        let text = serde_json::to_string(&v).unwrap();
        let back = hopf_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert!(back.same_structure(&h), "{name}");
        assert_eq!(back.labels(), h.labels());
        assert!(verify_hopf_axioms(&back).all_passed(), "{name}");
    }
}

#[test]
fn malformed_dumps_are_rejected() {
    let h = taft(2).unwrap();
    let mut v = hopf_to_json(&h);
    v["dim"] = json!(5);
    assert!(hopf_from_json(&v).is_err());
    let mut v = hopf_to_json(&h);
    v["mult"][0][2] = json!(9);
    assert!(hopf_from_json(&v).is_err());
    assert!(hopf_from_json(&json!({"schema": 1})).is_err());
}

#[test]
fn groups_round_trip() {
    for (name, g) in test_groups() {
        let back = group_from_json(&group_to_json(&g)).unwrap();
        assert_eq!(back.table(), g.table(), "{name}");
    }
    let broken = json!({"labels": ["e", "a"], "table": [[0, 1], [1, 1]]});
    assert!(group_from_json(&broken).is_err());
}

#[test]
fn cocycles_round_trip_and_are_checked() {
    let h = taft(2).unwrap();
    let f = h.field().clone();
    let gamma: Vec<Scalar> = ["1", "2", "1/3", "-1"].iter().map(|s| Scalar::parse(s, &f).unwrap()).collect();
    let alpha = TwoCocycle::coboundary(&h, &gamma).unwrap();
    let back = cocycle_from_json(&cocycle_to_json(&alpha), &h).unwrap();
    assert_eq!(back.values(), alpha.values());

    let mut v = cocycle_to_json(&alpha);
    v["values"][2][2] = json!(["5"]);
    assert!(cocycle_from_json(&v, &h).is_err());
}

#[test]
fn laurent_json_lists_exponents() {
    let h = taft(2).unwrap();
    let ring = TRing::new(&h).unwrap();
    let e = ring.t_inv(h.index_of("y").unwrap());
    let v = telement_to_json(&e, h.labels());
    assert_eq!(v["text"], "-t[1]^-1*t[x]^-1*t[y]");
    assert_eq!(v["terms"][0]["coefficient"], json!(["-1/1"]));
    assert_eq!(v["terms"][0]["exponents"], json!({"1": -1, "x": -1, "y": 1}));
}

#[test]
fn monomial_parser_handles_group_labels() {
    let (_, g) = test_groups().into_iter().find(|(n, _)| n == "S3").unwrap();
    let m = parse_tmonomial("t[(1 2)]^2*t[e]^-1", g.labels()).unwrap();
    assert_eq!(m.text(g.labels()), "t[e]^-1*t[(1 2)]^2");
}
