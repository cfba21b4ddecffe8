use maxsafe_web::api;
use serde_json::{json, Value};

const FOUR_RULES: &str = r#"{"states": ["s1", "s2"], "acts": [
  {"name": "a1", "utilities": [1, 9]}, {"name": "a2", "utilities": [3, 6]},
  {"name": "a3", "utilities": [2, 7]}, {"name": "a4", "utilities": [4, 4]}]}"#;

const CAMERA: &str = r#"{"states": ["s1", "s2"], "acts": [
  {"name": "a1", "utilities": [4, 4]}, {"name": "a2", "utilities": [2, 6]},
  {"name": "a3", "utilities": [3, 3]}]}"#;

const REVERSAL: &str = r#"{"states": ["s1", "s2", "s3"], "acts": [
  {"name": "a1", "utilities": [9, 2, 6]}, {"name": "a2", "utilities": [5, 3, 7]},
  {"name": "a3", "utilities": [4, 8, 8]}, {"name": "a4", "utilities": [1, 5, 6]}]}"#;

#[test]
fn ranks_every_rule() {
    for (rule, top) in [
        ("maximax", "a1"),
        ("safety", "a2"),
        ("regret", "a3"),
        ("maximin", "a4"),
    ] {
        let out = api::rank(FOUR_RULES, rule).unwrap();
        assert_eq!(out["top"], json!([top]), "{rule}");
    }
    let regret = api::rank(FOUR_RULES, "regret").unwrap();
    assert_eq!(regret["values"][2], json!({"act": "a3", "value": 2.0}));
    assert_eq!(regret["groups"][1]["acts"], json!(["a1", "a2"]));
}

#[test]
fn quantile_anchor_endpoints_match_named_rules() {
    let low = api::rank(FOUR_RULES, "anchored:quantile:0").unwrap();
    let safety = api::rank(FOUR_RULES, "safety").unwrap();
    assert_eq!(low["groups"], safety["groups"]);
    let high = api::rank(FOUR_RULES, "anchored:quantile:1").unwrap();
    assert_eq!(high["top"], json!(["a3"]));
}

#[test]
fn scans_each_outside_act() {
    let out = api::decoy_scan(REVERSAL, "safety", "a1,a2,a3").unwrap();
    assert_eq!(out["scans"].as_array().unwrap().len(), 1);
    assert_eq!(out["scans"][0]["verdict"], "REVERSAL: a3 over a2");
    let tie = api::decoy_scan(CAMERA, "safety", "a1, a2").unwrap();
    assert_eq!(tie["scans"][0]["verdict"], "TIE-BREAK: a1");
    let none = api::decoy_scan(CAMERA, "safety", "").unwrap();
    assert_eq!(none["scans"], json!([]));
}

#[test]
fn synthesizes_decoys() {
    let a1 = api::synthesize(CAMERA, "a1,a2", "a1", 1.0).unwrap();
    assert_eq!(a1["decoy"], json!([3.0, 3.0]));
    let a2 = api::synthesize(CAMERA, "a1,a2", "a2", 1.0).unwrap();
    assert_eq!(a2["decoy"], json!([1.0, 5.0]));
    let top = api::synthesize(FOUR_RULES, "", "a2", 1.0).unwrap();
    assert_eq!(top["decoy"], Value::Null);
}

#[test]
fn errors_come_back_as_json() {
    let bad: Value = serde_json::from_str(&maxsafe_web::rank("{", "safety")).unwrap();
    assert!(bad["error"].as_str().unwrap().contains("line 1"));
    let rule: Value = serde_json::from_str(&maxsafe_web::rank(CAMERA, "best")).unwrap();
    assert!(rule["error"].as_str().unwrap().contains("unknown rule"));
    assert!(api::synthesize(CAMERA, "a1,a2", "zz", 1.0).is_err());
    assert!(api::decoy_scan(CAMERA, "safety", "a1,a9").is_err());
}
