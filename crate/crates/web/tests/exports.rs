use qcurves_web::{fixed_locus_tables, hilbert_function, sl2_module};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn sl2_cubic() {
    let v = parse(sl2_module(3));
    assert_eq!(v["ok"], true);
    assert_eq!(v["weights"], serde_json::json!([3, 1, -1, -3]));
    assert_eq!(v["labels"], serde_json::json!(["v3", "v1", "vm1", "vm3"]));
    assert_eq!(v["relations_hold"], true);
    // f v3 = 3 v1
    assert_eq!(v["f"][1][0], "3");
    // e v1 = v3
    assert_eq!(v["e"][0][1], "1");
}

#[test]
fn sl2_rejects_large_degree() {
    let v = parse(sl2_module(40));
    assert_eq!(v["ok"], false);
}

#[test]
fn grassmannian_hilbert() {
    let v = parse(hilbert_function(
        "c1, c2",
        "1, 2",
        "c1^3 - 2*c1*c2; c1^4 - 3*c1^2*c2 + c2^2",
        6,
    ));
    assert_eq!(v["dims"], serde_json::json!([1, 1, 2, 1, 1, 0, 0]));
}

#[test]
fn hilbert_input_errors() {
    assert_eq!(parse(hilbert_function("x,y", "1", "x", 3))["ok"], false);
    assert_eq!(
        parse(hilbert_function("x,y", "1,1", "x + y^2", 3))["ok"],
        false
    );
    assert_eq!(parse(hilbert_function("x", "1", "z", 3))["ok"], false);
    assert_eq!(parse(hilbert_function("", "", "", 3))["ok"], false);
    let free = parse(hilbert_function("x,y", "1,1", "", 3));
    assert_eq!(free["dims"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn tables() {
    let v = parse(fixed_locus_tables());
    assert_eq!(v["ok"], true);
    assert_eq!(v["lines"].as_array().unwrap().len(), 4);
    assert_eq!(v["conics"][8]["moduli"], "-6,-4,-2,2,4,6");
    assert_eq!(v["s1"], "1+t^2+t^4+t^6");
    assert_eq!(v["s2"], "1+t^2+2t^4+2t^6+2t^8+t^10+t^12");
    assert_eq!(
        v["s3"],
        "1+2t^2+4t^4+5t^6+6t^8+6t^10+5t^12+4t^14+2t^16+t^18"
    );
}
