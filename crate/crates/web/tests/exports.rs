use multinull_web::{hopf_stiefel_table_json, reduce_json, sumset_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn table_rows() {
    let v = parse(&hopf_stiefel_table_json(2, 3, 3).unwrap());
    // beta_2(1, s) = s; beta_2(2, 2) = 2; beta_2(2, 3) = 4
    assert_eq!(v["rows"], serde_json::json!([[1, 2, 3], [2, 2, 4], [3, 4, 4]]));
    assert!(hopf_stiefel_table_json(4, 2, 2).is_err());
    assert!(hopf_stiefel_table_json(2, 0, 2).is_err());
}

#[test]
fn sumset_with_bounds() {
    let v = parse(&sumset_json(7, "0:2", "0:3").unwrap());
    assert_eq!(v["sumset_text"], "{0:4}");
    assert_eq!(v["cd"]["lhs"], 4);
    assert_eq!(v["cd"]["tight"], true);
    assert_eq!(v["deg"]["lhs"], 3);
    assert!(sumset_json(7, "0:2", "").is_err());
    assert!(sumset_json(6, "0:1", "0:1").is_err());
}

#[test]
fn reduction() {
    let grid = r#"{"field":{"kind":"rational"},"sets":[[{"value":"0","mult":1},{"value":"1","mult":1}]]}"#;
    let v = parse(&reduce_json(grid, "x1^3").unwrap());
    assert_eq!(v["remainder"], "x1");
    assert_eq!(v["cofactors"][0], "x1 + 1");
    assert_eq!(v["generators"][0], "x1^2 - x1");
    let err = reduce_json(grid, "x2").unwrap_err();
    assert!(err.contains("position 0"), "{err}");
}
