use multinull::{parse_poly, FieldSpec};
use multinull_cli::{run, Outcome, SCHEMA};

const SQUARE_F3: &str = r#"{"field":{"kind":"prime","p":3},"sets":[[{"value":"0","mult":1},{"value":"1","mult":1}],[{"value":"0","mult":1},{"value":"1","mult":1}]]}"#;
const MIXED_Q: &str = r#"{"field":{"kind":"rational"},"sets":[[{"value":"-1/2","mult":2},{"value":"3","mult":1}],[{"value":"0","mult":1},{"value":"2","mult":2}]]}"#;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("multinull").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let out = cli(&a);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn witness_example_as_json() {
    let v = json(&["witness", "--poly", "x1*x2", "--grid-inline", SQUARE_F3, "--t", "1,1"]);
    assert_eq!(v["schema"], SCHEMA);
    assert_eq!(v["command"], "witness");
    assert_eq!(v["result"]["point"], serde_json::json!(["1", "1"]));
    assert_eq!(v["result"]["exponent"], serde_json::json!([0, 0]));
    assert_eq!(v["result"]["value"], "1");
}

#[test]
fn inline_and_file_grids_agree() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/square_f3.json");
    let a = cli(&["reduce", "--poly", "x1^3*x2 + 2", "--grid", path]);
    let b = cli(&["reduce", "--poly", "x1^3*x2 + 2", "--grid-inline", SQUARE_F3]);
    assert_eq!(a, b);
    assert_eq!(a.code, 0);
}

#[test]
fn printed_polynomials_reparse() {
    let q = FieldSpec::rational();
    let f = "x1^4*x2^3 - 7/3*x1^2*x2 + x2^2 - 5";
    let v = json(&["reduce", "--poly", f, "--grid-inline", MIXED_Q]);
    let original = parse_poly(f, 2, q).unwrap();
    let mut rebuilt = parse_poly(v["result"]["remainder"].as_str().unwrap(), 2, q).unwrap();
    let gens = [
        parse_poly("(x1 + 1/2)^2*(x1 - 3)", 2, q).unwrap(),
        parse_poly("x2*(x2 - 2)^2", 2, q).unwrap(),
    ];
    for (i, g) in gens.iter().enumerate() {
        let h = parse_poly(v["result"][format!("h{}", i + 1)].as_str().unwrap(), 2, q).unwrap();
        rebuilt = &rebuilt + &(&h * g);
    }
    assert_eq!(rebuilt, original);
}

#[test]
fn exit_codes() {
    // input errors
    let parse = cli(&["reduce", "--poly", "x1 + x3", "--grid-inline", SQUARE_F3]);
    assert_eq!(parse.code, 2);
    assert_eq!(parse.stderr, "error: parse error at position 5: unknown variable x3 (arity 2)\n");
    assert_eq!(cli(&["reduce", "--poly", "x1", "--grid-inline", "{"]).code, 2);
    assert_eq!(cli(&["reduce", "--poly", "x1"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["hopf-stiefel", "--p", "4", "--r", "1", "--s", "1"]).code, 2);
    let mismatch = cli(&["reduce", "--poly", "x1", "--grid-inline", SQUARE_F3, "--field", "prime:5"]);
    assert_eq!(mismatch.code, 2);
    for out in [&parse, &mismatch] {
        assert_eq!(out.stderr.lines().count(), 1);
        assert!(out.stderr.starts_with("error: "));
    }

    // violated preconditions and bounds
    assert_eq!(cli(&["witness", "--poly", "x1*x2", "--grid-inline", SQUARE_F3, "--t", "1,0"]).code, 1);
    let no_zero = r#"{"field":{"kind":"prime","p":3},"sets":[[{"value":"1","mult":1}]]}"#;
    assert_eq!(cli(&["cover-extremal", "--grid-inline", no_zero]).code, 1);
    let under = cli(&["cover-check", "--grid-inline", SQUARE_F3, "--hyperplanes-inline", r#"{"hyperplanes":[]}"#]);
    assert_eq!(under.code, 1);
    assert!(under.stdout.contains("undercovered"));
    let in_ideal = cli(&["punctured", "--poly", "x1^2 - x1", "--grid-inline", SQUARE_F3, "--sub-inline", SQUARE_F3]);
    assert_eq!(in_ideal.code, 1);

    // help is not an error
    let help = cli(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("hopf-stiefel"));
}

#[test]
fn every_subcommand_runs() {
    let pair = r#"{"field":{"kind":"prime","p":5},"a":[{"value":"0","mult":1},{"value":"1","mult":1}],"b":[{"value":"0","mult":1},{"value":"1","mult":1}]}"#;
    let vectors = r#"{"p":2,"dim":2,"a":[{"vector":[0,0],"mult":1},{"vector":[1,1],"mult":1}],"b":[{"vector":[0,0],"mult":1},{"vector":[1,1],"mult":1}]}"#;
    let sub = r#"{"field":{"kind":"prime","p":3},"sets":[[{"value":"1","mult":1}],[{"value":"1","mult":1}]]}"#;
    let cases: Vec<Vec<&str>> = vec![
        vec!["reduce", "--poly", "x1^2*x2", "--grid-inline", SQUARE_F3],
        vec!["member", "--poly", "x1^2 - x1", "--grid-inline", SQUARE_F3, "--method", "pointwise"],
        vec!["witness", "--poly", "x1*x2 + x1", "--grid-inline", SQUARE_F3, "--t", "1,1", "--method", "divdiff"],
        vec!["punctured", "--poly", "x1*x2", "--grid-inline", SQUARE_F3, "--sub-inline", sub],
        vec!["divdiff", "--poly", "x1*x2", "--grid-inline", SQUARE_F3, "--method", "rec"],
        vec!["alpha", "--grid-inline", SQUARE_F3],
        vec!["check-relation", "--poly", "x1*x2 + 1", "--grid-inline", SQUARE_F3],
        vec!["cover-check", "--grid-inline", SQUARE_F3, "--hyperplanes-inline", r#"{"hyperplanes":[[2,1,0],[2,0,1]]}"#],
        vec!["cover-extremal", "--grid-inline", SQUARE_F3],
        vec!["sumset", "--input-inline", pair],
        vec!["cd-check", "--input-inline", pair],
        vec!["cd-check", "--exhaustive", "--p", "3", "--max-size", "2"],
        vec!["valueset", "--poly", "x1 + x2", "--grid-inline", SQUARE_F3],
        vec!["sun-check", "--grid-inline", SQUARE_F3, "--a", "1,1", "--k", "1"],
        vec!["hopf-stiefel", "--p", "2", "--r", "2", "--s", "3"],
        vec!["ek-check", "--input-inline", vectors],
        vec!["ek-check", "--exhaustive", "--p", "3", "--dim", "1", "--max-size", "2"],
    ];
    for args in cases {
        let out = cli(&args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        let v = json(&args);
        assert_eq!(v["status"], "ok", "{args:?}");
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn sun_check_over_rationals_has_no_cap() {
    let v = json(&["sun-check", "--grid-inline", MIXED_Q, "--a", "1,-1", "--k", "1", "--g", "1/2"]);
    assert_eq!(v["result"]["rhs"], 5);
    assert_eq!(v["result"]["lhs"], 8);
    assert_eq!(v["result"]["holds"], true);
}
