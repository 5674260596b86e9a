use std::path::Path;
use std::process::{Command, Output};

fn pentafuzzy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentafuzzy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| {
            let (k, v) = l.split_once(char::is_whitespace)?;
            (k == key).then(|| v.trim().to_owned())
        })
        .unwrap_or_else(|| panic!("no field {key} in\n{text}"))
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn transform_golden() {
    let out = pentafuzzy(&["transform", "0.5", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "\
mu            0.5
nu            0.5
mode          standard
tau           0
delta         0
t             0
f             0
c             0
u             0
i             1
class         fuzzy
index         0
entropy       1
entropy_vec   c=0 u=0 i=1
syntropy      0
syntropy_vec  t=0 f=0
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn transform_examples() {
    let out = stdout(&pentafuzzy(&["transform", "0", "0"]));
    assert_eq!(field(&out, "u"), "1");
    assert_eq!(field(&out, "entropy_vec"), "c=0 u=1 i=0");

    let out = stdout(&pentafuzzy(&["transform", "0.7", "0.2"]));
    assert_eq!(field(&out, "tau"), "0.5");
    assert_eq!(field(&out, "delta"), "-0.1");
    assert_eq!(field(&out, "class"), "intuitionistic");

    // tau = 0.9 / 1.9, delta = -0.1 / 1.9
    let out = stdout(&pentafuzzy(&["transform", "0.7", "0.2", "--mode", "balanced"]));
    assert_eq!(field(&out, "tau"), format!("{:.9}", 0.9 / 1.9));
    assert_eq!(field(&out, "entropy"), format!("{:.9}", 1.0 / 1.9));

    let out = stdout(&pentafuzzy(&["transform", "0.6", "0.8"]));
    assert_eq!(field(&out, "class"), "paraconsistent");
}

#[test]
fn transform_json() {
    let out = pentafuzzy(&["--json", "transform", "0.5", "0.5"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["i"], 1.0);
    assert_eq!(v["entropy"], 1.0);
    assert_eq!(v["classification"]["kind"], "fuzzy");
}

#[test]
fn transform_rejects_out_of_range() {
    let out = pentafuzzy(&["transform", "1.5", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("mu out of range"), "{err}");
    assert_eq!(pentafuzzy(&["transform", "0", "-0.1"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(pentafuzzy(&["bogus"]).status.code(), Some(2));
    assert_eq!(pentafuzzy(&["transform", "0.5"]).status.code(), Some(2));
    assert_eq!(pentafuzzy(&["table", "nand"]).status.code(), Some(2));
    assert_eq!(pentafuzzy(&["table", "union", "--couple", "frank(1)"]).status.code(), Some(2));
}

#[test]
fn table_render_and_check() {
    let out = pentafuzzy(&["table", "union", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "\
∪ | t i u c f
--+----------
t | t t t t t
i | t i i i i
u | t i u i u
c | t i i c c
f | t i u c f
OK: 25/25 cells match Table 1
"
    );

    let out = pentafuzzy(&["table", "negation"]);
    assert_eq!(stdout(&out), "  | ¬\n--+--\nt | f\ni | i\nu | c\nc | u\nf | t\n");
}

#[test]
fn every_table_checks_under_every_couple() {
    let ops = [
        "union",
        "intersection",
        "complement",
        "negation",
        "dual",
        "implication",
        "equivalence",
    ];
    for couple in ["min_max", "product_probsum", "lukasiewicz", "frank(2)"] {
        for (n, op) in ops.iter().enumerate() {
            let out = pentafuzzy(&["table", op, "--couple", couple, "--check"]);
            assert_eq!(out.status.code(), Some(0), "{op} {couple}");
            let text = stdout(&out);
            let cells = if (2..=4).contains(&n) { 5 } else { 25 };
            let want = format!("OK: {cells}/{cells} cells match Table {}", n + 1);
            assert!(text.trim_end().ends_with(&want), "{text}");
        }
    }
}

#[test]
fn table_json() {
    let out = pentafuzzy(&["--json", "table", "intersection"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["couple"], "min_max");
    assert_eq!(v["table"]["labels"], "tiucf");
    assert_eq!(v["table"]["rows"][4], "fffff");
}

#[test]
fn map_grid() {
    let out = pentafuzzy(&["map", "--measure", "entropy", "--resolution", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("mu,nu,value"));
    let rows: Vec<(f64, f64, f64)> = lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect();
    assert_eq!(rows.len(), 9);
    for (mu, nu, e) in rows {
        assert_eq!(e, 1.0 - (mu - nu).abs(), "({mu}, {nu})");
    }
}

#[test]
fn map_balanced_values_match_closed_form() {
    let out = pentafuzzy(&[
        "map",
        "--measure",
        "syntropy",
        "--mode",
        "balanced",
        "--resolution",
        "10",
    ]);
    let text = stdout(&out);
    let mut n = 0;
    for line in text.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        let a = (v[0] - v[1]).abs();
        let b = (v[0] + v[1] - 1.0).abs();
        let g = a * (1.0 - b) / (1.0 - a * b);
        assert!((v[2] - g).abs() < 1e-8, "{line}");
        n += 1;
    }
    assert_eq!(n, 121);
}

#[test]
fn map_spot_values() {
    let text = stdout(&pentafuzzy(&["map", "--measure", "entropy", "--mode", "balanced"]));
    assert!(text.lines().any(|l| l == "0.8,0.1,0.322580645"), "{text}");
    assert!(text.lines().any(|l| l == "0.5,0.5,1"), "{text}");
    let text = stdout(&pentafuzzy(&["map", "--measure", "entropy"]));
    assert!(text.lines().any(|l| l == "1,0,0"), "{text}");
    assert_eq!(pentafuzzy(&["map", "--resolution", "1"]).status.code(), Some(2));
}

#[test]
fn table_names_and_numbers() {
    for (op, want) in [
        ("disjunction", "OK: 25/25 cells match Table 1"),
        ("dual", "OK: 5/5 cells match Table 5"),
        ("implication", "OK: 25/25 cells match Table 6"),
    ] {
        let text = stdout(&pentafuzzy(&["table", op, "--check"]));
        assert_eq!(text.lines().last(), Some(want));
    }
}

#[test]
fn map_ambiguity() {
    let text = stdout(&pentafuzzy(&["map", "--measure", "ambiguity", "--resolution", "4"]));
    assert!(text.lines().any(|l| l == "0.5,0.5,1"), "{text}");
    assert!(text.lines().any(|l| l == "0,0,0"), "{text}");
}

#[test]
fn verify_is_deterministic() {
    let a = pentafuzzy(&["verify", "--samples", "500", "--seed", "7"]);
    let b = pentafuzzy(&["verify", "--samples", "500", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.trim_end().ends_with("0 failed"), "{text}");
}

#[test]
fn verify_reports_failing_laws() {
    let out = pentafuzzy(&["verify", "--samples", "500", "--couples", "product"]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("FAIL idempotence [product_probsum]"), "{text}");
    assert!(text.contains("FAIL cu_preservation [product_probsum]"), "{text}");
    assert!(text.contains("PASS modularity_entropy [product_probsum]"), "{text}");
    assert!(text.contains("counterexample:"), "{text}");
}

#[test]
fn verify_json() {
    let out = pentafuzzy(&["--json", "verify", "--samples", "200"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 42);
    assert!(v["results"].as_array().unwrap().len() > 10);
}

#[test]
fn set_entropy_and_syntropy() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "label,mu,nu\nx,0.5,0.5\ny,0,0\n");
    let out = pentafuzzy(&["set", "entropy", &a]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(field(&text, "entropy_sum"), "2");
    assert_eq!(field(&text, "entropy_vec"), "c=0 u=1 i=1");
    assert_eq!(field(&text, "entropy_mean"), "1");

    let b = write(dir.path(), "b.csv", "label,mu,nu\np,1,0\nq,0.7,0.2\n");
    let text = stdout(&pentafuzzy(&["set", "syntropy", &b]));
    assert_eq!(field(&text, "syntropy_sum"), "1.5");
    assert_eq!(field(&text, "syntropy_vec"), "t=1.5 f=0");
}

#[test]
fn set_similarity() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "label,mu,nu\nx,0.5,0.5\ny,1,0\n");
    let b = write(
        dir.path(),
        "b.json",
        r#"{"name":"b","elements":{"x":{"mu":0,"nu":0},"y":{"mu":1,"nu":0}}}"#,
    );
    let out = pentafuzzy(&["set", "similarity", &a, &b]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(field(&stdout(&out), "similarity"), "0.5");
}

#[test]
fn set_errors() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "label,mu,nu\nx,0.5,0.5\n");
    let c = write(dir.path(), "c.csv", "label,mu,nu\nz,0.5,0.5\n");
    let bad = write(dir.path(), "bad.csv", "label,mu,nu\nx,1.5,0\n");
    let dup = write(dir.path(), "dup.csv", "label,mu,nu\nx,0,0\nx,1,1\n");

    let out = pentafuzzy(&["set", "entropy", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("mu out of range, line 2"));

    assert_eq!(pentafuzzy(&["set", "entropy", &dup]).status.code(), Some(1));
    assert_eq!(pentafuzzy(&["set", "similarity", &a, &c]).status.code(), Some(1));
    assert_eq!(pentafuzzy(&["set", "similarity", &a]).status.code(), Some(2));
    assert_eq!(pentafuzzy(&["set", "entropy", "/nonexistent/x.csv"]).status.code(), Some(1));
}
