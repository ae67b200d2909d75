use serde_json::Value;
use umbral::cli::{run, Outcome, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION};

fn umbral(args: &[&str]) -> Outcome {
    run(std::iter::once("umbral").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = umbral(&[args, &["--format", "json"]].concat());
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_owned()).collect()
}

fn rows(v: &Value) -> Vec<Vec<String>> {
    v.as_array().unwrap().iter().map(strings).collect()
}

#[test]
fn umbra_examples() {
    assert_eq!(strings(&json(&["umbra", "bell", "--order", "5"])["moments"]), ["1", "1", "2", "5", "15", "52"]);
    assert_eq!(strings(&json(&["umbra", "eps", "--order", "3"])["moments"]), ["1", "0", "0", "0"]);
    assert_eq!(strings(&json(&["umbra", "dot(chi,bell)", "--order", "4"])["moments"]), ["1"; 5]);
    let ubar = json(&["umbra", "ubar", "--order", "3"]);
    assert_eq!(strings(&ubar["gf"]), ["1"; 4]);
}

#[test]
fn riordan_examples() {
    let pascal = json(&["riordan", "show", "scalar(1)", "eps", "--order", "4"]);
    assert_eq!(pascal["order"], 4);
    assert_eq!(pascal["flavor"], "exponential");
    assert_eq!(rows(&pascal["entries"])[4], ["1", "4", "6", "4", "1"]);
    assert_eq!(rows(&pascal["entries"])[1], ["1", "1", "0", "0", "0"]);

    let inverse = json(&["riordan", "inverse", "scalar(1)", "eps", "--order", "4"]);
    assert_eq!(rows(&inverse["entries"])[3], ["-1", "3", "-3", "1", "0"]);

    let applied = json(&["riordan", "apply", "scalar(1)", "eps", "scalar(1)", "--order", "4"]);
    assert_eq!(strings(&applied["moments"]), ["1", "2", "4", "8", "16"]);

    let squared = json(&["riordan", "multiply", "scalar(1)", "eps", "scalar(1)", "eps", "--order", "3"]);
    assert_eq!(rows(&squared["entries"])[3], ["8", "12", "6", "1"]);

    let ordinary = json(&["riordan", "show", "scalar(1)", "eps", "--order", "3", "--flavor", "ordinary"]);
    assert_eq!(ordinary["flavor"], "ordinary");
    assert_eq!(rows(&ordinary["entries"])[3], ["1/6", "1/2", "1", "1"]);
}

#[test]
fn inverse_pretty_prints_the_check() {
    let out = umbral(&["riordan", "inverse", "bell", "chi", "--order", "5"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("identity: yes"), "{}", out.stdout);
}

#[test]
fn apply_needs_exponential_flavor() {
    let out = umbral(&["riordan", "apply", "chi", "eps", "bell", "--flavor", "ordinary"]);
    assert_eq!(out.code, EXIT_PRECONDITION);
}

#[test]
fn sheffer_routes_agree() {
    let direct = umbral(&["sheffer", "bell", "[1, 2, -1]", "--order", "6", "--format", "csv"]);
    for route in ["gf", "abel"] {
        let other = umbral(&["sheffer", "bell", "[1, 2, -1]", "--order", "6", "--format", "csv", "--route", route]);
        assert_eq!(direct, other, "route {route}");
    }
    let lines: Vec<&str> = direct.stdout.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "1");
}

#[test]
fn family_examples() {
    let cheb = json(&["family", "chebyshev-u", "--nmax", "3"]);
    assert_eq!(
        rows(&cheb["polynomials"]),
        vec![vec!["1"], vec!["0", "2"], vec!["-1", "0", "4"], vec!["0", "-4", "0", "8"]]
    );
    assert!(cheb.get("binomial_basis").is_none());

    let pidduck = json(&["family", "pidduck", "--nmax", "1"]);
    assert_eq!(rows(&pidduck["polynomials"]), vec![vec!["1"], vec!["1", "2"]]);
    assert!(pidduck.get("binomial_basis").is_some());

    let gegenbauer = json(&["family", "gegenbauer", "--lambda", "1", "--nmax", "2"]);
    assert_eq!(gegenbauer["polynomials"], json(&["family", "chebyshev-u", "--nmax", "2"])["polynomials"]);

    let out = umbral(&["family", "chebyshev-u", "--nmax", "2"]);
    assert!(out.stdout.contains("4x^2 - 1"));
}

#[test]
fn family_rejects_bad_meixner_parameters() {
    for (b, c) in [("1", "1"), ("1", "0"), ("-2", "3")] {
        let out = umbral(&["family", "meixner", "--b", b, "--c", c]);
        assert_eq!(out.code, EXIT_PRECONDITION, "b={b} c={c}");
        assert!(out.stderr.contains("meixner"));
    }
}

#[test]
fn csv_has_one_row_per_matrix_row() {
    let out = umbral(&["riordan", "show", "chi", "chi", "--order", "3", "--format", "csv"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines, ["1,0,0,0", "1,1,0,0", "0,4,1,0", "0,6,9,1"]);
}

#[test]
fn exit_codes() {
    let parse = umbral(&["umbra", "add(chi, frog)"]);
    assert_eq!(parse.code, EXIT_PARSE);
    assert!(parse.stderr.contains("at 9"), "{}", parse.stderr);

    assert_eq!(umbral(&["umbra", "inv(eps)"]).code, EXIT_PRECONDITION);
    assert!(umbral(&["umbra", "inv(eps)"]).stderr.contains("inv(eps)"));
    assert_eq!(umbral(&["verify", "nonsense"]).code, EXIT_PARSE);
    assert_eq!(umbral(&["bogus"]).code, EXIT_PARSE);
    assert_eq!(umbral(&["verify", "duality", "--order", "40"]).code, EXIT_PRECONDITION);
    assert_eq!(umbral(&["--help"]).code, EXIT_OK);
}

#[test]
fn verify_reports() {
    let out = umbral(&["verify", "duality", "--order", "6"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("PASS  duality/bell-moments"));
    let report = json(&["verify", "families", "--order", "6", "--seed", "3"]);
    assert_eq!(report["passed"], true);
    assert_eq!(report["seed"], 3);
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn global_flags_go_anywhere() {
    let before = umbral(&["--order", "3", "umbra", "chi"]);
    let after = umbral(&["umbra", "chi", "--order", "3"]);
    assert_eq!(before, after);
}
