use serde_json::Value;
use umbral_wasm_demo::{family_json, riordan_json, umbra_json, MAX_ORDER};

fn parse(text: String) -> Value {
    serde_json::from_str(&text).unwrap()
}

#[test]
fn family_tables() {
    let cheb = parse(family_json("chebyshev-u", 3, "1", "1", "2").unwrap());
    assert_eq!(cheb["display"][2], "4x^2 - 1");
    assert_eq!(cheb["polynomials"][3], serde_json::json!(["0", "-4", "0", "8"]));
    let geg = parse(family_json("gegenbauer", 3, "1", "1", "2").unwrap());
    assert_eq!(geg["polynomials"], cheb["polynomials"]);
    let pidduck = parse(family_json("pidduck", 1, "1", "1", "2").unwrap());
    assert_eq!(pidduck["polynomials"][1], serde_json::json!(["1", "2"]));
}

#[test]
fn family_errors() {
    assert!(family_json("meixner", 3, "1", "1", "1").unwrap_err().contains("meixner"));
    assert!(family_json("gegenbauer", 3, "x", "1", "2").unwrap_err().contains("lambda"));
    assert!(family_json("laguerre", 3, "1", "1", "2").is_err());
    assert!(family_json("pidduck", MAX_ORDER + 1, "1", "1", "2").is_err());
}

#[test]
fn riordan_tables() {
    let pascal = parse(riordan_json("scalar(1)", "eps", 4, "exponential", false).unwrap());
    assert_eq!(pascal["entries"][4], serde_json::json!(["1", "4", "6", "4", "1"]));
    let signed = parse(riordan_json("scalar(1)", "eps", 4, "exponential", true).unwrap());
    assert_eq!(signed["entries"][3], serde_json::json!(["-1", "3", "-3", "1", "0"]));
    let ordinary = parse(riordan_json("scalar(1)", "eps", 2, "ordinary", false).unwrap());
    assert_eq!(ordinary["flavor"], "ordinary");
    assert!(riordan_json("chi", "frog", 4, "exponential", false).unwrap_err().contains("frog"));
}

#[test]
fn umbra_moments() {
    let bell = parse(umbra_json("bell", 5).unwrap());
    assert_eq!(bell["moments"], serde_json::json!(["1", "1", "2", "5", "15", "52"]));
    let dual = parse(umbra_json("dot( chi ,bell)", 3).unwrap());
    assert_eq!(dual["expression"], "dot(chi, bell)");
    assert!(umbra_json("inv(eps)", 3).unwrap_err().contains("inv(eps)"));
}
