//! WebAssembly bindings behind the static page in `www/`.
//!
//! Each binding returns a JSON string whose numbers are exact `"p/q"`
//! strings. The `*_json` functions hold the logic and are plain Rust so they
//! can be tested natively; the exported wrappers only convert errors.

use serde_json::json;
use umbral::exact_numbers::{parse_rational, to_exact_string};
use umbral::expr::UmbraExpr;
use umbral::families::FamilyKind;
use umbral::sheffer::{Flavor, RiordanArray, UmbraPair};
use umbral::Rational;
use wasm_bindgen::prelude::*;

/// Largest order or degree the page may request.
pub const MAX_ORDER: usize = 16;

fn check_order(order: usize) -> Result<(), String> {
    if order > MAX_ORDER {
        Err(format!("order {order} is above the demo limit of {MAX_ORDER}"))
    } else {
        Ok(())
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(to_exact_string).collect()
}

fn rational(name: &str, text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|_| format!("{name}: `{text}` is not a rational number"))
}

/// Polynomials `0..=nmax` of a family, as coefficient lists (lowest degree
/// first) and as display strings.
pub fn family_json(kind: &str, nmax: usize, lambda: &str, b: &str, c: &str) -> Result<String, String> {
    check_order(nmax)?;
    let kind = match kind {
        "chebyshev-u" => FamilyKind::ChebyshevU,
        "gegenbauer" => FamilyKind::Gegenbauer {
            lambda: rational("lambda", lambda)?,
        },
        "meixner" => FamilyKind::Meixner {
            b: rational("b", b)?,
            c: rational("c", c)?,
        },
        "mittag-leffler" => FamilyKind::MittagLeffler,
        "pidduck" => FamilyKind::Pidduck,
        other => return Err(format!("unknown family `{other}`")),
    };
    let polys = (0..=nmax)
        .map(|n| kind.polynomial(n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok(json!({
        "family": kind.to_string(),
        "polynomials": polys.iter().map(|p| strings(p.coeffs())).collect::<Vec<_>>(),
        "display": polys.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
    .to_string())
}

/// The Riordan array of `(gamma, alpha)`, or its inverse.
pub fn riordan_json(gamma: &str, alpha: &str, order: usize, flavor: &str, inverse: bool) -> Result<String, String> {
    check_order(order)?;
    let flavor = match flavor {
        "exponential" => Flavor::Exponential,
        "ordinary" => Flavor::Ordinary,
        other => return Err(format!("unknown flavor `{other}`")),
    };
    let umbra = |text: &str| -> Result<_, String> {
        let expr: UmbraExpr = text.parse().map_err(|e: umbral::Error| e.to_string())?;
        expr.eval(order).map_err(|e| e.to_string())
    };
    let pair = UmbraPair::new(umbra(gamma)?, umbra(alpha)?).map_err(|e| e.to_string())?;
    let mut array = RiordanArray::new(&pair, flavor);
    if inverse {
        array = array.inverse().map_err(|e| e.to_string())?;
    }
    Ok(json!({
        "order": order,
        "flavor": flavor.name(),
        "entries": array.entries().iter().map(|r| strings(r)).collect::<Vec<_>>(),
    })
    .to_string())
}

/// Moments and generating function coefficients of an umbra expression.
pub fn umbra_json(expr: &str, order: usize) -> Result<String, String> {
    check_order(order)?;
    let parsed: UmbraExpr = expr.parse().map_err(|e: umbral::Error| e.to_string())?;
    let u = parsed.eval(order).map_err(|e| e.to_string())?;
    Ok(json!({
        "expression": parsed.to_string(),
        "moments": strings(u.moments()),
        "gf": strings(u.gf().coeffs()),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn family(kind: &str, nmax: u32, lambda: &str, b: &str, c: &str) -> Result<String, JsError> {
    family_json(kind, nmax as usize, lambda, b, c).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn riordan(gamma: &str, alpha: &str, order: u32, flavor: &str, inverse: bool) -> Result<String, JsError> {
    riordan_json(gamma, alpha, order as usize, flavor, inverse).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn umbra(expr: &str, order: u32) -> Result<String, JsError> {
    umbra_json(expr, order as usize).map_err(|e| JsError::new(&e))
}
