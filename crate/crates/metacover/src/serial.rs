//! JSON encodings of exact values.
//!
//! Integers that may exceed 2^31 are decimal strings, rationals are
//! `{"num", "den"}` with string entries, and cyclotomic numbers are
//! `{"conductor", "coeffs"}` over the power basis.

use metacover_core::cyclotomic::CycloElement;
use metacover_core::poly::Poly;
use metacover_core::{BigInt, Rational};
use serde_json::{json, Value};

pub fn bigint(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn rational(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn cyclo(x: &CycloElement) -> Value {
    json!({
        "conductor": x.conductor(),
        "coeffs": x.coeffs().iter().map(rational).collect::<Vec<_>>(),
    })
}

/// A cyclotomic number with its `zeta(n)^j` expression, or a bare integer
/// string when it is rational and integral.
pub fn cyclo_readable(x: &CycloElement) -> Value {
    match x.to_integer() {
        Some(n) => bigint(&n),
        None => json!({ "value": cyclo(x), "expr": x.to_expr() }),
    }
}

pub fn poly(p: &Poly, var: &str) -> Value {
    json!({
        "variable": var,
        "coeffs": p.coeffs().iter().map(cyclo).collect::<Vec<_>>(),
        "expr": p.to_expr(var),
    })
}

pub fn parse_rational(v: &Value) -> Option<Rational> {
    let num: BigInt = v.get("num")?.as_str()?.parse().ok()?;
    let den: BigInt = v.get("den")?.as_str()?.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn parse_cyclo(v: &Value) -> Option<CycloElement> {
    let n = v.get("conductor")?.as_u64()?;
    let coeffs = v
        .get("coeffs")?
        .as_array()?
        .iter()
        .map(parse_rational)
        .collect::<Option<Vec<_>>>()?;
    Some(CycloElement::from_coeffs(n, &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclo_round_trip() {
        let x = CycloElement::from_exponents(16, &[(3, 1), (-5, 7)]).scale(&Rational::new(2.into(), 7.into()));
        assert_eq!(parse_cyclo(&cyclo(&x)), Some(x));
    }
}
