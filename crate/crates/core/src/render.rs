//! Text and JSON rendering of polynomials, series and growth.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::ratfun::{GrowthClass, IntPolynomial, RationalFunction};

/// Ascending powers with explicit `*` and `^`, e.g. `1 - 3*t + t^2`.
pub fn format_polynomial(p: &IntPolynomial) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let abs = c.abs();
        let body = match (k, abs.is_one()) {
            (0, _) => abs.to_string(),
            (1, true) => "t".to_string(),
            (1, false) => format!("{abs}*t"),
            (_, true) => format!("t^{k}"),
            (_, false) => format!("{abs}*t^{k}"),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term_count(p: &IntPolynomial) -> usize {
    p.coeffs().iter().filter(|c| c.sign() != num_bigint::Sign::NoSign).count()
}

fn grouped(p: &IntPolynomial) -> String {
    let s = format_polynomial(p);
    if term_count(p) > 1 {
        format!("({s})")
    } else {
        s
    }
}

/// `num/den`, parenthesizing multi-term sides; a polynomial prints alone.
pub fn format_rational(r: &RationalFunction) -> String {
    if r.denominator().is_one() {
        return format_polynomial(r.numerator());
    }
    format!("{}/{}", grouped(r.numerator()), grouped(r.denominator()))
}

pub fn format_growth(g: &GrowthClass) -> String {
    match g {
        GrowthClass::Polynomial { k: 0 } => "polynomial k = 0 (finite dimensional)".to_string(),
        GrowthClass::Polynomial { k } => format!("polynomial k = {k} (HF ~ d^{})", k - 1),
        GrowthClass::Exponential { rate, .. } => format!("exponential rate ≈ {rate:.6}"),
    }
}

pub fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub fn polynomial_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_json).collect())
}

pub fn rational_json(r: &RationalFunction) -> Value {
    json!({
        "numerator": polynomial_json(r.numerator()),
        "denominator": polynomial_json(r.denominator()),
        "text": format_rational(r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn polynomials() {
        assert_eq!(format_polynomial(&p(&[1, -3, 1, 1])), "1 - 3*t + t^2 + t^3");
        assert_eq!(format_polynomial(&p(&[])), "0");
        assert_eq!(format_polynomial(&p(&[0, -1, 0, 2])), "-t + 2*t^3");
        assert_eq!(format_polynomial(&p(&[-2])), "-2");
    }

    #[test]
    fn rationals() {
        let r = RationalFunction::new(p(&[1]), p(&[1, -3, 1, 1]));
        assert_eq!(format_rational(&r), "1/(1 - 3*t + t^2 + t^3)");
        let r = RationalFunction::new(p(&[1, 1, 1, 1]), p(&[1, -3, 1, 1]));
        assert_eq!(format_rational(&r), "(1 + t + t^2 + t^3)/(1 - 3*t + t^2 + t^3)");
        assert_eq!(format_rational(&RationalFunction::free_algebra(2)), "1/(1 - 2*t)");
        assert_eq!(format_rational(&RationalFunction::from_polynomial(p(&[1, 1]))), "1 + t");
        assert_eq!(format_rational(&RationalFunction::zero()), "0");
    }

    #[test]
    fn growth_text() {
        assert_eq!(
            format_growth(&GrowthClass::Exponential { rate: 1.0 + 2f64.sqrt(), tolerance: 1e-9 }),
            "exponential rate ≈ 2.414214"
        );
        assert_eq!(format_growth(&GrowthClass::Polynomial { k: 3 }), "polynomial k = 3 (HF ~ d^2)");
    }

    #[test]
    fn json_shapes() {
        let r = RationalFunction::free_algebra(2);
        assert_eq!(
            rational_json(&r),
            json!({"numerator": [1], "denominator": [1, -2], "text": "1/(1 - 2*t)"})
        );
    }
}
