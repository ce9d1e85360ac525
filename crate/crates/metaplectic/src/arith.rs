//! Exact-arithmetic helpers shared by the algebraic layers: factorials,
//! Pochhammer symbols, binomials, and the `p/q` string form used by every
//! serialized rational in this crate.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// n! as an exact rational.
pub fn factorial_rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(factorial(n)))
}

/// Rising factorial (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1.
pub fn pochhammer(a: &BigRational, m: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..m {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..k {
        num *= BigUint::from(n - j);
        den *= BigUint::from(j + 1);
    }
    num / den
}

/// Falling factorial n (n-1) ... (n-k+1); zero when k > n.
pub fn falling(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= BigUint::from(n - j);
    }
    acc
}

/// Rational from an integer pair. Panics on q = 0.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats a rational as `p/q` with the denominator always present, e.g.
/// `-2/3`, `1/1`, `0/1`.
pub fn rat_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn rat_parse(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|e| Error::Parse(format!("`{s}`: {e}")))
}

/// Converts a rational of arbitrary size to the nearest f64, up to one unit
/// in the last place. Plain `numer/denom` conversion overflows once either
/// side exceeds the f64 range, so the quotient is computed with an explicit
/// binary shift first.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let neg = r.is_negative();
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    let shift = 96i64 - (n.bits() as i64 - d.bits() as i64);
    let q = if shift >= 0 {
        (n << shift as u64) / d
    } else {
        n / (d << (-shift) as u64)
    };
    let mut v = q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-shift as i32);
    if neg {
        v = -v;
    }
    v
}

/// Formats a float with 17 significant digits, enough to round-trip any f64.
pub fn f64_string(v: f64) -> String {
    format!("{v:.16e}")
}

/// Serde helper: emits a rational as its `p/q` string.
pub fn serialize_rat<S: serde::Serializer>(
    r: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(r))
}

/// Serde helper for vectors of rationals.
pub fn serialize_rat_vec<S: serde::Serializer>(
    v: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&rat_string(r))?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_pochhammer() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        let third = rat(1, 3);
        // (1/3)_3 = (1/3)(4/3)(7/3) = 28/27
        assert_eq!(pochhammer(&third, 3), rat(28, 27));
        assert_eq!(pochhammer(&third, 0), BigRational::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(4, 5), BigUint::zero());
        assert_eq!(falling(5, 2), BigUint::from(20u32));
        assert_eq!(falling(2, 3), BigUint::zero());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_string(&rat(-2, 3)), "-2/3");
        assert_eq!(rat_string(&rat(1, 1)), "1/1");
        assert_eq!(rat_parse("-2/3").unwrap(), rat(-2, 3));
        assert_eq!(rat_parse("7").unwrap(), rat(7, 1));
        assert!(rat_parse("x/y").is_err());
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = pochhammer(&rat(1, 3), 200) / pochhammer(&rat(1, 2), 200);
        let v = rat_to_f64(&big);
        assert!(v.is_finite() && v > 0.0);
        // ratio of gamma quotients decays like m^(1/3 - 1/2)
        let log_expected = (1..=200)
            .map(|j| ((j as f64 - 2.0 / 3.0) / (j as f64 - 0.5)).ln())
            .sum::<f64>();
        assert!((v.ln() - log_expected).abs() < 1e-10);
    }

    #[test]
    fn small_rational_to_f64_is_exact() {
        assert_eq!(rat_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(rat_to_f64(&rat(-7, 4)), -1.75);
        assert_eq!(rat_to_f64(&rat(1, 3)), 1.0 / 3.0);
    }
}
