//! The scalar type: arbitrary-precision rationals.
//!
//! All mathematics in this crate happens over `Q`; there is no floating
//! point anywhere in the computational core. `num-rational` keeps values in
//! canonical form (positive denominator, reduced fraction) after every
//! operation, which is exactly the invariant the rest of the crate relies
//! on for syntactic equality of canonical objects.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// Exact rational scalar. Canonical form: reduced, denominator positive.
pub type Rational = num::BigRational;

/// Shorthand for a small rational `n/d`.
///
/// Panics if `d == 0`; intended for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for a small integer as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational in the canonical wire form: `"p/q"`, or `"p"` when the
/// denominator is one. The sign sits on the numerator.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the wire form produced by [`format_rational`].
///
/// Accepts `"p"` and `"p/q"` with an optional leading sign on the numerator;
/// the result is reduced to canonical form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.parse().map_err(|_| bad())?;
            let d: BigInt = den.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Dot product of two equal-length slices.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// True when every entry is zero.
pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Scales `v` so that its first nonzero entry is positive. Zero vectors are
/// returned unchanged.
pub fn sign_normalize(mut v: Vec<Rational>) -> Vec<Rational> {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut v {
                *x = -x.clone();
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_integers_without_slash() {
        assert_eq!(format_rational(&rint(5)), "5");
        assert_eq!(format_rational(&rint(-3)), "-3");
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a", "1/2/3", "1.5", "/2"] {
            assert!(parse_rational(s).is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn parse_reduces_to_canonical() {
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("0/7").unwrap(), rint(0));
    }

    proptest! {
        #[test]
        fn roundtrip(n in -1000i64..1000, d in 1i64..1000) {
            let r = rat(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
