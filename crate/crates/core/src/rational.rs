//! Small helpers around `BigRational` shared by every module.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational `{0}`")]
pub struct RationalParseError(pub String);

/// Parses `"3"`, `"-2/7"` or a finite decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    let err = || RationalParseError(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = whole.trim_start().starts_with('-');
        let whole = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            BigInt::from_str(whole).map_err(|_| err())?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac = BigInt::from_str(frac).map_err(|_| err())?;
        let magnitude = Rational::from_integer(whole.abs()) + Rational::new(frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    BigInt::from_str(s)
        .map(Rational::from_integer)
        .map_err(|_| err())
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub struct Display<'a>(pub &'a Rational);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self.0))
    }
}

/// log2 of a positive big integer as `f64`, accurate to a few ulps even when
/// the integer does not fit in an `f64`.
pub fn log2_biguint(n: &BigUint) -> f64 {
    assert!(!n.is_zero(), "log2 of zero");
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("fits in f64").log2();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().expect("64-bit prefix");
    top.log2() + shift as f64
}

pub fn log2_rational(r: &Rational) -> f64 {
    assert!(r.is_positive(), "log2 of non-positive rational");
    log2_biguint(r.numer().magnitude()) - log2_biguint(r.denom().magnitude())
}

pub fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let sign = if r.is_negative() { -1.0 } else { 1.0 };
            sign * log2_rational(&r.abs()).exp2()
        }
    }
}

/// `base^exp` for any integer exponent; `base` must be nonzero when `exp < 0`.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// If `value = base^e` for an integer `e`, returns `e`. `base` must exceed 1.
pub fn exact_log(value: &Rational, base: &Rational) -> Option<i64> {
    debug_assert!(*base > Rational::one());
    if !value.is_positive() {
        return None;
    }
    let (mut v, flip) = if *value >= Rational::one() {
        (value.clone(), false)
    } else {
        (value.recip(), true)
    };
    let mut e = 0i64;
    while v > Rational::one() {
        v /= base;
        e += 1;
        if e > 1 << 20 {
            return None;
        }
    }
    (v.is_one()).then_some(if flip { -e } else { e })
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), ratio(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&int(2)), "2");
        assert_eq!(format_rational(&ratio(4, 6)), "2/3");
    }

    #[test]
    fn exact_log_detects_powers() {
        assert_eq!(exact_log(&int(27), &int(3)), Some(3));
        assert_eq!(exact_log(&ratio(1, 8), &int(2)), Some(-3));
        assert_eq!(exact_log(&int(1), &int(5)), Some(0));
        assert_eq!(exact_log(&int(6), &int(2)), None);
    }

    #[test]
    fn log2_of_huge_integers() {
        let n = BigUint::one() << 5000usize;
        assert!((log2_biguint(&n) - 5000.0).abs() < 1e-9);
        let r = Rational::new(BigInt::from(3) << 2000usize, BigInt::one() << 2000usize);
        assert!((log2_rational(&r) - 3f64.log2()).abs() < 1e-12);
    }
}
