//! Small helpers for exact rationals: parsing, decimal printing with
//! directed rounding, and scaled-integer conversions.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` with optional sign; used by all file formats.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::BadInput(format!("bad rational numerator {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::BadInput(format!("bad rational denominator {s:?}")))?;
    if d.is_zero() {
        return Err(Error::BadInput(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `floor(r * 2^bits)` as a big integer.
pub fn floor_scaled(r: &BigRational, bits: u32) -> BigInt {
    let scaled = r * BigRational::from_integer(BigInt::one() << bits);
    scaled.floor().to_integer()
}

/// `ceil(r * 2^bits)` as a big integer.
pub fn ceil_scaled(r: &BigRational, bits: u32) -> BigInt {
    let scaled = r * BigRational::from_integer(BigInt::one() << bits);
    scaled.ceil().to_integer()
}

pub fn pow2(bits: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << bits)
}

/// 2^-bits as a rational.
pub fn pow2_inv(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Decimal string for `r` rounded toward `-inf` (down) or `+inf` (up)
/// at `digits` fractional digits. Used so printed enclosures still
/// contain the true value.
pub fn decimal_string(r: &BigRational, digits: u32, round_up: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * BigRational::from_integer(scale.clone());
    let v = if round_up {
        scaled.ceil().to_integer()
    } else {
        scaled.floor().to_integer()
    };
    let negative = v.sign() == Sign::Minus;
    let abs = v.magnitude().to_string();
    let digits = digits as usize;
    let (int_part, frac_part) = if abs.len() > digits {
        let split = abs.len() - digits;
        (abs[..split].to_string(), abs[split..].to_string())
    } else {
        ("0".to_string(), format!("{abs:0>digits$}"))
    };
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Exact big-rational power with integer exponent >= 0.
pub fn pow_rat(r: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = r.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn abs_rat(r: &BigRational) -> BigRational {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(rational_string(&r), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn decimal_rounding_is_directed() {
        let r = ratio(1, 3);
        assert_eq!(decimal_string(&r, 4, false), "0.3333");
        assert_eq!(decimal_string(&r, 4, true), "0.3334");
        let neg = ratio(-1, 3);
        assert_eq!(decimal_string(&neg, 4, false), "-0.3334");
        assert_eq!(decimal_string(&neg, 4, true), "-0.3333");
    }

    #[test]
    fn scaled_floor_ceil() {
        let r = ratio(5, 3);
        let f = floor_scaled(&r, 8);
        let c = ceil_scaled(&r, 8);
        assert_eq!(&c - &f, big(1));
        assert!(BigRational::new(f, big(256)) <= r);
    }
}
