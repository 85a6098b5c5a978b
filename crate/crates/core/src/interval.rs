//! Interval arithmetic with exact rational endpoints.
//!
//! Every numerical quantity in the pipeline is carried as a `RatInterval`
//! certified to contain the true real value. Endpoints are exact big
//! rationals, so +, -, * introduce no rounding at all; only the square
//! root, pi and log constructors truncate, and they account for the
//! truncation in the returned interval.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rat::{pow2_inv, pow_rat};

#[derive(Debug, Clone, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Sign if certain: +1, -1, or None when the interval straddles zero.
    pub fn certain_sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        if c.is_negative() {
            RatInterval::new(&self.hi * c, &self.lo * c)
        } else {
            RatInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> RatInterval {
        assert!(
            self.lo.is_positive() || self.hi.is_negative(),
            "reciprocal of interval containing zero"
        );
        RatInterval::new(self.hi.recip(), self.lo.recip())
    }

    pub fn pow(&self, e: u32) -> RatInterval {
        if e == 0 {
            return RatInterval::point(BigRational::one());
        }
        let a = pow_rat(&self.lo, e);
        let b = pow_rat(&self.hi, e);
        if e % 2 == 1 {
            RatInterval::new(a, b)
        } else if self.lo.is_negative() && self.hi.is_positive() {
            RatInterval::new(BigRational::zero(), a.max(b))
        } else {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            RatInterval::new(lo, hi)
        }
    }

    pub fn intersect(&self, other: &RatInterval) -> Option<RatInterval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(RatInterval::new(lo, hi))
        } else {
            None
        }
    }
}

/// Enclosure of sqrt(r) for r >= 0 with width <= 2^-bits.
pub fn sqrt_enclosure(r: &BigRational, bits: u32) -> RatInterval {
    assert!(!r.is_negative(), "sqrt of negative rational");
    if r.is_zero() {
        return RatInterval::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; isolate the integer square root of the
    // numerator scaled by 4^(bits+g) so the dyadic answer has the
    // requested precision.
    let shift = 2 * (bits + 2);
    let scaled: BigInt = (r.numer() * r.denom()) << shift;
    let root = scaled.sqrt(); // floor square root
    let denom = BigRational::from_integer(r.denom() * (BigInt::one() << (bits + 2)));
    let lo = BigRational::from_integer(root.clone()) / denom.clone();
    let hi = BigRational::from_integer(root + BigInt::one()) / denom;
    RatInterval::new(lo, hi)
}

/// Enclosure of pi via the Machin formula
/// pi = 16*atan(1/5) - 4*atan(1/239); alternating-series tails bound the
/// truncation on each side.
pub fn pi_enclosure(bits: u32) -> RatInterval {
    let terms = (bits as usize) / 4 + 4; // atan(1/5) gains ~4.6 bits/term
    let a5 = atan_inv_enclosure(5, terms);
    let a239 = atan_inv_enclosure(239, terms);
    let sixteen = BigRational::from_integer(BigInt::from(16));
    let four = BigRational::from_integer(BigInt::from(4));
    a5.scale(&sixteen).sub(&a239.scale(&four))
}

/// Enclosure of atan(1/x) for integer x >= 2 using `terms` terms of the
/// alternating Leibniz series.
fn atan_inv_enclosure(x: i64, terms: usize) -> RatInterval {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut sum = BigRational::zero();
    let mut power = x.clone(); // x^(2j+1)
    let mut last_term = BigRational::zero();
    for j in 0..terms {
        let term = BigRational::new(BigInt::one(), &power * BigInt::from(2 * j as i64 + 1));
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power *= &x2;
        last_term = term;
    }
    // Alternating series: the truth lies between consecutive partial sums.
    if terms % 2 == 0 {
        RatInterval::new(sum.clone(), sum + last_term)
    } else {
        RatInterval::new(&sum - &last_term, sum)
    }
}

/// Enclosure of ln(r) for rational r >= 1.
///
/// Writes r = m * 2^e with m in [1,2) and uses ln m = 2 atanh((m-1)/(m+1))
/// whose argument is below 1/3, so the series tail is geometric.
pub fn ln_enclosure(r: &BigRational, bits: u32) -> RatInterval {
    assert!(*r >= BigRational::one(), "ln restricted to r >= 1");
    let two = BigRational::from_integer(BigInt::from(2));
    let mut m = r.clone();
    let mut e = 0u32;
    while m >= two {
        m /= &two;
        e += 1;
    }
    let ln_m = atanh_ratio_enclosure(&m, bits);
    if e == 0 {
        return ln_m;
    }
    let ln2 = atanh_ratio_enclosure(&two, bits);
    ln_m.add(&ln2.scale(&BigRational::from_integer(BigInt::from(e))))
}

/// Enclosure of ln(v) = 2 atanh(u), u = (v-1)/(v+1), for v in [1, 2].
fn atanh_ratio_enclosure(v: &BigRational, bits: u32) -> RatInterval {
    let u = (v - BigRational::one()) / (v + BigRational::one());
    if u.is_zero() {
        return RatInterval::zero();
    }
    // u <= 1/3, so each term shrinks by at least 9x.
    let terms = (bits as usize) / 3 + 3;
    let u2 = &u * &u;
    let mut sum = BigRational::zero();
    let mut power = u.clone();
    for j in 0..terms {
        sum += &power / BigRational::from_integer(BigInt::from(2 * j as i64 + 1));
        power *= &u2;
    }
    // Tail <= u^(2T+1)/(2T+1) * 1/(1-u^2).
    let tail = &power / BigRational::from_integer(BigInt::from(2 * terms as i64 + 1))
        / (BigRational::one() - u2);
    let two = BigRational::from_integer(BigInt::from(2));
    RatInterval::new(&sum * &two, (sum + tail) * two)
}

/// Shrinks an interval value to width <= 2^-bits by outward dyadic rounding;
/// keeps endpoints small when long exact computations have bloated them.
pub fn round_outward(iv: &RatInterval, bits: u32) -> RatInterval {
    let step = pow2_inv(bits);
    let lo = (&iv.lo / &step).floor() * &step;
    let hi = (&iv.hi / &step).ceil() * &step;
    RatInterval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn interval_mul_covers_products() {
        let a = RatInterval::new(ratio(-1, 2), rat(3));
        let b = RatInterval::new(rat(-2), ratio(5, 7));
        let p = a.mul(&b);
        assert!(p.contains(&(ratio(-1, 2) * ratio(5, 7))));
        assert!(p.contains(&(rat(3) * rat(-2))));
    }

    #[test]
    fn sqrt_five_brackets() {
        let s = sqrt_enclosure(&rat(5), 64);
        assert!(s.width() <= pow2_inv(64));
        let lo2 = pow_rat(&s.lo, 2);
        let hi2 = pow_rat(&s.hi, 2);
        assert!(lo2 <= rat(5) && rat(5) <= hi2);
    }

    #[test]
    fn pi_matches_known_digits() {
        let p = pi_enclosure(80);
        // 3.14159265358979323846...
        let lo = parse("3.14159265358979323845");
        let hi = parse("3.14159265358979323847");
        assert!(p.lo > lo && p.hi < hi);
        assert!(p.width() <= pow2_inv(78));
    }

    #[test]
    fn ln_matches_known_digits() {
        let l2 = ln_enclosure(&rat(2), 80);
        assert!(l2.lo > parse("0.69314718055994530940") && l2.hi < parse("0.69314718055994530943"));
        let l10 = ln_enclosure(&rat(10), 80);
        assert!(l10.lo > parse("2.302585092994045") && l10.hi < parse("2.302585092994046"));
    }

    fn parse(s: &str) -> BigRational {
        let (int, frac) = s.split_once('.').unwrap();
        let digits = frac.len() as u32;
        let n: BigInt = format!("{int}{frac}").parse().unwrap();
        BigRational::new(n, BigInt::from(10u32).pow(digits))
    }
}
