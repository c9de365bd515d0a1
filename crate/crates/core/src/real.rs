//! High-precision reals for the transcendental bounds, with rigorous
//! comparison against exact counts and rationals.
//!
//! A value computed at `d` decimal digits is evaluated with
//! `ceil(d * log2(10)) + 64` bits of working precision and is treated as an
//! enclosure `[v (1 - 10^-d), v (1 + 10^-d)]`. The evaluators in this crate
//! chain a few dozen correctly rounded primitives whose error amplification
//! (at most the magnitude of an exponent argument) stays far below the 64
//! guard bits, so the true value lies inside the enclosure. A comparison that
//! the enclosure cannot decide is reported as undecided, never guessed.

use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 50;

const GUARD_BITS: usize = 64;
const RM: RoundingMode = RoundingMode::ToEven;

/// A real number known to a recorded number of decimal digits.
#[derive(Debug, Clone)]
pub struct HighPrecisionReal {
    value: BigFloat,
    digits: u32,
}

impl HighPrecisionReal {
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// The exact rational value of the stored approximation.
    pub fn to_rational(&self) -> BigRational {
        float_to_rational(&self.value)
    }

    /// Interval guaranteed to contain the true value.
    pub fn enclosure(&self) -> (BigRational, BigRational) {
        let v = self.to_rational();
        let slack = v.abs() / BigRational::from_integer(BigInt::from(10u32).pow(self.digits));
        (&v - &slack, &v + &slack)
    }

    /// Ordering of `self` relative to `x`, `None` when `x` lies inside the enclosure.
    pub fn compare_rational(&self, x: &BigRational) -> Option<Ordering> {
        let (lo, hi) = self.enclosure();
        if &lo > x {
            Some(Ordering::Greater)
        } else if &hi < x {
            Some(Ordering::Less)
        } else if lo == hi && &lo == x {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn compare_count(&self, count: &BigUint) -> Option<Ordering> {
        self.compare_rational(&BigRational::from_integer(BigInt::from(count.clone())))
    }

    /// Ordering of `self` relative to `other`, `None` when the enclosures overlap.
    pub fn compare(&self, other: &HighPrecisionReal) -> Option<Ordering> {
        let (lo, hi) = self.enclosure();
        let (olo, ohi) = other.enclosure();
        if lo > ohi {
            Some(Ordering::Greater)
        } else if hi < olo {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Scientific notation with `significant` digits, e.g. `1.9988e8`.
    pub fn to_scientific(&self, significant: usize) -> String {
        format_scientific(&self.to_rational(), significant)
    }

    /// Exact conversion of a count.
    pub fn from_count(count: &BigUint, digits: u32) -> Self {
        let ctx = RealContext::new(digits);
        let v = ctx.big(count);
        ctx.finish(v)
    }

    /// `ln(count)`; `count` must be positive.
    pub fn ln_count(count: &BigUint, digits: u32) -> Self {
        let mut ctx = RealContext::new(digits);
        let v = ctx.big(count);
        let l = ctx.ln(&v);
        ctx.finish(l)
    }

    pub fn from_rational(r: &BigRational, digits: u32) -> Self {
        let ctx = RealContext::new(digits);
        let v = ctx.rational(r);
        ctx.finish(v)
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_scientific(self.digits as usize))
    }
}

/// Working-precision arithmetic used to build a [`HighPrecisionReal`].
pub struct RealContext {
    bits: usize,
    digits: u32,
    consts: Consts,
}

impl RealContext {
    pub fn new(digits: u32) -> Self {
        let digits = digits.max(1);
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS;
        RealContext {
            bits,
            digits,
            consts: Consts::new().expect("constants cache"),
        }
    }

    pub fn finish(self, value: BigFloat) -> HighPrecisionReal {
        assert!(!value.is_nan() && !value.is_inf(), "non-finite real: {value}");
        HighPrecisionReal {
            value,
            digits: self.digits,
        }
    }

    pub fn int(&self, v: u64) -> BigFloat {
        BigFloat::from_u64(v, self.bits.max(64))
    }

    /// Exact for any size of `v`.
    pub fn big(&self, v: &BigUint) -> BigFloat {
        if v.is_zero() {
            return BigFloat::from_u64(0, self.bits);
        }
        let words = v.to_u64_digits();
        let e = (words.len() * 64) as i32;
        BigFloat::from_words(&words, Sign::Pos, e)
    }

    pub fn rational(&self, r: &BigRational) -> BigFloat {
        let num = self.big(&r.numer().magnitude().clone());
        let den = self.big(&r.denom().magnitude().clone());
        let q = self.div(&num, &den);
        if r.is_negative() {
            q.neg()
        } else {
            q
        }
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.bits, RM)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.bits, RM, &mut self.consts)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.bits, RM, &mut self.consts)
    }

    pub fn log2(&mut self, a: &BigFloat) -> BigFloat {
        let two = self.int(2);
        let ln2 = self.ln(&two);
        let l = self.ln(a);
        self.div(&l, &ln2)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.consts.pi(self.bits, RM)
    }

    /// `a^b` for positive `a`.
    pub fn pow(&mut self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        let l = self.ln(a);
        let x = self.mul(&l, b);
        self.exp(&x)
    }
}

fn float_to_rational(v: &BigFloat) -> BigRational {
    if v.is_zero() {
        return BigRational::zero();
    }
    let (words, _bits, sign, e, _) = v.as_raw_parts().expect("finite value");
    let mantissa = words
        .iter()
        .rev()
        .fold(BigUint::zero(), |acc, &w| (acc << 64u32) | BigUint::from(w));
    let shift = e as i64 - 64 * words.len() as i64;
    let mut r = BigRational::from_integer(BigInt::from(mantissa));
    let two_pow = BigRational::from_integer(BigInt::one() << shift.unsigned_abs());
    if shift >= 0 {
        r *= two_pow;
    } else {
        r /= two_pow;
    }
    if sign == Sign::Neg {
        -r
    } else {
        r
    }
}

/// Decimal scientific notation of an exact rational with `significant`
/// digits, rounding half away from zero.
pub fn format_scientific(r: &BigRational, significant: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let significant = significant.max(1);
    let sign = if r.is_negative() { "-" } else { "" };
    let x = r.abs();
    let ten = BigRational::from_integer(BigInt::from(10u32));
    let pow10 = |k: i64| -> BigRational {
        let p = BigRational::from_integer(BigInt::from(10u32).pow(k.unsigned_abs() as u32));
        if k >= 0 {
            p
        } else {
            p.recip()
        }
    };
    let approx_bits = x.numer().bits() as i64 - x.denom().bits() as i64;
    let mut exp10 = (approx_bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while pow10(exp10) > x {
        exp10 -= 1;
    }
    while pow10(exp10 + 1) <= x {
        exp10 += 1;
    }
    let scaled = &x * pow10(significant as i64 - 1 - exp10);
    let half = BigRational::new(BigInt::one(), BigInt::from(2u32));
    let mut mantissa = (scaled + half).floor().to_integer();
    if BigRational::from_integer(mantissa.clone()) >= ten.pow(significant as i32) {
        mantissa /= 10u32;
        exp10 += 1;
    }
    let digits = mantissa.to_string();
    let (head, tail) = digits.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{exp10}")
    } else {
        format!("{sign}{head}.{tail}e{exp10}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exact_conversions() {
        let c = BigUint::parse_bytes(b"123456789012345678901234567890123456789", 10).unwrap();
        let r = HighPrecisionReal::from_count(&c, 10);
        assert_eq!(r.to_rational(), BigRational::from_integer(BigInt::from(c.clone())));
        assert_eq!(r.compare_count(&c), None);
        assert_eq!(r.compare_count(&(&c * 2u32)), Some(Ordering::Less));
        let third = HighPrecisionReal::from_rational(&rat(1, 3), 30);
        assert_eq!(third.compare_rational(&rat(333, 1000)), Some(Ordering::Greater));
        assert_eq!(third.compare_rational(&rat(1, 3)), None);
    }

    #[test]
    fn transcendental_values() {
        let mut ctx = RealContext::new(40);
        let one = ctx.int(1);
        let e = ctx.exp(&one);
        let e = ctx.finish(e);
        assert_eq!(e.to_scientific(20), "2.7182818284590452354e0");
        let mut ctx = RealContext::new(40);
        let pi = ctx.pi();
        assert_eq!(ctx.finish(pi).to_scientific(15), "3.14159265358979e0");
        let ln = HighPrecisionReal::ln_count(&BigUint::from(1024u32), 30);
        assert_eq!(ln.to_scientific(12), "6.93147180560e0");
    }

    #[test]
    fn scientific_formatting() {
        assert_eq!(format_scientific(&rat(0, 1), 5), "0");
        assert_eq!(format_scientific(&rat(1, 1), 3), "1.00e0");
        assert_eq!(format_scientific(&rat(-1, 8), 2), "-1.3e-1");
        assert_eq!(format_scientific(&rat(999_999, 1), 3), "1.00e6");
        assert_eq!(format_scientific(&rat(190_569_292, 1), 4), "1.906e8");
        assert_eq!(format_scientific(&rat(7, 1), 1), "7e0");
        assert_eq!(format_scientific(&rat(1, 1000), 2), "1.0e-3");
    }

    #[test]
    fn enclosure_is_ordered() {
        let r = HighPrecisionReal::from_rational(&rat(-5, 7), 20);
        let (lo, hi) = r.enclosure();
        assert!(lo < rat(-5, 7) || lo == rat(-5, 7));
        assert!(hi > lo);
        assert!(HighPrecisionReal::from_rational(&rat(1, 2), 20)
            .compare(&HighPrecisionReal::from_rational(&rat(1, 3), 20))
            == Some(Ordering::Greater));
    }
}
