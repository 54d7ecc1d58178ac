//! Arbitrary-precision real and complex floats.
//!
//! Thin wrappers over [`astro_float::BigFloat`] with round-to-nearest-even.
//! Each value carries its precision; binary operations work at the smaller
//! of the two.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::{BigInt, Sign as BigSign};
use num_traits::Zero;

use crate::rational::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

fn consts() -> Consts {
    Consts::new().expect("constant cache allocation")
}

#[derive(Clone, Debug)]
pub struct ApReal {
    v: BigFloat,
    bits: usize,
}

impl ApReal {
    fn wrap(v: BigFloat, bits: usize) -> Self {
        ApReal { v, bits }
    }

    pub fn zero(bits: usize) -> Self {
        Self::wrap(BigFloat::new(bits), bits)
    }

    pub fn from_i64(n: i64, bits: usize) -> Self {
        Self::wrap(BigFloat::from_i64(n, bits), bits)
    }

    pub fn from_f64(x: f64, bits: usize) -> Self {
        Self::wrap(BigFloat::from_f64(x, bits), bits)
    }

    pub fn from_bigint(n: &BigInt, bits: usize) -> Self {
        if n.is_zero() {
            return Self::zero(bits);
        }
        let (sign, digits) = n.to_u64_digits();
        let words: Vec<Word> = digits.iter().map(|&d| d as Word).collect();
        let e = (64 * words.len()) as i32;
        let s = if sign == BigSign::Minus { Sign::Neg } else { Sign::Pos };
        let mut v = BigFloat::from_words(&words, s, e);
        v.set_precision(bits, RM).expect("valid precision");
        Self::wrap(v, bits)
    }

    pub fn from_rational(r: &Rational, bits: usize) -> Self {
        Self::from_bigint(r.numer(), bits + 64).div(&Self::from_bigint(r.denom(), bits + 64)).with_bits(bits)
    }

    /// `2^k`.
    pub fn pow2(k: i32, bits: usize) -> Self {
        let mut v = BigFloat::from_words(&[1 << 63], Sign::Pos, k + 1);
        v.set_precision(bits, RM).expect("valid precision");
        Self::wrap(v, bits)
    }

    pub fn pi(bits: usize) -> Self {
        Self::wrap(consts().pi(bits, RM), bits)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn with_bits(mut self, bits: usize) -> Self {
        self.v.set_precision(bits, RM).expect("valid precision");
        self.bits = bits;
        self
    }

    fn p(&self, o: &Self) -> usize {
        self.bits.min(o.bits)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.p(o);
        Self::wrap(self.v.add(&o.v, p, RM), p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.p(o);
        Self::wrap(self.v.sub(&o.v, p, RM), p)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.p(o);
        Self::wrap(self.v.mul(&o.v, p, RM), p)
    }

    pub fn div(&self, o: &Self) -> Self {
        let p = self.p(o);
        Self::wrap(self.v.div(&o.v, p, RM), p)
    }

    pub fn mul_i64(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(n, self.bits))
    }

    pub fn div_i64(&self, n: i64) -> Self {
        self.div(&Self::from_i64(n, self.bits))
    }

    pub fn neg(&self) -> Self {
        Self::wrap(self.v.neg(), self.bits)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.bits)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.bits, RM), self.bits)
    }

    pub fn exp(&self) -> Self {
        Self::wrap(self.v.exp(self.bits, RM, &mut consts()), self.bits)
    }

    pub fn ln(&self) -> Self {
        Self::wrap(self.v.ln(self.bits, RM, &mut consts()), self.bits)
    }

    pub fn sin(&self) -> Self {
        Self::wrap(self.v.sin(self.bits, RM, &mut consts()), self.bits)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(self.v.cos(self.bits, RM, &mut consts()), self.bits)
    }

    pub fn atan(&self) -> Self {
        Self::wrap(self.v.atan(self.bits, RM, &mut consts()), self.bits)
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.v.powi(n, self.bits, RM), self.bits)
    }

    /// `atan2(y, x)` in `(-pi, pi]`.
    pub fn atan2(y: &Self, x: &Self) -> Self {
        let bits = y.p(x);
        let pi = Self::pi(bits);
        if x.is_zero() {
            return match y.sign() {
                Ordering::Less => pi.div_i64(-2),
                Ordering::Greater => pi.div_i64(2),
                Ordering::Equal => Self::zero(bits),
            };
        }
        let base = y.div(x).atan();
        match (x.sign(), y.sign()) {
            (Ordering::Greater, _) => base,
            (_, Ordering::Less) => base.sub(&pi),
            _ => base.add(&pi),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }

    pub fn sign(&self) -> Ordering {
        if self.v.is_zero() {
            Ordering::Equal
        } else if self.v.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Binary exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.v.is_zero() {
            None
        } else {
            self.v.exponent()
        }
    }

    /// Nearest `f64`, saturating to 0 or infinity outside its range.
    pub fn to_f64(&self) -> f64 {
        let Some((m, _, s, e, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        let top = match m.last() {
            Some(&w) if w != 0 => w,
            _ => return 0.0,
        };
        let biased = e as i64 - 1 + 1023;
        let mag = if biased >= 2047 {
            f64::INFINITY
        } else if biased <= 0 {
            0.0
        } else {
            f64::from_bits((biased as u64) << 52 | ((top << 1) >> 12))
        };
        if s == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    pub fn to_hex(&self) -> String {
        self.v.format(Radix::Hex, RM, &mut consts()).unwrap_or_else(|_| "nan".to_string())
    }

    pub fn to_dec(&self) -> String {
        self.v.format(Radix::Dec, RM, &mut consts()).unwrap_or_else(|_| "nan".to_string())
    }

    /// Decimal rendering rounded to `digits` significant digits.
    pub fn to_dec_digits(&self, digits: usize) -> String {
        round_decimal(&self.to_dec(), digits.max(1))
    }
}

/// Rounds astro-float's `[-]d.ddde[+-]x` output to `digits` significant digits.
fn round_decimal(s: &str, digits: usize) -> String {
    let (mant, exp) = s.split_once('e').unwrap_or((s, "0"));
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant),
    };
    let mut ds: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    let Ok(mut e) = exp.parse::<i64>() else {
        return s.to_string();
    };
    if ds.iter().all(|&d| d == 0) {
        return "0".to_string();
    }
    let round_up = ds.get(digits).is_some_and(|&d| d >= 5);
    ds.truncate(digits);
    if round_up {
        let mut i = ds.len();
        loop {
            if i == 0 {
                ds.insert(0, 1);
                ds.pop();
                e += 1;
                break;
            }
            i -= 1;
            if ds[i] == 9 {
                ds[i] = 0;
            } else {
                ds[i] += 1;
                break;
            }
        }
    }
    while ds.len() > 1 && ds.last() == Some(&0) {
        ds.pop();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + ds[0]) as char);
    if ds.len() > 1 {
        out.push('.');
        out.extend(ds[1..].iter().map(|&d| (b'0' + d) as char));
    }
    if e != 0 {
        out.push_str(&format!("e{e}"));
    }
    out
}

impl PartialEq for ApReal {
    fn eq(&self, o: &Self) -> bool {
        self.v.cmp(&o.v) == Some(0)
    }
}

impl PartialOrd for ApReal {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        self.v.cmp(&o.v).map(|c| c.cmp(&0))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApComplex {
    pub re: ApReal,
    pub im: ApReal,
}

impl ApComplex {
    pub fn new(re: ApReal, im: ApReal) -> Self {
        ApComplex { re, im }
    }

    pub fn zero(bits: usize) -> Self {
        Self::new(ApReal::zero(bits), ApReal::zero(bits))
    }

    pub fn one(bits: usize) -> Self {
        Self::from_real(ApReal::from_i64(1, bits))
    }

    pub fn i(bits: usize) -> Self {
        Self::new(ApReal::zero(bits), ApReal::from_i64(1, bits))
    }

    pub fn from_real(re: ApReal) -> Self {
        let bits = re.bits();
        Self::new(re, ApReal::zero(bits))
    }

    pub fn from_i64(n: i64, bits: usize) -> Self {
        Self::from_real(ApReal::from_i64(n, bits))
    }

    pub fn bits(&self) -> usize {
        self.re.bits().min(self.im.bits())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn scale(&self, r: &ApReal) -> Self {
        Self::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        Self::new(self.re.mul_i64(n), self.im.mul_i64(n))
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        let num = self.mul(&o.conj());
        Self::new(num.re.div(&d), num.im.div(&d))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    /// Multiplies by `i`.
    pub fn mul_i(&self) -> Self {
        Self::new(self.im.neg(), self.re.clone())
    }

    pub fn norm_sqr(&self) -> ApReal {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> ApReal {
        self.norm_sqr().sqrt()
    }

    pub fn arg(&self) -> ApReal {
        ApReal::atan2(&self.im, &self.re)
    }

    /// `e^{i theta}`.
    pub fn cis(theta: &ApReal) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    pub fn exp(&self) -> Self {
        Self::cis(&self.im).scale(&self.re.exp())
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        Self::new(self.abs().ln(), self.arg())
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let r = self.abs();
        let re = r.add(&self.re).div_i64(2).sqrt();
        let im = r.sub(&self.re).div_i64(2).sqrt();
        let im = if self.im.sign() == Ordering::Less { im.neg() } else { im };
        Self::new(re, im)
    }

    /// Principal power `exp(s Log z)` for real `s`.
    pub fn powr(&self, s: &ApReal) -> Self {
        self.ln().scale(s).exp()
    }

    pub fn powi(&self, n: usize) -> Self {
        let mut acc = Self::one(self.bits());
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// `max(|re|, |im|)`, a cheap norm for tolerance checks.
    pub fn max_abs(&self) -> ApReal {
        let (a, b) = (self.re.abs(), self.im.abs());
        if a >= b {
            a
        } else {
            b
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn decimal_rounding() {
        assert_eq!(round_decimal("1.41999999999999999999993e+0", 20), "1.42");
        assert_eq!(round_decimal("-2.e+0", 5), "-2");
        assert_eq!(round_decimal("9.996e-3", 3), "1e-2");
        assert_eq!(round_decimal("0.0", 3), "0");
        assert_eq!(ApReal::from_rational(&frac(-1, 3), 128).to_dec_digits(4), "-3.333e-1");
    }

    const B: usize = 256;

    fn close(a: &ApReal, b: &ApReal, k: i32) -> bool {
        a.sub(b).abs() < ApReal::pow2(-k, B)
    }

    #[test]
    fn bigint_conversion() {
        let n: BigInt = "123456789012345678901234567890123".parse().unwrap();
        let x = ApReal::from_bigint(&n, B);
        assert!(x.to_dec_digits(33).replace('.', "").starts_with("1234567890123456789012345678901"));
        assert_eq!(ApReal::from_bigint(&BigInt::from(-5), B), ApReal::from_i64(-5, B));
        let r = ApReal::from_rational(&frac(1, 3), B).mul_i64(3);
        assert!(close(&r, &ApReal::from_i64(1, B), 250));
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(ApReal::pow2(0, B), ApReal::from_i64(1, B));
        assert_eq!(ApReal::pow2(3, B), ApReal::from_i64(8, B));
        assert_eq!(ApReal::pow2(-1, B).to_f64(), 0.5);
        assert_eq!(ApReal::pow2(-128, B).exponent(), Some(-127));
    }

    #[test]
    fn to_f64_matches() {
        for x in [1.0, -2.5, 1e-30, 3.0e20, 0.1] {
            assert_eq!(ApReal::from_f64(x, B).to_f64(), x);
        }
        assert_eq!(ApReal::zero(B).to_f64(), 0.0);
    }

    #[test]
    fn transcendental_identities() {
        let x = ApReal::from_rational(&frac(7, 5), B);
        let s = x.sin();
        let c = x.cos();
        assert!(close(&s.mul(&s).add(&c.mul(&c)), &ApReal::from_i64(1, B), 240));
        assert!(close(&x.exp().ln(), &x, 240));
        let pi = ApReal::pi(B);
        let q = ApReal::atan2(&ApReal::from_i64(1, B), &ApReal::from_i64(-1, B));
        assert!(close(&q, &pi.mul_i64(3).div_i64(4), 240));
    }

    #[test]
    fn principal_branches() {
        let minus_i = ApComplex::i(B).neg();
        let r = minus_i.sqrt();
        let h = ApReal::from_i64(2, B).sqrt().div_i64(2);
        assert!(close(&r.re, &h, 240) && close(&r.im, &h.neg(), 240));
        let z = ApComplex::new(ApReal::from_i64(-3, B), ApReal::from_i64(4, B));
        let w = z.sqrt();
        assert!(close(&w.mul(&w).re, &z.re, 240) && close(&w.mul(&w).im, &z.im, 240));
        let p = z.powr(&ApReal::from_i64(2, B));
        let zz = z.mul(&z);
        assert!(close(&p.re, &zz.re, 230) && close(&p.im, &zz.im, 230));
    }

    #[test]
    fn precision_propagates_as_minimum() {
        let a = ApReal::from_i64(3, 128);
        let b = ApReal::from_i64(5, 256);
        assert_eq!(a.mul(&b).bits(), 128);
    }
}
