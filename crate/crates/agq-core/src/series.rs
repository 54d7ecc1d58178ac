//! Dense truncated univariate power series.
//!
//! A [`Series`] stores coefficients `0..=order` of a power series in one
//! variable; coefficient `d` always multiplies `var^d`. Binary operations
//! on operands of different orders silently truncate to the smaller order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{factorial, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    Q,
    X,
}

/// Coefficient ring for [`Series`] and [`crate::BiPoly`].
pub trait Coeff: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> {
    fn add_ref(&mut self, other: &Self);
    fn sub_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    /// `self += a * b`
    fn mul_add(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_ref(&p);
    }
    fn try_inverse(&self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn try_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl Coeff for Rational {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    var: Var,
    coeffs: Vec<C>,
}

/// Series in `t` (or any variable) over exact rationals.
pub type TSeries = Series<Rational>;

impl<C: Coeff> Series<C> {
    pub fn zero(var: Var, order: usize) -> Self {
        Series { var, coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::monomial(var, 0, C::one(), order)
    }

    /// `c * var^exp`, vanishing when `exp > order`.
    pub fn monomial(var: Var, exp: usize, c: C, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Takes `coeffs` as given; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(var: Var, mut coeffs: Vec<C>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        Series { var, coeffs }
    }

    /// Pads with zeros or truncates so that the result has exactly `order`.
    pub fn with_order(var: Var, mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &C {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, d: usize) -> &mut C {
        &mut self.coeffs[d]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Highest exponent carrying a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Series { var: self.var, coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Adds `c * var^exp` in place (ignored beyond the order).
    pub fn add_term(&mut self, exp: usize, c: &C) {
        if exp <= self.order() {
            self.coeffs[exp].add_ref(c);
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x.mul_ref(c)).collect();
        Series { var: self.var, coeffs }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.var, self.order());
        for (d, c) in self.coeffs.iter().enumerate() {
            if d + k > self.order() {
                break;
            }
            out.coeffs[d + k] = c.clone();
        }
        out
    }

    /// Truncated product at an explicit order (at most the operands' order).
    pub fn mul_to(&self, other: &Self, order: usize) -> Self {
        let order = order.min(self.order()).min(other.order());
        let mut out = Self::zero(self.var, order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j].mul_add(a, b);
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NotInvertible)?;
        let order = self.order();
        let mut out = Self::zero(self.var, order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc.mul_add(&self.coeffs[k], &out.coeffs[n - k]);
                }
            }
            out.coeffs[n] = -acc.mul_ref(&inv0);
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// `self^k` truncated to `self.order()` by repeated squaring.
    pub fn pow(&self, k: usize) -> Self {
        PowerCache::new(self.clone()).power(k)
    }

    /// First exponent where the two series differ, within the common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, C, C)> {
        let order = self.order().min(other.order());
        (0..=order)
            .find(|&d| self.coeffs[d] != other.coeffs[d])
            .map(|d| (d, self.coeffs[d].clone(), other.coeffs[d].clone()))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series { var: self.var, coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<C: Coeff> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        let mut out = self.truncate(order);
        for (c, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            c.add_ref(r);
        }
        out
    }
}

impl<C: Coeff> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        let mut out = self.truncate(order);
        for (c, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            c.sub_ref(r);
        }
        out
    }
}

impl<C: Coeff> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: &Series<C>) -> Series<C> {
        self.mul_to(rhs, usize::MAX)
    }
}

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series { var: self.var, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

/// Memoized powers of one base series.
///
/// Power `k` is assembled from cached binary powers `base^(2^i)` and the
/// result is cached too, so sweeping `k` upward costs one product per call.
#[derive(Debug, Clone)]
pub struct PowerCache<C> {
    squares: Vec<Series<C>>,
    cache: BTreeMap<usize, Series<C>>,
}

impl<C: Coeff> PowerCache<C> {
    pub fn new(base: Series<C>) -> Self {
        PowerCache { squares: vec![base], cache: BTreeMap::new() }
    }

    pub fn power(&mut self, k: usize) -> Series<C> {
        let base = &self.squares[0];
        if k == 0 {
            return Series::one(base.var, base.order());
        }
        if let Some(s) = self.cache.get(&k) {
            return s.clone();
        }
        let bits = usize::BITS - k.leading_zeros();
        while self.squares.len() < bits as usize {
            let last = self.squares.last().unwrap();
            let sq = last * last;
            self.squares.push(sq);
        }
        let mut acc: Option<Series<C>> = None;
        for i in 0..bits as usize {
            if k >> i & 1 == 1 {
                acc = Some(match acc {
                    None => self.squares[i].clone(),
                    Some(a) => &a * &self.squares[i],
                });
            }
        }
        let out = acc.unwrap();
        self.cache.insert(k, out.clone());
        out
    }
}

/// `e^{-t} = sum_{k=0}^{order} (-t)^k / k!`.
pub fn series_exp_neg_t(order: usize) -> TSeries {
    exp_scaled(&-Rational::one(), order)
}

/// `e^{c t}` truncated at `order`.
pub fn exp_scaled(c: &Rational, order: usize) -> TSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    for k in 0..=order {
        if k > 0 {
            term = term * c / Rational::from_integer(BigInt::from(k));
        }
        coeffs.push(term.clone());
    }
    Series::from_coeffs(Var::T, coeffs)
}

/// `base^k` truncated at the order of `base`, through a [`PowerCache`].
pub fn series_compose_power<C: Coeff>(base: &Series<C>, k: usize) -> Series<C> {
    PowerCache::new(base.clone()).power(k)
}

/// Substitutes `q = e^{-t}` into an integer q-polynomial, modulo `t^{order+1}`.
///
/// `q^j` becomes `e^{-jt}`, whose `t^d` coefficient is `(-j)^d / d!`; the
/// powers `j^d` are cached row by row so the whole composition reduces to
/// the integer moments `sum_j c_j j^d`.
pub fn compose_exp_neg_t(poly: &Series<BigInt>, order: usize) -> TSeries {
    let mut moments = vec![BigInt::zero(); order + 1];
    let mut row = vec![BigInt::zero(); order + 1];
    for (j, c) in poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let jj = BigInt::from(j);
        row[0] = BigInt::one();
        for d in 1..=order {
            row[d] = &row[d - 1] * &jj;
        }
        for (m, p) in moments.iter_mut().zip(&row) {
            *m += c * p;
        }
    }
    let coeffs = moments
        .into_iter()
        .enumerate()
        .map(|(d, m)| {
            let signed = if d % 2 == 0 { m } else { -m };
            Rational::new(signed, factorial(d))
        })
        .collect();
    Series::from_coeffs(Var::T, coeffs)
}
