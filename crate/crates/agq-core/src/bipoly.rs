//! Dense truncated polynomials in `(x, q)`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rational::Rational;
use crate::series::{Coeff, Series};

/// Coefficients of `x^i q^j` for `i <= dx`, `j <= dq`, stored row-major by
/// x-exponent. Every operation truncates jointly to the smaller bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<C = Rational> {
    dx: usize,
    dq: usize,
    data: Vec<C>,
}

impl<C: Coeff> BiPoly<C> {
    pub fn zero(dx: usize, dq: usize) -> Self {
        BiPoly { dx, dq, data: vec![C::zero(); (dx + 1) * (dq + 1)] }
    }

    pub fn one(dx: usize, dq: usize) -> Self {
        Self::monomial(0, 0, C::one(), dx, dq)
    }

    pub fn monomial(i: usize, j: usize, c: C, dx: usize, dq: usize) -> Self {
        let mut p = Self::zero(dx, dq);
        p.add_term(i, j, &c);
        p
    }

    pub fn dx(&self) -> usize {
        self.dx
    }

    pub fn dq(&self) -> usize {
        self.dq
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.dq + 1) + j
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[self.idx(i, j)]
    }

    /// Coefficients of `x^i` as a q-series.
    pub fn row(&self, i: usize) -> &[C] {
        let s = self.idx(i, 0);
        &self.data[s..s + self.dq + 1]
    }

    pub fn coeff_mut(&mut self, i: usize, j: usize) -> &mut C {
        let k = self.idx(i, j);
        &mut self.data[k]
    }

    /// In place `*= (1 - x q^e)`.
    pub fn mul_one_minus_xq(&mut self, e: usize) {
        for i in (1..=self.dx).rev() {
            for j in (e..=self.dq).rev() {
                let v = self.get(i - 1, j - e).clone();
                self.coeff_mut(i, j).sub_ref(&v);
            }
        }
    }

    /// In place `/= (1 - x q^e)`.
    pub fn div_one_minus_xq(&mut self, e: usize) {
        for i in 1..=self.dx {
            for j in e..=self.dq {
                let v = self.get(i - 1, j - e).clone();
                self.coeff_mut(i, j).add_ref(&v);
            }
        }
    }

    /// Adds `c x^i q^j`; silently dropped outside the bounds.
    pub fn add_term(&mut self, i: usize, j: usize, c: &C) {
        if i <= self.dx && j <= self.dq {
            let k = self.idx(i, j);
            self.data[k].add_ref(c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, dx: usize, dq: usize) -> Self {
        let (dx, dq) = (dx.min(self.dx), dq.min(self.dq));
        let mut out = Self::zero(dx, dq);
        for i in 0..=dx {
            for j in 0..=dq {
                let k = out.idx(i, j);
                out.data[k] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        BiPoly { dx: self.dx, dq: self.dq, data: self.data.iter().map(|v| v.mul_ref(c)).collect() }
    }

    /// Multiplies by `x^a q^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.dx, self.dq);
        for i in 0..=self.dx.saturating_sub(a) {
            for j in 0..=self.dq.saturating_sub(b) {
                if i + a <= self.dx && j + b <= self.dq {
                    let k = out.idx(i + a, j + b);
                    out.data[k] = self.get(i, j).clone();
                }
            }
        }
        out
    }

    /// `P(q x)`: the coefficient of `x^i q^j` moves to `x^i q^{j+i}`.
    pub fn subst_qx(&self) -> Self {
        let mut out = Self::zero(self.dx, self.dq);
        for i in 0..=self.dx {
            for j in 0..=self.dq {
                if j + i <= self.dq {
                    let k = out.idx(i, j + i);
                    out.data[k] = self.get(i, j).clone();
                }
            }
        }
        out
    }

    /// Multiplies every x-row by a univariate q-series.
    pub fn mul_q(&self, s: &Series<C>) -> Self {
        let dq = self.dq.min(s.order());
        let mut out = Self::zero(self.dx, dq);
        for i in 0..=self.dx {
            for (j, a) in self.row(i).iter().enumerate().take(dq + 1) {
                if a.is_zero() {
                    continue;
                }
                for (l, b) in s.coeffs().iter().enumerate().take(dq + 1 - j) {
                    if !b.is_zero() {
                        let k = out.idx(i, j + l);
                        out.data[k].mul_add(a, b);
                    }
                }
            }
        }
        out
    }

    /// `P(1, q)` as a q-series; exact only when `dx` exceeds the x-degree.
    pub fn at_x_one(&self) -> Series<C> {
        let mut s = Series::zero(crate::Var::Q, self.dq);
        for i in 0..=self.dx {
            for (j, c) in self.row(i).iter().enumerate() {
                s.add_term(j, c);
            }
        }
        s
    }

    /// Lexicographically first `(x-exp, q-exp)` where the two differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, usize, C, C)> {
        let (dx, dq) = (self.dx.min(other.dx), self.dq.min(other.dq));
        for i in 0..=dx {
            for j in 0..=dq {
                let (a, b) = (self.get(i, j), other.get(i, j));
                if a != b {
                    return Some((i, j, a.clone(), b.clone()));
                }
            }
        }
        None
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> BiPoly<D> {
        BiPoly { dx: self.dx, dq: self.dq, data: self.data.iter().map(f).collect() }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&mut C, &C)) -> Self {
        let mut out = self.truncate(rhs.dx, rhs.dq);
        for i in 0..=out.dx {
            for j in 0..=out.dq {
                let k = out.idx(i, j);
                f(&mut out.data[k], rhs.get(i, j));
            }
        }
        out
    }
}

impl<C: Coeff> Add for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        self.zip_with(rhs, |a, b| a.add_ref(b))
    }
}

impl<C: Coeff> Sub for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        self.zip_with(rhs, |a, b| a.sub_ref(b))
    }
}

impl<C: Coeff> Neg for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        self.map(|c| -c.clone())
    }
}

impl<C: Coeff> Mul for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let (dx, dq) = (self.dx.min(rhs.dx), self.dq.min(rhs.dq));
        let mut out = BiPoly::<C>::zero(dx, dq);
        for i1 in 0..=dx {
            for j1 in 0..=dq {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=dx - i1 {
                    for j2 in 0..=dq - j1 {
                        let b = rhs.get(i2, j2);
                        if !b.is_zero() {
                            let k = out.idx(i1 + i2, j1 + j2);
                            out.data[k].mul_add(a, b);
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::Var;
    use proptest::prelude::*;

    fn arb(dx: usize, dq: usize) -> impl Strategy<Value = BiPoly> {
        proptest::collection::vec((-9i64..9, 1i64..4), (dx + 1) * (dq + 1)).prop_map(move |v| {
            let mut p = BiPoly::zero(dx, dq);
            for (k, (a, b)) in v.into_iter().enumerate() {
                p.add_term(k / (dq + 1), k % (dq + 1), &frac(a, b));
            }
            p
        })
    }

    #[test]
    fn subst_qx_moves_q_degree() {
        let p = BiPoly::monomial(3, 1, int(2), 5, 6);
        let s = p.subst_qx();
        assert_eq!(s.get(3, 4), &int(2));
        assert_eq!(s.get(3, 1), &int(0));
        // dropped beyond dq
        assert!(BiPoly::monomial(4, 3, int(1), 5, 6).subst_qx().is_zero());
    }

    #[test]
    fn mul_q_matches_bivariate_product() {
        let p = BiPoly::monomial(1, 2, int(3), 4, 8);
        let s = Series::with_order(Var::Q, vec![int(1), int(-1)], 8);
        let as_bi = &BiPoly::one(4, 8) - &BiPoly::monomial(0, 1, int(1), 4, 8);
        assert_eq!(p.mul_q(&s), &p * &as_bi);
    }

    #[test]
    fn xq_factors_invert() {
        let mut p = BiPoly::monomial(1, 1, int(3), 6, 8);
        p.add_term(0, 2, &int(-1));
        let orig = p.clone();
        p.mul_one_minus_xq(2);
        assert_eq!(p.get(2, 3), &int(-3));
        p.div_one_minus_xq(2);
        assert_eq!(p, orig);
    }

    #[test]
    fn joint_truncation() {
        let a = BiPoly::<Rational>::one(5, 3);
        let b = BiPoly::<Rational>::one(2, 7);
        let c = &a * &b;
        assert_eq!((c.dx(), c.dq()), (2, 3));
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb(3, 4), g in arb(3, 4), h in arb(3, 4)) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn subst_is_multiplicative(f in arb(3, 5), g in arb(3, 5)) {
            prop_assert_eq!((&f * &g).subst_qx(), &f.subst_qx() * &g.subst_qx());
        }
    }
}
