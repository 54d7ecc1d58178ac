//! Jacobi triple product with `q = Q^2`:
//! `sum_k (-1)^k Q^{k^2} x^k = (Q^2;Q^2)_inf (x^{-1} Q; Q^2)_inf (x Q; Q^2)_inf`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::report::CheckReport;

/// Laurent polynomial in `x` with Q-series coefficients; row `j + off` holds
/// `x^j`. Every term `x^j Q^d` that can appear has `|j| <= d`, so `off = order`
/// loses nothing.
struct Laurent {
    off: usize,
    order: usize,
    rows: Vec<Vec<BigInt>>,
}

impl Laurent {
    fn one(order: usize) -> Self {
        let mut rows = vec![vec![BigInt::zero(); order + 1]; 2 * order + 1];
        rows[order][0] = BigInt::from(1);
        Laurent { off: order, order, rows }
    }

    /// `*= (1 - x^s Q^e)` with `s = +-1` or `0`.
    fn mul_factor(&mut self, s: i64, e: usize) {
        let n = self.rows.len() as i64;
        let src = self.rows.clone();
        for (r, row) in src.iter().enumerate() {
            let t = r as i64 + s;
            if t < 0 || t >= n {
                continue;
            }
            for d in 0..=self.order.saturating_sub(e) {
                if !row[d].is_zero() {
                    self.rows[t as usize][d + e] -= &row[d];
                }
            }
        }
    }

    fn get(&self, j: i64, d: usize) -> &BigInt {
        &self.rows[(j + self.off as i64) as usize][d]
    }
}

pub fn verify_jacobi_triple(q_order: usize, x_range: usize) -> CheckReport {
    let order = q_order;
    let mut report = CheckReport::new("jacobi-triple-product")
        .param("q_order", q_order)
        .param("x_range", x_range)
        .bound(format!("q = Q^2; factors with Q-degree <= {order}; |j| <= {x_range}"));
    let mut prod = Laurent::one(order);
    for i in 1..=order {
        if 2 * i <= order {
            prod.mul_factor(0, 2 * i);
        }
        if 2 * i - 1 <= order {
            prod.mul_factor(-1, 2 * i - 1);
            prod.mul_factor(1, 2 * i - 1);
        }
    }
    let mut sum = Laurent::one(order);
    sum.rows[order][0] = BigInt::zero();
    let mut k: i64 = 0;
    while (k * k) as usize <= order {
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let sign = if kk % 2 == 0 { 1 } else { -1 };
            sum.rows[(kk + order as i64) as usize][(k * k) as usize] += sign;
        }
        k += 1;
    }
    let range = x_range.min(order) as i64;
    for j in -(x_range as i64)..=x_range as i64 {
        for d in 0..=order {
            let (l, r) = if j.abs() <= range {
                (sum.get(j, d).clone(), prod.get(j, d).clone())
            } else {
                // outside the window both sides vanish identically
                (BigInt::zero(), BigInt::zero())
            };
            report.record(l == r, "coefficient", format!("x^{j} Q^{d}"), r, l);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        for (o, r) in [(1, 1), (6, 3), (20, 10)] {
            let rep = verify_jacobi_triple(o, r);
            assert!(rep.passed(), "{:?}", rep.first_failure());
        }
    }

    #[test]
    fn low_coefficients() {
        let mut p = Laurent::one(4);
        p.mul_factor(-1, 1);
        p.mul_factor(1, 1);
        p.mul_factor(0, 2);
        assert_eq!(p.get(0, 0), &BigInt::from(1));
        assert_eq!(p.get(1, 1), &BigInt::from(-1));
    }
}
