//! Periodic mean-zero characters `chi_{8m+4}^(a)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{check_ma, Error, Result};

/// A periodic function stored as its period table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicCharacter {
    modulus: usize,
    values: Vec<i8>,
}

impl PeriodicCharacter {
    /// Builds a character from a period table, rejecting nonzero mean.
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("empty period"));
        }
        let sum: i64 = values.iter().map(|&v| v as i64).sum();
        if sum != 0 {
            return Err(Error::NonzeroMean { sum });
        }
        Ok(PeriodicCharacter { modulus: values.len(), values })
    }

    /// Like [`Self::new`] but keeps tables with nonzero mean. Only useful for
    /// exercising the error paths of consumers.
    pub fn new_unchecked(values: Vec<i8>) -> Self {
        PeriodicCharacter { modulus: values.len(), values }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn mean_sum(&self) -> i64 {
        self.values.iter().map(|&v| v as i64).sum()
    }

    pub fn eval(&self, n: i64) -> i64 {
        self.values[n.rem_euclid(self.modulus as i64) as usize] as i64
    }

    /// Nonzero residues with their signs, ascending.
    pub fn support(&self) -> Vec<(usize, i8)> {
        self.values.iter().enumerate().filter(|(_, &v)| v != 0).map(|(r, &v)| (r, v)).collect()
    }
}

pub fn chi_eval(chi: &PeriodicCharacter, n: i64) -> i64 {
    chi.eval(n)
}

/// `chi_{8m+4}^(a)`: +1 at `2m-2a-1`, `6m+2a+5`; -1 at `2m+2a+3`, `6m-2a+1`.
pub fn chi_general(m: usize, a: usize) -> Result<PeriodicCharacter> {
    check_ma(m, a)?;
    let p = 8 * m + 4;
    let mut values = vec![0i8; p];
    values[2 * m - 2 * a - 1] = 1;
    values[6 * m + 2 * a + 5] = 1;
    values[2 * m + 2 * a + 3] = -1;
    values[6 * m - 2 * a + 1] = -1;
    PeriodicCharacter::new(values)
}

pub fn chi_12() -> PeriodicCharacter {
    chi_general(1, 0).expect("m = 1, a = 0 is valid")
}

pub fn chi_20(a: usize) -> Result<PeriodicCharacter> {
    chi_general(2, a)
}

/// The offset `c = 2m - 2a - 1` whose square normalizes every exponent.
pub fn offset(m: usize, a: usize) -> i64 {
    2 * m as i64 - 2 * a as i64 - 1
}

/// `K = 8(2m+1)`.
pub fn level(m: usize) -> i64 {
    8 * (2 * m as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signed(chi: &PeriodicCharacter) -> (Vec<usize>, Vec<usize>) {
        let s = chi.support();
        (
            s.iter().filter(|x| x.1 > 0).map(|x| x.0).collect(),
            s.iter().filter(|x| x.1 < 0).map(|x| x.0).collect(),
        )
    }

    #[test]
    fn tables() {
        let c = chi_general(2, 0).unwrap();
        assert_eq!(c.modulus(), 20);
        assert_eq!(signed(&c), (vec![3, 17], vec![7, 13]));
        assert_eq!(signed(&chi_general(2, 1).unwrap()), (vec![1, 19], vec![9, 11]));
        let c = chi_12();
        assert_eq!(c.modulus(), 12);
        assert_eq!(signed(&c), (vec![1, 11], vec![5, 7]));
    }

    #[test]
    fn eval_examples() {
        let c = chi_12();
        assert_eq!(chi_eval(&c, 25), 1);
        assert_eq!(chi_eval(&c, 0), 0);
        assert_eq!(chi_eval(&chi_20(0).unwrap(), -3), 1);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(chi_general(2, 2), Err(Error::OutOfRange { .. })));
        assert!(chi_general(0, 0).is_err());
        assert_eq!(PeriodicCharacter::new(vec![1, 0, 0]), Err(Error::NonzeroMean { sum: 1 }));
    }

    #[test]
    fn structural_properties() {
        for m in 1..=12 {
            for a in 0..m {
                let chi = chi_general(m, a).unwrap();
                let p = chi.modulus() as i64;
                assert_eq!(chi.mean_sum(), 0);
                let c = offset(m, a);
                for n in 0..p {
                    assert_eq!(chi.eval(n + 4 * m as i64 + 2), -chi.eval(n));
                    if chi.eval(n) != 0 {
                        assert_eq!(n % 2, 1);
                        assert_eq!((n * n - c * c) % level(m), 0);
                    }
                }
            }
        }
    }
}
