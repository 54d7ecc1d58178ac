//! Exact and high-precision verification for the q-series `X_m^(a)(q)`,
//! a half-derivative of the Andrews–Gordon theta side.
//!
//! The crate is `no_std` (it needs `alloc`). Everything exact runs over
//! [`Rational`] and dense truncated series; root-of-unity and theta-function
//! numerics run over [`ApComplex`] at a caller-chosen binary precision.
//!
//! Module map:
//!
//! * [`rational`], [`bernoulli`], [`series`], [`bipoly`]: exact core rings.
//! * [`characters`]: the periodic characters `χ_12`, `χ_20^(a)`, `χ_{8m+4}^(a)`.
//! * [`lvalues`]: T-series and L-values at negative odd integers.
//! * [`qseries`]: q-Pochhammer/q-binomial primitives and every finite identity.
//! * [`halfderiv`]: t-expansion of `X_m^(a)(e^{-t})` against the L-value series.
//! * [`apcomplex`], [`unity`]: Kashaev invariants, asymptotics, modularity.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod apcomplex;
pub mod bernoulli;
pub mod bipoly;
pub mod characters;
mod error;
pub mod halfderiv;
pub mod lvalues;
pub mod qseries;
pub mod rational;
pub mod report;
pub mod series;
pub mod unity;

pub use apcomplex::{ApComplex, ApReal};
pub use bipoly::BiPoly;
pub use characters::PeriodicCharacter;
pub use error::{Error, Result};
pub use rational::Rational;
pub use report::{CheckReport, Mismatch};
pub use series::{Series, TSeries, Var};

/// Validates the `(m, a)` pair shared by every `X_m^(a)`/`H_m^(a)` operation.
pub fn check_ma(m: usize, a: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1"));
    }
    if a >= m {
        return Err(Error::OutOfRange { name: "a", value: a as i64, min: 0, max: m as i64 - 1 });
    }
    Ok(())
}
