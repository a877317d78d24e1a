//! Certified recomputation of the threshold constant `c0` for continuous
//! prime systems whose integer counting function is `N(x) = c(x-1) + 1`.
//!
//! Everything numeric in this crate is self-validating: values are
//! midpoint–radius balls guaranteed to contain the exact result.  On top of
//! that substrate sit certified evaluations of the Riemann zeta function and
//! the gamma function, a re-certified table of the first 29 nontrivial zeta
//! zeros, three independent evaluators of the entire function
//! `f(z) = sum_n mu(n)/n (e^{z/n} - 1)`, sign certificates for `f(-x)` over
//! ranges of `x`, and the optimization pipeline that turns all of it into
//! two-sided enclosures of `c0`.

pub mod ball;
pub mod error;
pub mod specfun;

pub use ball::{ComplexBall, Precision, RealBall};
pub use error::{Error, Result};
