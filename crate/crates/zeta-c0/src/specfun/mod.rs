//! Certified special functions: gamma, zeta, zeta', and the closed-form
//! bound functions used by the truncation analysis.

pub mod bernoulli;
mod gamma;
mod zeta;

pub use gamma::{gamma, gamma_tail_bound, stirling_rel_error};
pub use zeta::{
    plan_for, zeta, zeta_and_deriv, zeta_deriv, zeta_deriv_real, zeta_int, zeta_real,
    zeta_with_plan, EulerMaclaurinPlan,
};

use crate::ball::{ComplexBall, Precision, RealBall};
use crate::error::Result;

/// The functional-equation factor
/// `chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s)`,
/// so that `zeta(s) = chi(s) zeta(1 - s)`.
pub fn chi(s: &ComplexBall, p: Precision) -> Result<ComplexBall> {
    let pi = RealBall::pi(p);
    let two_pow = s.mul_real(&RealBall::from_i64(2, p).ln()?).exp()?;
    let pi_pow = s
        .add_real(&RealBall::one(p).neg())
        .mul_real(&pi.ln()?)
        .exp()?;
    let sine = s.mul_real(&pi).scale_2exp(-1).sin()?;
    let one_minus_s = ComplexBall::one(p).sub(s);
    let g = gamma(&one_minus_s, p)?;
    Ok(two_pow.mul(&pi_pow).mul(&sine).mul(&g))
}
