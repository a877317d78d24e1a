//! Midpoint–radius (ball) arithmetic over MPFR.
//!
//! A [`RealBall`] is a pair `mid ± rad`: an arbitrary-precision midpoint and a
//! small upward-rounded radius.  The containment contract is the whole point:
//! for every operation, the exact image of any points inside the operand balls
//! lies inside the result ball.  Midpoints round to nearest at the working
//! precision; every inexact rounding inflates the radius by one ulp.
//!
//! The radius is a 64-bit MPFR float rounded up, which keeps the full MPFR
//! exponent range.  Quantities like `exp(-2981)` therefore stay representable
//! as radii instead of underflowing to zero.

mod complex;
mod real;
#[cfg(test)]
mod tests;

pub use complex::{x_pow_it, ComplexBall};
pub use real::RealBall;

use rug::float::Round;
use rug::Float;

/// Working precision (mantissa bits) for ball midpoints.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_BITS: u32 = 64;
    pub const DEFAULT_BITS: u32 = 384;

    pub fn new(bits: u32) -> crate::error::Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(crate::error::Error::Config(format!(
                "precision must be at least {} bits, got {bits}",
                Self::MIN_BITS
            )));
        }
        Ok(Precision(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Doubled precision, used by refinement and containment tests.
    pub fn doubled(self) -> Self {
        Precision(self.0 * 2)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(Self::DEFAULT_BITS)
    }
}

/// Mantissa bits used for radii.
pub(crate) const RAD_PREC: u32 = 64;

/// Fallback radius exponent when a midpoint rounds to zero inexactly.
/// Far above MPFR's minimum exponent, far below anything the pipeline meets.
const TINY_EXP: i32 = -(1 << 28);

/// Upward-rounded radius computation.
macro_rules! rup {
    ($e:expr) => {
        rug::Float::with_val_round(crate::ball::RAD_PREC, $e, rug::float::Round::Up).0
    };
}
pub(crate) use rup;

/// Downward-rounded helper (for lower bounds of denominators etc.).
macro_rules! rdown {
    ($e:expr) => {
        rug::Float::with_val_round(crate::ball::RAD_PREC, $e, rug::float::Round::Down).0
    };
}
pub(crate) use rdown;

/// An upper bound for one unit in the last place of `mid` at precision `prec`.
pub(crate) fn ulp_up(mid: &Float, prec: u32) -> Float {
    let mut u = Float::with_val(RAD_PREC, 1);
    if !mid.is_finite() {
        u.assign_infinity();
        return u;
    }
    match mid.get_exp() {
        Some(e) => u << (e - prec as i32 + 1),
        // Zero midpoint: an inexact zero can only arise from underflow,
        // which our magnitudes never approach; cover it anyway.
        None => u << TINY_EXP,
    }
}

pub(crate) fn rad_zero() -> Float {
    Float::new(RAD_PREC)
}

pub(crate) fn rad_inf() -> Float {
    let mut f = Float::new(RAD_PREC);
    f.assign_infinity();
    f
}

trait AssignInfinity {
    fn assign_infinity(&mut self);
}

impl AssignInfinity for Float {
    fn assign_infinity(&mut self) {
        use rug::Assign;
        self.assign(rug::float::Special::Infinity);
    }
}

/// Round direction helpers used when splitting a ball into endpoints.
pub(crate) fn endpoint_lo(mid: &Float, rad: &Float, prec: u32) -> Float {
    Float::with_val_round(prec, mid - rad, Round::Down).0
}

pub(crate) fn endpoint_hi(mid: &Float, rad: &Float, prec: u32) -> Float {
    Float::with_val_round(prec, mid + rad, Round::Up).0
}

/// Upper bound of `|a|` at radius precision.
pub(crate) fn abs_up(a: &Float) -> Float {
    let mut r = rup!(a.abs_ref());
    if r.is_sign_negative() {
        r = rad_zero();
    }
    r
}

/// Lower bound of `|a|` at radius precision.
pub(crate) fn abs_down(a: &Float) -> Float {
    rdown!(a.abs_ref())
}

/// Upper bound of `|a - b|` at radius precision.
pub(crate) fn abs_diff_up(a: &Float, b: &Float) -> Float {
    let hi = rup!(a - b);
    let lo = rdown!(a - b);
    let ha = abs_up(&hi);
    let la = abs_up(&lo);
    if ha > la {
        ha
    } else {
        la
    }
}

/// Lower bound of `|a - b|` at radius precision.
pub(crate) fn abs_diff_down(a: &Float, b: &Float) -> Float {
    let hi = rup!(a - b);
    let lo = rdown!(a - b);
    if hi.is_sign_positive() != lo.is_sign_positive() || hi.is_zero() || lo.is_zero() {
        return rad_zero();
    }
    let ha = abs_down(&hi);
    let la = abs_down(&lo);
    if ha < la {
        ha
    } else {
        la
    }
}
