//! Complex balls as pairs of real balls.
//!
//! Containment holds component-wise; derived quantities (modulus, argument)
//! enclose the exact values of every point in the rectangle.

use super::{Precision, RealBall};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct ComplexBall {
    pub re: RealBall,
    pub im: RealBall,
}

impl fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?} i)", self.re, self.im)
    }
}

impl fmt::Display for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {} i)", self.re, self.im)
    }
}

impl ComplexBall {
    pub fn new(re: RealBall, im: RealBall) -> Self {
        ComplexBall { re, im }
    }

    pub fn from_real(re: RealBall) -> Self {
        let p = re.prec();
        ComplexBall { re, im: RealBall::zero(p) }
    }

    pub fn zero(p: Precision) -> Self {
        ComplexBall { re: RealBall::zero(p), im: RealBall::zero(p) }
    }

    pub fn one(p: Precision) -> Self {
        ComplexBall { re: RealBall::one(p), im: RealBall::zero(p) }
    }

    pub fn i(p: Precision) -> Self {
        ComplexBall { re: RealBall::zero(p), im: RealBall::one(p) }
    }

    pub fn prec(&self) -> Precision {
        Precision::new(self.re.prec().bits().max(self.im.prec().bits())).unwrap()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.re.overlaps(&other.re) && self.im.overlaps(&other.im)
    }

    pub fn conj(&self) -> Self {
        ComplexBall { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn neg(&self) -> Self {
        ComplexBall { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBall { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBall { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn add_real(&self, o: &RealBall) -> Self {
        ComplexBall { re: self.re.add(o), im: self.im.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexBall {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn mul_real(&self, o: &RealBall) -> Self {
        ComplexBall { re: self.re.mul(o), im: self.im.mul(o) }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        ComplexBall { re: self.re.mul_i64(k), im: self.im.mul_i64(k) }
    }

    pub fn scale_2exp(&self, k: i32) -> Self {
        ComplexBall { re: self.re.scale_2exp(k), im: self.im.scale_2exp(k) }
    }

    /// Squared modulus; lower bound clamps at zero when 0 is inside.
    pub fn norm2(&self) -> RealBall {
        self.re.square().add(&self.im.square())
    }

    /// Modulus enclosure.
    pub fn abs(&self) -> RealBall {
        self.norm2().sqrt_allow_zero(true).expect("norm2 is nonnegative")
    }

    /// Principal argument; errors when the rectangle touches the cut.
    pub fn arg(&self) -> Result<RealBall> {
        RealBall::atan2(&self.im, &self.re)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        let n2 = o.norm2();
        if !n2.is_strictly_pos() {
            return Err(Error::Domain("complex division by a ball containing zero".into()));
        }
        let num = self.mul(&o.conj());
        Ok(ComplexBall {
            re: num.re.div(&n2)?,
            im: num.im.div(&n2)?,
        })
    }

    pub fn recip(&self) -> Result<Self> {
        ComplexBall::one(self.prec()).div(self)
    }

    pub fn exp(&self) -> Result<Self> {
        let ea = self.re.exp()?;
        Ok(ComplexBall {
            re: ea.mul(&self.im.cos()),
            im: ea.mul(&self.im.sin()),
        })
    }

    /// Principal logarithm; the rectangle must avoid the branch cut.
    pub fn ln(&self) -> Result<Self> {
        let n2 = self.norm2();
        if !n2.is_strictly_pos() {
            return Err(Error::Domain("complex log of a ball containing zero".into()));
        }
        Ok(ComplexBall {
            re: n2.ln()?.scale_2exp(-1),
            im: self.arg()?,
        })
    }

    pub fn sqrt(&self) -> Result<Self> {
        let half = self.ln()?.scale_2exp(-1);
        half.exp()
    }

    /// `self^w` via the principal branch.
    pub fn pow(&self, w: &Self) -> Result<Self> {
        self.ln()?.mul(w).exp()
    }

    pub fn pow_real(&self, e: &RealBall) -> Result<Self> {
        self.ln()?.mul_real(e).exp()
    }

    /// Complex sine: `sin(a + bi) = sin a cosh b + i cos a sinh b`.
    pub fn sin(&self) -> Result<Self> {
        Ok(ComplexBall {
            re: self.re.sin().mul(&self.im.cosh()?),
            im: self.re.cos().mul(&self.im.sinh()?),
        })
    }

    pub fn with_precision(&self, p: Precision) -> Self {
        ComplexBall {
            re: self.re.with_precision(p),
            im: self.im.with_precision(p),
        }
    }
}

/// Enclosure of `x^{it} = cos(t ln x) + i sin(t ln x)` for `x > 0`.
///
/// The modulus of the result always contains 1.
pub fn x_pow_it(x: &RealBall, t: &RealBall) -> Result<ComplexBall> {
    if !x.is_strictly_pos() {
        return Err(Error::Domain("oscillatory power requires x > 0".into()));
    }
    let u = x.ln()?.mul(t);
    Ok(ComplexBall { re: u.cos(), im: u.sin() })
}
