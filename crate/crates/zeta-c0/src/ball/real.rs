//! Real balls: `mid ± rad` with the containment contract.

use super::{
    abs_diff_down, abs_diff_up, abs_down, abs_up, endpoint_hi, endpoint_lo, rad_inf, rad_zero,
    rdown, rup, ulp_up, Precision, RAD_PREC,
};
use crate::error::{Error, Result};
use rug::float::{Constant, Round};
use rug::ops::NegAssign;
use rug::Float;
use std::cmp::Ordering;
use std::fmt;

/// A real number enclosure `[mid - rad, mid + rad]`.
///
/// All operations are pure; results are deterministic for identical inputs
/// and precision.  Binary operations work at the larger operand precision.
#[derive(Clone, PartialEq)]
pub struct RealBall {
    mid: Float,
    rad: Float,
}

impl fmt::Debug for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e} +/- {:e}]", self.mid, self.rad)
    }
}

impl fmt::Display for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12e} +/- {:.3e}]", self.mid, self.rad)
    }
}

impl RealBall {
    // -- constructors -------------------------------------------------------

    pub fn from_parts(mid: Float, rad: Float) -> Self {
        debug_assert!(rad.is_sign_positive() || rad.is_zero());
        let rad = Float::with_val_round(RAD_PREC, &rad, Round::Up).0;
        RealBall { mid, rad }
    }

    pub fn zero(p: Precision) -> Self {
        RealBall {
            mid: Float::new(p.bits()),
            rad: rad_zero(),
        }
    }

    pub fn one(p: Precision) -> Self {
        Self::from_i64(1, p)
    }

    pub fn from_i64(v: i64, p: Precision) -> Self {
        RealBall {
            mid: Float::with_val(p.bits(), v),
            rad: rad_zero(),
        }
    }

    /// Exact embedding of an `f64` (every finite `f64` is representable).
    pub fn from_f64(v: f64, p: Precision) -> Self {
        assert!(v.is_finite());
        RealBall {
            mid: Float::with_val(p.bits(), v),
            rad: rad_zero(),
        }
    }

    /// Parse a decimal literal; the radius records the parse rounding.
    pub fn parse(s: &str, p: Precision) -> Result<Self> {
        let incomplete = Float::parse(s)
            .map_err(|e| Error::Parse { line: 0, msg: format!("bad decimal {s:?}: {e}") })?;
        let (mid, ord) = Float::with_val_round(p.bits(), incomplete, Round::Nearest);
        let rad = if ord == Ordering::Equal {
            rad_zero()
        } else {
            ulp_up(&mid, p.bits())
        };
        Ok(RealBall { mid, rad })
    }

    pub fn pi(p: Precision) -> Self {
        let lo = Float::with_val_round(p.bits(), Constant::Pi, Round::Down).0;
        let hi = Float::with_val_round(p.bits(), Constant::Pi, Round::Up).0;
        Self::from_endpoints(lo, hi, p)
    }

    /// Ball spanning `[lo, hi]` (plus outward rounding).
    pub fn from_endpoints(lo: Float, hi: Float, p: Precision) -> Self {
        debug_assert!(lo <= hi);
        let mut mid = Float::with_val_round(p.bits(), &lo + &hi, Round::Nearest).0;
        mid >>= 1u32;
        let r1 = rup!(&hi - &mid);
        let r2 = rup!(&mid - &lo);
        let rad = if r1 > r2 { r1 } else { r2 };
        let rad = if rad.is_sign_negative() { rad_zero() } else { rad };
        RealBall { mid, rad }
    }

    fn poison(p: Precision) -> Self {
        RealBall {
            mid: Float::new(p.bits()),
            rad: rad_inf(),
        }
    }

    // -- accessors ----------------------------------------------------------

    pub fn mid(&self) -> &Float {
        &self.mid
    }

    pub fn rad(&self) -> &Float {
        &self.rad
    }

    pub fn prec(&self) -> Precision {
        Precision(self.mid.prec())
    }

    pub fn is_finite(&self) -> bool {
        self.mid.is_finite() && self.rad.is_finite()
    }

    /// Exact point ball (zero radius)?
    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Lower endpoint, rounded down (at midpoint precision).
    pub fn lower(&self) -> Float {
        endpoint_lo(&self.mid, &self.rad, self.mid.prec())
    }

    /// Upper endpoint, rounded up.
    pub fn upper(&self) -> Float {
        endpoint_hi(&self.mid, &self.rad, self.mid.prec())
    }

    /// Upper bound of `|x|` over the ball.
    pub fn mag_upper(&self) -> Float {
        let am = abs_up(&self.mid);
        rup!(&am + &self.rad)
    }

    /// Lower bound of `|x|` over the ball (zero if the ball straddles 0).
    pub fn mag_lower(&self) -> Float {
        let am = abs_down(&self.mid);
        let m = rdown!(&am - &self.rad);
        if m.is_sign_negative() {
            rad_zero()
        } else {
            m
        }
    }

    pub fn contains_zero(&self) -> bool {
        !(self.is_strictly_pos() || self.is_strictly_neg())
    }

    pub fn is_strictly_pos(&self) -> bool {
        self.is_finite() && self.mid > self.rad
    }

    pub fn is_strictly_neg(&self) -> bool {
        let mut neg = self.mid.clone();
        neg.neg_assign();
        self.is_finite() && neg > self.rad
    }

    /// Does this ball contain the given exact float?
    pub fn contains_float(&self, v: &Float) -> bool {
        abs_diff_up(&self.mid, v) <= self.rad
    }

    /// Does this ball contain `other` entirely?
    pub fn contains_ball(&self, other: &Self) -> bool {
        let d = abs_diff_up(&self.mid, &other.mid);
        let need = rup!(&d + &other.rad);
        need <= self.rad
    }

    /// Do the two balls intersect?  Conservative in the permissive direction
    /// only by radius rounding; disjoint balls are never reported overlapping
    /// beyond that rounding.
    pub fn overlaps(&self, other: &Self) -> bool {
        let d = abs_diff_down(&self.mid, &other.mid);
        let sum = rup!(&self.rad + &other.rad);
        d <= sum
    }

    /// Inflate the radius by a nonnegative amount.
    pub fn widen_by(&self, extra: &Float) -> Self {
        debug_assert!(!extra.is_sign_negative());
        RealBall {
            mid: self.mid.clone(),
            rad: rup!(&self.rad + extra),
        }
    }

    /// Re-round to precision `p`; containment is preserved.
    pub fn with_precision(&self, p: Precision) -> Self {
        let (mid, ord) = Float::with_val_round(p.bits(), &self.mid, Round::Nearest);
        let mut rad = self.rad.clone();
        if ord != Ordering::Equal {
            rad = rup!(&rad + ulp_up(&mid, p.bits()));
        }
        RealBall { mid, rad }
    }

    /// Smallest ball containing both operands.
    pub fn union(&self, other: &Self) -> Self {
        let p = self.join_prec(other);
        let lo_a = self.lower();
        let lo_b = other.lower();
        let hi_a = self.upper();
        let hi_b = other.upper();
        let lo = if lo_a < lo_b { lo_a } else { lo_b };
        let hi = if hi_a > hi_b { hi_a } else { hi_b };
        Self::from_endpoints(lo, hi, p)
    }

    fn join_prec(&self, other: &Self) -> Precision {
        Precision(self.mid.prec().max(other.mid.prec()))
    }

    // -- arithmetic ----------------------------------------------------------

    pub fn add(&self, other: &Self) -> Self {
        let p = self.join_prec(other);
        let (mid, ord) = Float::with_val_round(p.bits(), &self.mid + &other.mid, Round::Nearest);
        if !mid.is_finite() {
            return Self::poison(p);
        }
        let mut rad = rup!(&self.rad + &other.rad);
        if ord != Ordering::Equal {
            rad = rup!(&rad + ulp_up(&mid, p.bits()));
        }
        RealBall { mid, rad }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut mid = self.mid.clone();
        mid.neg_assign();
        RealBall { mid, rad: self.rad.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.join_prec(other);
        let (mid, ord) = Float::with_val_round(p.bits(), &self.mid * &other.mid, Round::Nearest);
        if !mid.is_finite() {
            return Self::poison(p);
        }
        let am = abs_up(&self.mid);
        let bm = abs_up(&other.mid);
        let mut rad = rup!(&am * &other.rad);
        rad = rup!(&rad + rup!(&bm * &self.rad));
        rad = rup!(&rad + rup!(&self.rad * &other.rad));
        if ord != Ordering::Equal {
            rad = rup!(&rad + ulp_up(&mid, p.bits()));
        }
        RealBall { mid, rad }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self.mul(&RealBall::from_i64(k, self.prec()))
    }

    /// Exact scaling by a power of two.
    pub fn scale_2exp(&self, k: i32) -> Self {
        RealBall {
            mid: self.mid.clone() << k,
            rad: self.rad.clone() << k,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let p = self.join_prec(other);
        if other.contains_zero() || !other.is_finite() {
            return Err(Error::Domain("division by a ball containing zero".into()));
        }
        let (mid, ord) = Float::with_val_round(p.bits(), &self.mid / &other.mid, Round::Nearest);
        if !mid.is_finite() {
            return Err(Error::Overflow("division overflow".into()));
        }
        // |a/b - a'/b'| <= (|a| rb + |b| ra) / (|b| (|b| - rb))
        let am = abs_up(&self.mid);
        let bm_up = abs_up(&other.mid);
        let bm_dn = abs_down(&other.mid);
        let denom_inner = rdown!(&bm_dn - &other.rad);
        debug_assert!(denom_inner.is_sign_positive());
        let denom = rdown!(&bm_dn * &denom_inner);
        let num = rup!(rup!(&am * &other.rad) + rup!(&bm_up * &self.rad));
        let mut rad = rup!(&num / &denom);
        if ord != Ordering::Equal {
            rad = rup!(&rad + ulp_up(&mid, p.bits()));
        }
        Ok(RealBall { mid, rad })
    }

    pub fn recip(&self) -> Result<Self> {
        RealBall::one(self.prec()).div(self)
    }

    pub fn abs(&self) -> Self {
        if self.is_strictly_pos() || self.rad.is_zero() && !self.mid.is_sign_negative() {
            self.clone()
        } else if self.is_strictly_neg() {
            self.neg()
        } else {
            let hi = {
                let a = rup!(self.upper().abs());
                let b = rup!(self.lower().abs());
                if a > b { a } else { b }
            };
            let p = self.prec();
            Self::from_endpoints(Float::new(p.bits()), Float::with_val(p.bits(), &hi), p)
        }
    }

    /// `[m ± r]^2`, sharp around zero (result lower bound clamps at 0).
    pub fn square(&self) -> Self {
        let p = self.prec();
        if self.contains_zero() {
            let m = self.mag_upper();
            let hi = Float::with_val_round(p.bits(), m.square_ref(), Round::Up).0;
            Self::from_endpoints(Float::new(p.bits()), hi, p)
        } else {
            self.mul(self)
        }
    }

    pub fn pow_int(&self, k: i64) -> Result<Self> {
        let p = self.prec();
        if k == 0 {
            return Ok(Self::one(p));
        }
        if k < 0 {
            return self.pow_int(-k)?.recip();
        }
        if k % 2 == 0 && self.contains_zero() {
            // even power of a straddling ball: [0, max|端|^k]
            let m = self.mag_upper();
            let hi = Float::with_val_round(p.bits(), (&m).pow_i64(k, Round::Up), Round::Up).0;
            return Ok(Self::from_endpoints(Float::new(p.bits()), hi, p));
        }
        // monotone on the sign of the ball (odd power, or even power away from 0)
        let lo = self.lower();
        let hi = self.upper();
        let mut cands = [
            lo.clone().pow_i64(k, Round::Down),
            lo.pow_i64(k, Round::Up),
            hi.clone().pow_i64(k, Round::Down),
            hi.pow_i64(k, Round::Up),
        ];
        cands.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let [a, _, _, b] = cands;
        Ok(Self::from_endpoints(a, b, p))
    }

    // -- elementary functions -------------------------------------------------

    pub fn sqrt(&self) -> Result<Self> {
        self.sqrt_allow_zero(false)
    }

    /// Square root allowing the lower endpoint to touch zero
    /// (used for moduli of complex balls).
    pub(crate) fn sqrt_allow_zero(&self, allow_zero: bool) -> Result<Self> {
        let p = self.prec();
        let mut lo = self.lower();
        let hi = self.upper();
        if allow_zero && lo.is_sign_negative() && !self.is_strictly_neg() {
            lo = Float::new(p.bits());
        }
        if lo.is_sign_negative() || (!allow_zero && lo.is_zero()) {
            return Err(Error::Domain("sqrt of a ball touching the negative axis".into()));
        }
        let lo = Float::with_val_round(p.bits(), lo.sqrt_ref(), Round::Down).0;
        let hi = Float::with_val_round(p.bits(), hi.sqrt_ref(), Round::Up).0;
        Ok(Self::from_endpoints(lo, hi, p))
    }

    pub fn exp(&self) -> Result<Self> {
        let p = self.prec();
        let lo = Float::with_val_round(p.bits(), self.lower().exp_ref(), Round::Down).0;
        let hi = Float::with_val_round(p.bits(), self.upper().exp_ref(), Round::Up).0;
        if !hi.is_finite() {
            return Err(Error::Overflow("exp overflow".into()));
        }
        Ok(Self::from_endpoints(lo, hi, p))
    }

    pub fn ln(&self) -> Result<Self> {
        let p = self.prec();
        let lo = self.lower();
        if !lo.is_sign_positive() || lo.is_zero() {
            return Err(Error::Domain("log of a ball touching zero".into()));
        }
        let lo = Float::with_val_round(p.bits(), lo.ln_ref(), Round::Down).0;
        let hi = Float::with_val_round(p.bits(), self.upper().ln_ref(), Round::Up).0;
        Ok(Self::from_endpoints(lo, hi, p))
    }

    /// `self^e` for positive `self`, via `exp(e ln self)`.
    pub fn pow(&self, e: &Self) -> Result<Self> {
        self.ln()?.mul(e).exp()
    }

    pub fn sin(&self) -> Self {
        self.lipschitz1(|f, r| f.sin_round(r))
    }

    pub fn cos(&self) -> Self {
        self.lipschitz1(|f, r| f.cos_round(r))
    }

    /// Propagate through a 1-Lipschitz function evaluated at the midpoint.
    fn lipschitz1(&self, f: impl Fn(&mut Float, Round) -> Ordering) -> Self {
        let p = self.prec();
        let mut mid = Float::with_val(p.bits(), &self.mid);
        let ord = f(&mut mid, Round::Nearest);
        let mut rad = self.rad.clone();
        if ord != Ordering::Equal {
            rad = rup!(&rad + ulp_up(&mid, p.bits()));
        }
        RealBall { mid, rad }
    }

    pub fn atan(&self) -> Self {
        let p = self.prec();
        let lo = Float::with_val_round(p.bits(), self.lower().atan_ref(), Round::Down).0;
        let hi = Float::with_val_round(p.bits(), self.upper().atan_ref(), Round::Up).0;
        Self::from_endpoints(lo, hi, p)
    }

    pub fn cosh(&self) -> Result<Self> {
        // (e^x + e^-x) / 2
        let e = self.exp()?;
        let einv = self.neg().exp()?;
        Ok(e.add(&einv).scale_2exp(-1))
    }

    pub fn sinh(&self) -> Result<Self> {
        let e = self.exp()?;
        let einv = self.neg().exp()?;
        Ok(e.sub(&einv).scale_2exp(-1))
    }

    /// Two-argument arctangent for balls avoiding the branch cut.
    pub fn atan2(y: &Self, x: &Self) -> Result<Self> {
        let p = Precision(y.mid.prec().max(x.mid.prec()));
        if x.is_strictly_pos() {
            return Ok(y.div(x)?.atan());
        }
        let half_pi = RealBall::pi(p).scale_2exp(-1);
        if y.is_strictly_pos() {
            // pi/2 - atan(x/y)
            return Ok(half_pi.sub(&x.div(y)?.atan()));
        }
        if y.is_strictly_neg() {
            // -pi/2 - atan(x/y)
            return Ok(half_pi.neg().sub(&x.div(y)?.atan()));
        }
        Err(Error::Domain(
            "argument enclosure touches the branch cut of atan2".into(),
        ))
    }
}

/// `Float::pow` with explicit rounding, consuming self.
trait PowI64 {
    fn pow_i64(self, k: i64, r: Round) -> Float;
}

impl PowI64 for Float {
    fn pow_i64(mut self, k: i64, r: Round) -> Float {
        use rug::ops::PowAssignRound;
        let _ = self.pow_assign_round(k, r);
        self
    }
}

impl PowI64 for &Float {
    fn pow_i64(self, k: i64, r: Round) -> Float {
        self.clone().pow_i64(k, r)
    }
}
