//! Certified gamma function on the right half-plane.
//!
//! The argument is shifted by the recurrence `Gamma(z) = Gamma(z+n) / (z)_n`
//! until its real part is large, then the Stirling series for `log Gamma` is
//! summed with an explicit remainder: after the `B_{2K}` term,
//!
//! ```text
//! |R_K(w)| <= |B_{2K+2}| / ((2K+1)(2K+2) |w|^{2K+1}) * sec(arg(w)/2)^{2K+2}
//! ```
//!
//! valid for `|arg w| < pi` (we only use `Re w > 0`).

use super::bernoulli::bernoulli_over_k2k1;
use crate::ball::{ComplexBall, Precision, RealBall};
use crate::error::{Error, Result};
use rug::float::Round;
use rug::Float;

/// Enclosure of `Gamma(z)`; the argument ball must avoid the poles
/// `0, -1, -2, ...`.
pub fn gamma(z: &ComplexBall, p: Precision) -> Result<ComplexBall> {
    let base = (p.bits() as f64) / 8.0 + 10.0;
    for attempt in 0..3 {
        let r0 = base * (1.0 + attempt as f64);
        match gamma_with_shift(z, r0, p) {
            Ok(g) => return Ok(g),
            Err(Error::Precision { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Precision {
        bits: p.bits(),
        what: format!("stirling series did not converge for z = {z:?}"),
    })
}

fn gamma_with_shift(z: &ComplexBall, r0: f64, p: Precision) -> Result<ComplexBall> {
    let re_lo = z.re.lower().to_f64();
    if !re_lo.is_finite() {
        return Err(Error::Domain("gamma of an unbounded ball".into()));
    }
    let shift = if re_lo >= r0 { 0 } else { (r0 - re_lo).ceil() as i64 };

    // rising product (z)(z+1)...(z+shift-1)
    let mut product = ComplexBall::one(p);
    for j in 0..shift {
        let factor = z.add_real(&RealBall::from_i64(j, p));
        if !factor.norm2().is_strictly_pos() {
            return Err(Error::Domain(format!(
                "gamma argument ball touches the pole at -{j}"
            )));
        }
        product = product.mul(&factor);
    }
    let w = z.add_real(&RealBall::from_i64(shift, p));

    let lg = log_gamma_stirling(&w, p)?;
    let g = lg.exp()?;
    g.div(&product)
}

/// Stirling series for `log Gamma(w)`, `Re w` large and positive.
fn log_gamma_stirling(w: &ComplexBall, p: Precision) -> Result<ComplexBall> {
    let ln_w = w.ln()?;
    let half = RealBall::one(p).scale_2exp(-1);
    let pi = RealBall::pi(p);
    // (w - 1/2) ln w - w + ln(2 pi)/2
    let mut main = w
        .add_real(&half.neg())
        .mul(&ln_w)
        .sub(w)
        .add_real(&pi.scale_2exp(1).ln()?.scale_2exp(-1));

    let target = {
        let m = main.abs().mag_upper();
        let one = Float::with_val(64, 1);
        let m = if m > one { m } else { one };
        m << -(p.bits() as i32 + 4)
    };

    // sec(arg(w)/2) upper bound
    let theta_up = w.arg()?.mag_upper();
    let half_theta = RealBall::from_parts(Float::with_val(p.bits(), &theta_up), Float::new(64))
        .scale_2exp(-1);
    let sec_up = {
        let c = half_theta.cos();
        let lo = c.lower();
        if !lo.is_sign_positive() || lo.is_zero() {
            return Err(Error::Domain("argument too close to the imaginary axis".into()));
        }
        Float::with_val_round(64, lo.recip_ref(), Round::Up).0
    };

    let w_abs = w.abs();
    let w_abs_lo = w_abs.mag_lower();
    let k_cap = (2.5 * w_abs_lo.to_f64()).max(8.0) as u32;

    let winv = w.recip()?;
    let w2inv = winv.mul(&winv);
    let mut t = winv.clone(); // w^{-(2k-1)}
    let mut remainder = Float::with_val(64, f64::INFINITY);
    let mut sec_pow = mul_up(&sec_up, &mul_up(&sec_up, &mul_up(&sec_up, &sec_up))); // sec^4 for K=1
    let mut ok = false;
    for k in 1..=k_cap {
        let c = bernoulli_over_k2k1(k as usize, p);
        main = main.add(&t.mul_real(&c));

        // remainder bound for K = k
        let c_next = bernoulli_over_k2k1(k as usize + 1, Precision::new(64).unwrap()).mag_upper();
        let w_pow = pow_neg_odd_up(&w_abs_lo, 2 * k + 1);
        remainder = mul_up(&mul_up(&c_next, &w_pow), &sec_pow);
        if remainder <= target {
            ok = true;
            break;
        }
        sec_pow = mul_up(&sec_pow, &mul_up(&sec_up, &sec_up));
        t = t.mul(&w2inv);
    }
    if !ok {
        return Err(Error::Precision { bits: p.bits(), what: "stirling tail too large".into() });
    }
    Ok(ComplexBall::new(
        main.re.widen_by(&remainder),
        main.im.widen_by(&remainder),
    ))
}

/// Upper bound of `x^{-m}` for `x > 0` (odd m), 64-bit directed.
fn pow_neg_odd_up(x_lo: &Float, m: u32) -> Float {
    if !x_lo.is_sign_positive() || x_lo.is_zero() {
        return Float::with_val(64, f64::INFINITY);
    }
    let inv = Float::with_val_round(64, x_lo.recip_ref(), Round::Up).0;
    let mut acc = Float::with_val(64, 1);
    for _ in 0..m {
        acc = mul_up(&acc, &inv);
    }
    acc
}

fn mul_up(a: &Float, b: &Float) -> Float {
    Float::with_val_round(64, a * b, Round::Up).0
}

/// The one-term Stirling relative error bound `(1 + sqrt 2) / (2 pi^2 |z|)`,
/// valid for `|arg z| <= pi/2` (certified from the enclosure).
pub fn stirling_rel_error(z: &ComplexBall) -> Result<RealBall> {
    if z.re.lower().is_sign_negative() {
        return Err(Error::Domain(
            "|arg z| <= pi/2 cannot be certified (Re z extends below 0)".into(),
        ));
    }
    let p = z.prec();
    let sqrt2 = RealBall::from_i64(2, p).sqrt()?;
    let num = RealBall::one(p).add(&sqrt2);
    let pi = RealBall::pi(p);
    let den = pi.square().scale_2exp(1).mul(&z.abs());
    num.div(&den)
}

/// Closed form of `int_T^inf (t+1) e^{-pi t/2} dt`:
/// `(2T/pi + (4+2pi)/pi^2) e^{-pi T/2}`.
pub fn gamma_tail_bound(t: &RealBall) -> Result<RealBall> {
    let p = t.prec();
    let pi = RealBall::pi(p);
    let a = t.scale_2exp(1).div(&pi)?;
    let b = RealBall::from_i64(4, p)
        .add(&pi.scale_2exp(1))
        .div(&pi.square())?;
    let decay = t.mul(&pi).scale_2exp(-1).neg().exp()?;
    Ok(a.add(&b).mul(&decay))
}
