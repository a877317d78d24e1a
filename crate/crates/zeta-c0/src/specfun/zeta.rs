//! Certified evaluation of the Riemann zeta function and its derivative.
//!
//! Euler–Maclaurin summation with an explicit remainder: for `Re s > -(2M+1)`
//!
//! ```text
//! zeta(s) = sum_{n<N} n^-s  +  N^(1-s)/(s-1)  +  N^-s/2
//!         + sum_{k=1}^{M} B_{2k}/(2k)! (s)_{2k-1} N^(-s-2k+1)  +  R
//! |R| <= |B_{2M+2}/(2M+2)!| |(s)_{2M+1}| N^(-Re s-2M-1) |s+2M+1|/(Re s+2M+1)
//! ```
//!
//! The remainder is an analytic function of `s` (the Euler–Maclaurin integral
//! form), so the derivative evaluator bounds its derivative with a Cauchy
//! estimate on a disc of radius 1/4 around `s`, and differentiates the main
//! terms exactly.

use super::bernoulli::{ball_from_rational, bernoulli_2k, bernoulli_over_factorial};
use crate::ball::{ComplexBall, Precision, RealBall};
use crate::error::{Error, Result};
use rug::Float;
use std::collections::HashMap;
use std::sync::Mutex;

/// Truncation parameters with the certified tail bound they imply.
#[derive(Clone, Debug)]
pub struct EulerMaclaurinPlan {
    /// Number of directly summed terms (the `N` above).
    pub cutoff: u32,
    /// Number of Bernoulli correction terms (the `M` above).
    pub bernoulli_order: u32,
    /// Upper bound for the omitted tail at the evaluation point.
    pub remainder: RealBall,
}

static LN_CACHE: Mutex<Vec<RealBall>> = Mutex::new(Vec::new());
static ZETA_INT_CACHE: Mutex<Option<HashMap<(i64, u32), RealBall>>> = Mutex::new(None);

/// Cached ln(n) at a fixed internal precision, widened on demand.
const LN_PREC: u32 = 768;

fn ln_of(n: u32, p: Precision) -> RealBall {
    if p.bits() <= LN_PREC {
        let mut cache = LN_CACHE.lock().unwrap();
        while cache.len() < n as usize {
            let k = cache.len() as i64 + 1;
            let b = RealBall::from_i64(k, Precision::new(LN_PREC).unwrap())
                .ln()
                .expect("positive integer");
            cache.push(b);
        }
        return cache[n as usize - 1].with_precision(p);
    }
    RealBall::from_i64(n as i64, p).ln().expect("positive integer")
}

struct EmOutput {
    value: ComplexBall,
    deriv: Option<ComplexBall>,
    remainder: Float,
    deriv_remainder: Option<Float>,
    m_used: u32,
}

/// One Euler–Maclaurin evaluation at fixed `n`, growing `m` until the
/// remainder drops below `target` (or `m_cap` is hit).
fn em_eval(
    s: &ComplexBall,
    n: u32,
    m_cap: u32,
    want_deriv: bool,
    p: Precision,
) -> Result<EmOutput> {
    let one = ComplexBall::one(p);
    let s_minus_1 = s.sub(&one);
    if s_minus_1.contains_zero() {
        return Err(Error::Pole("zeta evaluated at a ball containing s = 1".into()));
    }

    // direct sum and its derivative
    let mut direct = ComplexBall::zero(p);
    let mut direct_d = ComplexBall::zero(p);
    let neg_s = s.neg();
    for k in 1..n {
        let lnk = ln_of(k, p);
        let term = neg_s.mul_real(&lnk).exp()?;
        direct = direct.add(&term);
        if want_deriv {
            direct_d = direct_d.sub(&term.mul_real(&lnk));
        }
    }

    let ln_n = ln_of(n, p);
    // P = N^{-s}
    let pball = neg_s.mul_real(&ln_n).exp()?;
    // A = N^{1-s}/(s-1)
    let a = pball.mul_i64(n as i64).div(&s_minus_1)?;
    // B = N^{-s}/2
    let b = pball.scale_2exp(-1);

    let mut value = direct.add(&a).add(&b);
    let mut deriv = if want_deriv {
        // A' = -A (ln N + 1/(s-1)),  B' = -ln N * B
        let a_d = a.mul(&s_minus_1.recip()?.add_real(&ln_n)).neg();
        let b_d = b.mul_real(&ln_n).neg();
        Some(direct_d.add(&a_d).add(&b_d))
    } else {
        None
    };

    // absolute stopping target tied to the magnitude of the partial value
    let scale = {
        let m = value.abs().mag_upper();
        let one_f = Float::with_val(64, 1);
        let m = if m > one_f { m } else { one_f };
        m << -(p.bits() as i32 + 6)
    };

    let sigma_lo = s.re.lower();
    let quarter = Float::with_val(64, 0.25);

    // running state for the correction terms: (s)_{2k-1} and its s-derivative,
    // maintained by the product rule (no divisions, so integer s is fine)
    let mut poch = s.clone();
    let mut poch_d = ComplexBall::one(p);
    let mut scale_n = RealBall::from_i64(n as i64, p).recip()?; // N^{-2k+1}
    let n_sq_inv = scale_n.mul(&scale_n); // N^{-2}
    // magnitude uppers of (s)_{2k-1} and of prod (|s+j| + 1/4)
    let mut poch_mag = s.abs().mag_upper();
    let mut poch_mag_disc = {
        let m = s.abs().mag_upper();
        Float::with_val_round(64, &m + &quarter, rug::float::Round::Up).0
    };

    let mut remainder = Float::with_val(64, f64::INFINITY);
    let mut deriv_remainder = Float::with_val(64, f64::INFINITY);
    let mut m_used = m_cap;

    let mut k: u32 = 1;
    loop {
        let coeff = bernoulli_over_factorial(k as usize, p);
        let weight = pball.mul_real(&coeff).mul_real(&scale_n);
        value = value.add(&poch.mul(&weight));
        if let Some(d) = deriv.as_mut() {
            // d/ds [poch * N^{-s-2k+1}] = (poch' - poch ln N) N^{-s-2k+1}
            let dp = poch_d.sub(&poch.mul_real(&ln_n));
            *d = d.add(&dp.mul(&weight));
        }

        // advance the pochhammer to (s)_{2k+1}, which is exactly what the
        // remainder bound for "M = k" needs
        let j1 = s.add_real(&RealBall::from_i64(2 * k as i64 - 1, p));
        let j2 = s.add_real(&RealBall::from_i64(2 * k as i64, p));
        if want_deriv {
            poch_d = poch_d.mul(&j1).add(&poch);
        }
        poch = poch.mul(&j1);
        if want_deriv {
            poch_d = poch_d.mul(&j2).add(&poch);
        }
        poch = poch.mul(&j2);
        let m1 = j1.abs().mag_upper();
        let m2 = j2.abs().mag_upper();
        poch_mag = mul_up(&poch_mag, &mul_up(&m1, &m2));
        let m1d = add_up(&m1, &quarter);
        let m2d = add_up(&m2, &quarter);
        poch_mag_disc = mul_up(&poch_mag_disc, &mul_up(&m1d, &m2d));

        // remainder bound for M = k
        let c_next = bernoulli_over_factorial(k as usize + 1, Precision::new(64).unwrap())
            .mag_upper();
        let two_m1 = Float::with_val(64, 2 * k + 1);
        let s_shift_mag = {
            let sh = s.add_real(&RealBall::from_i64(2 * k as i64 + 1, p));
            sh.abs().mag_upper()
        };
        let denom = Float::with_val_round(64, &sigma_lo + &two_m1, rug::float::Round::Down).0;
        if denom > 0.5f32 {
            // N^{-(sigma + 2M + 1)}, rounded up
            let exp_pow = neg_pow_up(n, &add_down(&sigma_lo, &two_m1));
            let ratio = div_up(&s_shift_mag, &denom);
            remainder = mul_up(&mul_up(&c_next, &poch_mag), &mul_up(&exp_pow, &ratio));
            if want_deriv {
                // Cauchy estimate: 4 * sup over the radius-1/4 disc
                let sigma_disc = sub_down(&sigma_lo, &quarter);
                let denom_d = Float::with_val_round(
                    64,
                    &sigma_disc + &two_m1,
                    rug::float::Round::Down,
                )
                .0;
                if denom_d > 0.25f32 {
                    let exp_pow_d = neg_pow_up(n, &add_down(&sigma_disc, &two_m1));
                    let ratio_d = div_up(&add_up(&s_shift_mag, &quarter), &denom_d);
                    let sup =
                        mul_up(&mul_up(&c_next, &poch_mag_disc), &mul_up(&exp_pow_d, &ratio_d));
                    deriv_remainder = mul_up(&Float::with_val(64, 4), &sup);
                }
            }
            let done = remainder <= scale && (!want_deriv || deriv_remainder <= scale);
            if done {
                m_used = k;
                break;
            }
        }

        k += 1;
        if k > m_cap {
            break;
        }
        scale_n = scale_n.mul(&n_sq_inv);
    }

    let value = widen_complex(value, &remainder);
    let deriv = deriv.map(|d| widen_complex(d, &deriv_remainder));
    Ok(EmOutput {
        value,
        deriv,
        remainder,
        deriv_remainder: want_deriv.then_some(deriv_remainder),
        m_used,
    })
}

fn widen_complex(z: ComplexBall, r: &Float) -> ComplexBall {
    ComplexBall::new(z.re.widen_by(r), z.im.widen_by(r))
}

fn starting_cutoff(s: &ComplexBall, _p: Precision) -> u32 {
    let im = s.im.mag_upper().to_f64().abs();
    let re = s.re.mag_upper().to_f64().abs();
    let base = 1.4 * (im + re) + 24.0;
    base.ceil() as u32
}

fn em_adaptive(s: &ComplexBall, want_deriv: bool, p: Precision) -> Result<EmOutput> {
    let mut n = starting_cutoff(s, p);
    for _ in 0..4 {
        let out = em_eval(s, n, 360, want_deriv, p)?;
        let scale = {
            let m = out.value.abs().mag_upper();
            let one_f = Float::with_val(64, 1);
            let m = if m > one_f { m } else { one_f };
            m << -(p.bits() as i32 + 4)
        };
        let ok = out.remainder <= scale
            && out.deriv_remainder.as_ref().map(|r| *r <= scale).unwrap_or(true);
        if ok {
            return Ok(out);
        }
        n *= 2;
    }
    Err(Error::Precision {
        bits: p.bits(),
        what: format!("euler-maclaurin remainder did not reach target for s = {s:?}"),
    })
}

/// Enclosure of `zeta(s)`; the remainder bound is folded into the radius.
pub fn zeta(s: &ComplexBall, p: Precision) -> Result<ComplexBall> {
    Ok(em_adaptive(s, false, p)?.value)
}

/// Enclosure of `zeta'(s)` by term-differentiated Euler–Maclaurin.
pub fn zeta_deriv(s: &ComplexBall, p: Precision) -> Result<ComplexBall> {
    Ok(em_adaptive(s, true, p)?.deriv.expect("deriv requested"))
}

/// Both value and derivative from one summation pass.
pub fn zeta_and_deriv(s: &ComplexBall, p: Precision) -> Result<(ComplexBall, ComplexBall)> {
    let out = em_adaptive(s, true, p)?;
    Ok((out.value, out.deriv.expect("deriv requested")))
}

/// The adaptive plan that `zeta` would use at `s`, with its certified tail.
pub fn plan_for(s: &ComplexBall, p: Precision) -> Result<EulerMaclaurinPlan> {
    let mut n = starting_cutoff(s, p);
    for _ in 0..4 {
        let out = em_eval(s, n, 360, false, p)?;
        if out.remainder.is_finite() && out.m_used < 360 {
            return Ok(EulerMaclaurinPlan {
                cutoff: n,
                bernoulli_order: out.m_used,
                remainder: RealBall::from_parts(Float::with_val(p.bits(), &out.remainder), Float::new(64)),
            });
        }
        n *= 2;
    }
    Err(Error::Precision { bits: p.bits(), what: "no viable plan".into() })
}

/// Evaluate with a fixed plan (used by the plan-nesting tests).
pub fn zeta_with_plan(s: &ComplexBall, plan: &EulerMaclaurinPlan, p: Precision) -> Result<ComplexBall> {
    let out = em_eval(s, plan.cutoff, plan.bernoulli_order, false, p)?;
    Ok(out.value)
}

/// `zeta(k)` at an integer `k != 1`, cached per precision.
pub fn zeta_int(k: i64, p: Precision) -> Result<RealBall> {
    {
        let mut guard = ZETA_INT_CACHE.lock().unwrap();
        let cache = guard.get_or_insert_with(HashMap::new);
        if let Some(v) = cache.get(&(k, p.bits())) {
            return Ok(v.clone());
        }
    }
    let v = if k >= 40 {
        // direct Dirichlet sum; tail in [0, N^{1-k}/(k-1)]
        let bits = p.bits() as i64;
        let log2n = (bits + 8) / (k - 1) + 1;
        let n = 1u32 << log2n.clamp(1, 16);
        let mut sum = RealBall::one(p);
        for j in 2..=n {
            sum = sum.add(&RealBall::from_i64(j as i64, p).pow_int(-k)?);
        }
        let tail_hi = RealBall::from_i64(n as i64, p)
            .pow_int(1 - k)?
            .div(&RealBall::from_i64(k - 1, p))?;
        let tail = RealBall::from_endpoints(Float::new(p.bits()), tail_hi.upper(), p);
        sum.add(&tail)
    } else {
        let s = ComplexBall::from_real(RealBall::from_i64(k, p));
        zeta(&s, p)?.re
    };
    let mut guard = ZETA_INT_CACHE.lock().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    cache.insert((k, p.bits()), v.clone());
    Ok(v)
}

/// `zeta(s)` for real `s` (not equal to 1).
pub fn zeta_real(s: &RealBall, p: Precision) -> Result<RealBall> {
    Ok(zeta(&ComplexBall::from_real(s.clone()), p)?.re)
}

/// `zeta'(s)` for real `s`.
pub fn zeta_deriv_real(s: &RealBall, p: Precision) -> Result<RealBall> {
    Ok(zeta_deriv(&ComplexBall::from_real(s.clone()), p)?.re)
}

/// Exact rational `B_{2k}` rounded to a ball (re-exported for neighbours).
pub fn bernoulli_ball(k: usize, p: Precision) -> RealBall {
    ball_from_rational(&bernoulli_2k(k), p)
}

// -- directed 64-bit float helpers -------------------------------------------

fn add_up(a: &Float, b: &Float) -> Float {
    Float::with_val_round(64, a + b, rug::float::Round::Up).0
}

fn add_down(a: &Float, b: &Float) -> Float {
    Float::with_val_round(64, a + b, rug::float::Round::Down).0
}

fn sub_down(a: &Float, b: &Float) -> Float {
    Float::with_val_round(64, a - b, rug::float::Round::Down).0
}

fn mul_up(a: &Float, b: &Float) -> Float {
    Float::with_val_round(64, a * b, rug::float::Round::Up).0
}

fn div_up(a: &Float, b: &Float) -> Float {
    Float::with_val_round(64, a / b, rug::float::Round::Up).0
}

/// Upper bound of `n^{-t}` for `n >= 1`.
fn neg_pow_up(n: u32, t: &Float) -> Float {
    let p64 = Precision::new(64).unwrap();
    let nb = RealBall::from_i64(n as i64, p64);
    let tb = RealBall::from_parts(Float::with_val(64, t), Float::new(64)).neg();
    match nb.pow(&tb) {
        Ok(b) => b.upper(),
        Err(_) => Float::with_val(64, f64::INFINITY),
    }
}
