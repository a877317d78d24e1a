use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p64() -> Precision {
    Precision::new(64).unwrap()
}

fn p384() -> Precision {
    Precision::default()
}

#[test]
fn interval_addition_example() {
    let p = p384();
    let a = RealBall::from_parts(Float::with_val(384, 1.0), Float::with_val(RAD_PREC, 0.1));
    let b = RealBall::from_parts(Float::with_val(384, 2.0), Float::with_val(RAD_PREC, 0.2));
    let s = a.add(&b);
    assert!(s.contains_float(&Float::with_val(64, 2.7)));
    assert!(s.contains_float(&Float::with_val(64, 3.3)));
    let cap = Float::with_val(64, 0.300001);
    assert!(*s.rad() <= cap);
    let _ = p;
}

#[test]
fn exp_of_exact_zero_is_tight() {
    let z = RealBall::zero(p384());
    let e = z.exp().unwrap();
    assert!(e.contains_float(&Float::with_val(64, 1)));
    // one ulp at 384 bits
    let cap = Float::with_val(64, Float::i_exp(1, -380));
    assert!(*e.rad() <= cap, "rad = {:?}", e.rad());
}

#[test]
fn one_third_refines_with_precision() {
    let coarse = RealBall::one(p64()).div(&RealBall::from_i64(3, p64())).unwrap();
    let fine = RealBall::one(p384()).div(&RealBall::from_i64(3, p384())).unwrap();
    // compare against 1/3 at very high precision
    let third = Float::with_val(1024, 1) / 3u32;
    assert!(coarse.contains_float(&third));
    assert!(fine.contains_float(&third));
    assert!(fine.rad() < coarse.rad());
}

#[test]
fn x_pow_it_identities() {
    let p = p384();
    let one = RealBall::one(p);
    let gamma = RealBall::parse("14.134725141734693790", p).unwrap();
    let r = x_pow_it(&one, &gamma).unwrap();
    assert!(r.re.contains_float(&Float::with_val(64, 1)));
    assert!(r.im.contains_float(&Float::with_val(64, 0)));

    let x = RealBall::parse("123.25", p).unwrap();
    let r = x_pow_it(&x, &RealBall::zero(p)).unwrap();
    assert!(r.re.contains_float(&Float::with_val(64, 1)));

    // x = e, t = pi: encloses cos(pi) + i sin(pi) = -1
    let e = RealBall::one(p).exp().unwrap();
    let r = x_pow_it(&e, &RealBall::pi(p)).unwrap();
    assert!(r.re.contains_float(&Float::with_val(64, -1)));
    assert!(r.im.contains_float(&Float::with_val(64, 0)));
    // derived oracle at doubled precision
    let pd = p.doubled();
    let e2 = RealBall::one(pd).exp().unwrap();
    let r2 = x_pow_it(&e2, &RealBall::pi(pd)).unwrap();
    assert!(r.re.overlaps(&r2.re.with_precision(p)));
    // modulus encloses 1
    assert!(r.abs().contains_float(&Float::with_val(64, 1)));
}

#[test]
fn x_pow_it_rejects_zero_base() {
    let p = p64();
    let x = RealBall::from_parts(Float::with_val(64, 0.5), Float::with_val(RAD_PREC, 0.5));
    assert!(x_pow_it(&x, &RealBall::one(p)).is_err());
}

#[test]
fn division_by_straddling_ball_fails() {
    let a = RealBall::one(p64());
    let b = RealBall::from_parts(Float::with_val(64, 0.1), Float::with_val(RAD_PREC, 0.2));
    assert!(matches!(a.div(&b), Err(crate::error::Error::Domain(_))));
}

#[test]
fn log_touching_zero_fails() {
    let b = RealBall::from_parts(Float::with_val(64, 0.1), Float::with_val(RAD_PREC, 0.1));
    assert!(b.ln().is_err());
    assert!(b.sqrt().is_err());
}

#[test]
fn atan2_quadrants() {
    let p = p384();
    let one = RealBall::one(p);
    let m_one = one.neg();
    let pi = RealBall::pi(p);
    // second quadrant: atan2(1, -1) = 3 pi / 4
    let a = RealBall::atan2(&one, &m_one).unwrap();
    let expected = pi.mul_i64(3).scale_2exp(-2);
    assert!(a.overlaps(&expected));
    // third quadrant: atan2(-1, -1) = -3 pi / 4
    let a = RealBall::atan2(&m_one, &m_one).unwrap();
    assert!(a.overlaps(&expected.neg()));
    // cut: x < 0, y straddles 0
    let y = RealBall::from_parts(Float::new(384), Float::with_val(RAD_PREC, 0.25));
    assert!(RealBall::atan2(&y, &m_one).is_err());
}

#[test]
fn square_straddling_zero_clamps_at_zero() {
    let b = RealBall::from_parts(Float::with_val(64, 0.01), Float::with_val(RAD_PREC, 0.5));
    let s = b.square();
    assert!(!s.lower().is_sign_negative() || s.lower().is_zero());
    assert!(s.contains_float(&Float::with_val(64, 0.26 * 0.26)));
}

fn random_ball(rng: &mut ChaCha8Rng, positive: bool, away_from_zero: bool) -> RealBall {
    let p = p64();
    let mut m = rng.gen_range(-4.0f64..4.0);
    let e = rng.gen_range(-8i32..8);
    m *= (2.0f64).powi(e);
    if positive {
        m = m.abs() + 0.25;
    }
    let rad = if rng.gen_bool(0.3) {
        0.0
    } else {
        m.abs() * rng.gen_range(0.0f64..1e-6) + 1e-18
    };
    let b = RealBall::from_parts(Float::with_val(64, m), Float::with_val(RAD_PREC, rad));
    if away_from_zero && b.contains_zero() {
        RealBall::from_parts(
            Float::with_val(64, m.abs() + 1.0),
            Float::with_val(RAD_PREC, rad),
        )
    } else {
        b
    }
}

/// Containment: the exact image of the operand midpoints (computed at doubled
/// precision) lies inside the lower-precision result ball.
#[test]
fn containment_random_ops() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    const KINDS: usize = 13;
    const TOTAL: usize = 1_000_000;
    let per_kind = TOTAL / KINDS;
    let hp = Precision::new(256).unwrap();
    for kind in 0..KINDS {
        for _ in 0..per_kind {
            let (a, b) = match kind {
                3 => (random_ball(&mut rng, false, true), random_ball(&mut rng, false, true)),
                4 | 5 => (random_ball(&mut rng, true, true), random_ball(&mut rng, true, true)),
                _ => (random_ball(&mut rng, false, false), random_ball(&mut rng, false, false)),
            };
            let am = RealBall::from_parts(Float::with_val(256, a.mid()), Float::new(RAD_PREC));
            let bm = RealBall::from_parts(Float::with_val(256, b.mid()), Float::new(RAD_PREC));
            let (got, exact) = match kind {
                0 => (a.add(&b), am.add(&bm)),
                1 => (a.sub(&b), am.sub(&bm)),
                2 => (a.mul(&b), am.mul(&bm)),
                3 => (a.div(&b).unwrap(), am.div(&bm).unwrap()),
                4 => (a.sqrt().unwrap(), am.sqrt().unwrap()),
                5 => (a.ln().unwrap(), am.ln().unwrap()),
                6 => {
                    // clamp exponent so exp stays finite
                    let a = RealBall::from_parts(
                        Float::with_val(64, a.mid().to_f64().clamp(-500.0, 500.0)),
                        a.rad().clone(),
                    );
                    let am2 = RealBall::from_parts(Float::with_val(256, a.mid()), Float::new(RAD_PREC));
                    (a.exp().unwrap(), am2.exp().unwrap())
                }
                7 => (a.sin(), am.sin()),
                8 => (a.cos(), am.cos()),
                9 => (a.abs(), am.abs()),
                10 => (a.pow_int(3).unwrap(), am.pow_int(3).unwrap()),
                11 => (a.pow_int(2).unwrap(), am.pow_int(2).unwrap()),
                _ => (a.atan(), am.atan()),
            };
            assert!(
                got.contains_float(exact.mid()),
                "kind {kind}: {:?} op {:?} -> {:?} missing {:?}",
                a,
                b,
                got,
                exact.mid()
            );
        }
    }
    let _ = hp;
}

/// Monotone radius: growing an operand radius cannot shrink the result
/// radius (beyond rounding).
#[test]
fn radius_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20_000 {
        let a = random_ball(&mut rng, false, false);
        let b = random_ball(&mut rng, false, false);
        let wide = a.widen_by(&Float::with_val(RAD_PREC, 0.125));
        let r1 = a.add(&b);
        let r2 = wide.add(&b);
        assert!(r2.rad() >= r1.rad());
        let m1 = a.mul(&b);
        let m2 = wide.mul(&b);
        assert!(m2.rad() >= m1.rad());
    }
}

/// Identical inputs and precision produce bit-identical outputs.
#[test]
fn determinism() {
    let p = p384();
    let a = RealBall::parse("1.7320508075688772", p).unwrap();
    let b = RealBall::parse("-0.33445566778899", p).unwrap();
    let r1 = a.mul(&b).exp().unwrap().sin();
    let r2 = a.mul(&b).exp().unwrap().sin();
    assert_eq!(r1.mid().to_string_radix(16, None), r2.mid().to_string_radix(16, None));
    assert_eq!(r1.rad().to_string_radix(16, None), r2.rad().to_string_radix(16, None));
}

#[test]
fn widening_precision_keeps_containment() {
    let p = p64();
    let third = RealBall::one(p).div(&RealBall::from_i64(3, p)).unwrap();
    let up = third.with_precision(p384());
    let exact = Float::with_val(2048, 1) / 3u32;
    assert!(up.contains_float(&exact));
}

trait IExp {
    fn i_exp(m: i32, e: i32) -> Float;
}

impl IExp for Float {
    fn i_exp(m: i32, e: i32) -> Float {
        Float::with_val(64, m) << e
    }
}
