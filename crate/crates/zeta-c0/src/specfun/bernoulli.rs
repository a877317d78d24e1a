//! Exact Bernoulli numbers.
//!
//! Generated as exact rationals through tangent numbers (an integer-only
//! boustrophedon recurrence), then rounded into balls on demand.  Keeping the
//! generation exact removes the coefficients from every remainder analysis.

use crate::ball::{Precision, RealBall};
use rug::{Integer, Rational};
use std::sync::Mutex;

static TANGENT: Mutex<Vec<Integer>> = Mutex::new(Vec::new());

/// Tangent numbers T_1..T_n (1, 2, 16, 272, ...).
fn tangent_numbers(n: usize) -> Vec<Integer> {
    let mut t: Vec<Integer> = Vec::with_capacity(n);
    t.push(Integer::from(1));
    for k in 2..=n {
        let prev = t[k - 2].clone();
        t.push(prev * Integer::from(k as u32 - 1));
    }
    for k in 2..=n {
        for j in k..=n {
            let a = t[j - 2].clone() * Integer::from((j - k) as u32);
            let b = t[j - 1].clone() * Integer::from((j - k + 2) as u32);
            t[j - 1] = a + b;
        }
    }
    t
}

/// Exact `B_{2k}` as a rational; `B_0 = 1`.
pub fn bernoulli_2k(k: usize) -> Rational {
    if k == 0 {
        return Rational::from(1);
    }
    {
        let cache = TANGENT.lock().unwrap();
        if cache.len() >= k {
            return tangent_to_bernoulli(k, &cache[k - 1]);
        }
    }
    let grow = (2 * k).max(64);
    let fresh = tangent_numbers(grow);
    let b = tangent_to_bernoulli(k, &fresh[k - 1]);
    let mut cache = TANGENT.lock().unwrap();
    if cache.len() < fresh.len() {
        *cache = fresh;
    }
    b
}

/// `B_{2k} = (-1)^{k-1} 2k T_k / (2^{2k} (2^{2k} - 1))`.
fn tangent_to_bernoulli(k: usize, t_k: &Integer) -> Rational {
    let mut num = Integer::from(2 * k as u32) * t_k;
    if k % 2 == 0 {
        num = -num;
    }
    let p = Integer::from(1) << (2 * k as u32);
    let den = p.clone() * (p - 1u32);
    Rational::from((num, den))
}

/// Round an exact rational into a ball at precision `p`.
pub fn ball_from_rational(q: &Rational, p: Precision) -> RealBall {
    use rug::float::Round;
    let lo = rug::Float::with_val_round(p.bits(), q, Round::Down).0;
    let hi = rug::Float::with_val_round(p.bits(), q, Round::Up).0;
    RealBall::from_endpoints(lo, hi, p)
}

/// `B_{2k} / (2k)!` as a ball (zeta correction coefficients).
pub fn bernoulli_over_factorial(k: usize, p: Precision) -> RealBall {
    let mut f = Integer::from(1);
    for i in 2..=(2 * k) {
        f *= i as u32;
    }
    let q = bernoulli_2k(k) / f;
    ball_from_rational(&q, p)
}

/// `B_{2k} / ((2k)(2k-1))` as a ball (log-gamma asymptotic coefficients).
pub fn bernoulli_over_k2k1(k: usize, p: Precision) -> RealBall {
    let q = bernoulli_2k(k) / Rational::from((2 * k as u32) * (2 * k as u32 - 1));
    ball_from_rational(&q, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bernoulli_values() {
        assert_eq!(bernoulli_2k(1), Rational::from((1, 6)));
        assert_eq!(bernoulli_2k(2), Rational::from((-1, 30)));
        assert_eq!(bernoulli_2k(3), Rational::from((1, 42)));
        assert_eq!(bernoulli_2k(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli_2k(5), Rational::from((5, 66)));
        assert_eq!(bernoulli_2k(6), Rational::from((-691, 2730)));
        assert_eq!(bernoulli_2k(7), Rational::from((7, 6)));
    }

    #[test]
    fn larger_bernoulli_consistency() {
        // von Staudt-Clausen: B_{2k} + sum over primes p with (p-1) | 2k of 1/p
        // is an integer.
        for k in [8usize, 15, 30, 64] {
            let mut s = bernoulli_2k(k);
            for p in 2..=(2 * k + 1) {
                let is_prime = (2..p).all(|d| p % d != 0);
                if is_prime && (2 * k) % (p - 1) == 0 {
                    s += Rational::from((1, p as u32));
                }
            }
            assert_eq!(s.denom(), &Integer::from(1), "k = {k}");
        }
    }
}
