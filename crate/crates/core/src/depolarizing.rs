//! Closed-form exponents for the d-ary depolarizing channel.
//!
//! Everything here works with base-q logarithms and the classical base-q
//! rate r of the additive code; [`quantum_exponent_depolarizing`] converts to
//! the quantum rate R = 2r − 1 and to base-d exponents.

use crate::error::{Error, Result};
use crate::exponent::scalar::bisect;

fn log_q(x: f64, q: u32) -> f64 {
    x.ln() / (q as f64).ln()
}

fn check_prime(d: u32) -> Result<()> {
    crate::channel::Alphabet::new(d).map(|_| ())
}

/// q-ary entropy function `−x·log_q(x/(q−1)) − (1−x)·log_q(1−x)` on `[0, (q−1)/q]`.
pub fn h_q(x: f64, q: u32) -> Result<f64> {
    let top = (q - 1) as f64 / q as f64;
    if !(0.0..=top + 1e-15).contains(&x) {
        return Err(Error::OutOfRange {
            name: "x",
            value: x,
        });
    }
    Ok(h_q_unchecked(x, q))
}

fn h_q_unchecked(x: f64, q: u32) -> f64 {
    let mut h = 0.0;
    if x > 0.0 {
        h -= x * log_q(x / (q - 1) as f64, q);
    }
    if x < 1.0 {
        h -= (1.0 - x) * log_q(1.0 - x, q);
    }
    h
}

/// Two-point divergence `x·log_q(x/y) + (1−x)·log_q((1−x)/(1−y))`.
pub fn binary_divergence(x: f64, y: f64, q: u32) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfRange {
            name: "x",
            value: x,
        });
    }
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::OutOfRange {
            name: "y",
            value: y,
        });
    }
    let term = |a: f64, b: f64| -> Result<f64> {
        if a == 0.0 {
            Ok(0.0)
        } else if b == 0.0 {
            Err(Error::OutOfRange {
                name: "y",
                value: y,
            })
        } else {
            Ok(a * log_q(a / b, q))
        }
    };
    Ok((term(x, y)? + term(1.0 - x, 1.0 - y)?).max(0.0))
}

/// δ_GV(r) = h_q^{-1}(1 − r) on `[0, (q−1)/q]`, by bisection to 1e-12.
pub fn delta_gv(r: f64, q: u32) -> f64 {
    let target = 1.0 - r.clamp(0.0, 1.0);
    let top = (q - 1) as f64 / q as f64;
    if target <= 0.0 {
        return 0.0;
    }
    if target >= 1.0 {
        return top;
    }
    bisect(|x| h_q_unchecked(x, q) - target, 0.0, top, 1e-13)
}

/// Derived scalars of the depolarizing closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepolParams {
    pub d: u32,
    pub q: u32,
    pub p: f64,
    pub rho0: f64,
    pub gamma: f64,
    pub r_x: f64,
    pub r_crit: f64,
}

impl DepolParams {
    pub fn new(d: u32, p: f64) -> Result<Self> {
        check_prime(d)?;
        let q = d * d;
        let qf = q as f64;
        if !(p > 0.0 && p < (qf - 1.0) / qf) {
            return Err(Error::OutOfRange {
                name: "p",
                value: p,
            });
        }
        let a = (p * (qf - 1.0)).sqrt();
        let rho0 = a / (a + (1.0 - p).sqrt());
        let gamma = p * (qf - 2.0) / (qf - 1.0) + 2.0 * (p * (1.0 - p) / (qf - 1.0)).sqrt();
        let r_x = 1.0 - h_q_unchecked(rho0 * (2.0 - qf * rho0 / (qf - 1.0)), q);
        let r_crit = 1.0 - h_q_unchecked(rho0, q);
        assert!(
            r_x <= r_crit + 1e-12,
            "knot order violated: r_x = {r_x}, r_crit = {r_crit}"
        );
        Ok(Self {
            d,
            q,
            p,
            rho0,
            gamma,
            r_x,
            r_crit,
        })
    }

    /// 1 − h_q(p), where the exponent reaches zero.
    pub fn capacity_rate(&self) -> f64 {
        1.0 - h_q_unchecked(self.p, self.q)
    }

    /// E_ℓ(r, p) in base q.
    pub fn e_ell(&self, r: f64) -> f64 {
        let q = self.q;
        if r >= self.capacity_rate() {
            0.0
        } else if r >= self.r_crit {
            divergence_unchecked(delta_gv(r, q), self.p, q)
        } else if r >= self.r_x {
            divergence_unchecked(self.rho0, self.p, q) + self.r_crit - r
        } else {
            -delta_gv(r, q) * log_q(self.gamma, q)
        }
    }
}

fn divergence_unchecked(x: f64, y: f64, q: u32) -> f64 {
    binary_divergence(x, y, q).expect("p lies strictly inside (0, 1)")
}

/// Piecewise base-q exponent E_ℓ(r, p) of the depolarizing channel.
pub fn e_ell(r: f64, p: f64, d: u32) -> Result<f64> {
    Ok(DepolParams::new(d, p)?.e_ell(r))
}

/// Quantum-rate exponent `2·E_ℓ((1 + R)/2, p)`, in base d.
pub fn quantum_exponent_depolarizing(rate: f64, p: f64, d: u32) -> Result<f64> {
    Ok(2.0 * e_ell((1.0 + rate) / 2.0, p, d)?)
}

/// Largest p for which the quantum crossover rate 2r_x − 1 is positive.
pub fn improvement_threshold(d: u32) -> Result<f64> {
    check_prime(d)?;
    let f = |p: f64| 2.0 * DepolParams::new(d, p).expect("p in range").r_x - 1.0;
    let (lo, hi) = (1e-9, 0.5);
    if f(lo) <= 0.0 || f(hi) >= 0.0 {
        return Err(Error::NoSignChange("2·r_x(p) − 1"));
    }
    Ok(bisect(f, lo, hi, 1e-10))
}
