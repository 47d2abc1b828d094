//! Expurgation exponent in its three forms, the crossover rate R_x and the
//! zero-error threshold R_∞.
//!
//! The ρ-form maximizes `−ρ·(1 + R) + E_ex(ρ)`: E_ex carries the
//! `1/q` normalization of the uniform input, so it must be paired with the
//! classical base-d rate `1 + R` of the underlying additive code.

use super::scalar::{bisect, golden_max};
use super::simplex::gibbs_by_descent;
use super::{entropy_of, is_degenerate, ExponentResult, ProbDist, Witness};
use crate::channel::{is_indivisible, w_weight_table, ChannelDist, WWeightTable};
use crate::error::{Error, Result};

/// Upper bracket limit for the ρ search.
const RHO_CAP: f64 = 1e6;

/// `E_ex(ρ, W) = −ρ·log_d[(1/q)·Σ_x d^{−|x|_W/ρ}]` for ρ ≥ 1.
pub fn e_ex(rho: f64, channel: &ChannelDist) -> Result<f64> {
    if rho.is_nan() || rho < 1.0 {
        return Err(Error::OutOfRange {
            name: "rho",
            value: rho,
        });
    }
    Ok(e_ex_table(rho, &w_weight_table(channel)))
}

fn e_ex_table(rho: f64, table: &WWeightTable) -> f64 {
    let a = table.alphabet();
    let d = a.d() as f64;
    let s: f64 = table
        .weights()
        .iter()
        .filter(|w| w.is_finite())
        .map(|w| d.powf(-w / rho))
        .sum();
    -rho * a.log(s / a.q() as f64)
}

/// ∂E_ex/∂ρ = 2 − log_d S − (1/ρ)·Σ π(x)|x|_W, with S = Σ d^{−|x|_W/ρ}
/// and π the normalized summands.
pub fn e_ex_derivative(rho: f64, channel: &ChannelDist) -> f64 {
    e_ex_derivative_table(rho, &w_weight_table(channel))
}

fn e_ex_derivative_table(rho: f64, table: &WWeightTable) -> f64 {
    let a = table.alphabet();
    let d = a.d() as f64;
    let finite: Vec<f64> = table
        .weights()
        .iter()
        .copied()
        .filter(|w| w.is_finite())
        .collect();
    let terms: Vec<f64> = finite.iter().map(|w| d.powf(-w / rho)).collect();
    let s: f64 = terms.iter().sum();
    let mean: f64 = terms.iter().zip(&finite).map(|(t, w)| t * w).sum::<f64>() / s;
    2.0 - a.log(s) - mean / rho
}

/// Threshold below which the expurgation exponent is infinite:
/// `max(0, 1 − log_d |X_fin|)` with X_fin the finite-weight letters.
pub fn r_infinity(channel: &ChannelDist) -> f64 {
    r_infinity_table(&w_weight_table(channel))
}

fn r_infinity_table(table: &WWeightTable) -> f64 {
    let a = table.alphabet();
    (1.0 - a.log(table.finite_support().len() as f64)).max(0.0)
}

/// `1 − log_d |X_fin|` without the clamp; the slope of the ρ-objective at
/// infinity is this value minus R.
fn zero_error_slope(table: &WWeightTable) -> f64 {
    1.0 - table.alphabet().log(table.finite_support().len() as f64)
}

/// Quantum rate below which the expurgation bound beats random coding,
/// `∂E_ex/∂ρ|_{ρ=1} − 1`. Zero for divisible channels.
pub fn crossover_rate_rx(channel: &ChannelDist) -> f64 {
    if !is_indivisible(channel, 1e-12) {
        return 0.0;
    }
    e_ex_derivative(1.0, channel) - 1.0
}

/// E_x(R) = sup_{ρ≥1} [−ρ(1 + R) + E_ex(ρ)].
///
/// The objective is concave in ρ. The upper bracket doubles until the slope
/// turns nonpositive; the result is +∞ when the slope at infinity,
/// `1 − log_d|X_fin| − R`, is positive.
pub fn expurgation_exponent_sup(rate: f64, channel: &ChannelDist) -> ExponentResult {
    if is_degenerate(channel) {
        return ExponentResult::new(rate, 0.0, Witness::Rho(1.0));
    }
    let table = w_weight_table(channel);
    if rate < zero_error_slope(&table) {
        return ExponentResult::new(rate, f64::INFINITY, Witness::None);
    }
    let classical = 1.0 + rate;
    let objective = |rho: f64| e_ex_table(rho, &table) - rho * classical;
    let slope = |rho: f64| e_ex_derivative_table(rho, &table) - classical;
    if slope(1.0) <= 0.0 {
        return ExponentResult::new(rate, objective(1.0), Witness::Rho(1.0));
    }
    let mut hi = 2.0;
    while slope(hi) > 0.0 && hi < RHO_CAP {
        hi *= 2.0;
    }
    let hi = hi.min(RHO_CAP);
    let lo = (hi / 2.0).max(1.0);
    let (rho, value) = golden_max(objective, lo, hi, 1e-10 * hi);
    ExponentResult::new(rate, value, Witness::Rho(rho))
}

/// E_x(R) = min over P with H_d(P) ≥ 1 − R of `Σ P(x)|x|_W − (R + H_d(P) − 1)`.
///
/// Restricted to finite-weight letters (+∞ if none is feasible). The
/// unconstrained minimizer comes from mirror descent on `Σ P w − H(P)`; when
/// it violates the entropy constraint the multiplier is found by bisection,
/// each inner problem again solved by mirror descent.
pub fn expurgation_exponent_min_p(rate: f64, channel: &ChannelDist) -> ExponentResult {
    let alphabet = channel.alphabet();
    if is_degenerate(channel) {
        return ExponentResult::new(rate, 0.0, Witness::Dist(ProbDist::uniform(alphabet)));
    }
    let table = w_weight_table(channel);
    if rate < zero_error_slope(&table) - 1e-12 {
        return ExponentResult::new(rate, f64::INFINITY, Witness::None);
    }
    let support = table.finite_support();
    let w: Vec<f64> = support.iter().map(|&x| table.weight(x)).collect();
    let base = alphabet.d() as f64;
    let ln_d = base.ln();
    let target = 1.0 - rate;

    // Gibbs point at inverse temperature t minimizes Σ P w − H(P)/t.
    let solve = |t: f64| gibbs_by_descent(&w, t, ln_d);
    let mut p = solve(1.0);
    if entropy_of(&p, base) < target {
        let t = bisect(|t| entropy_of(&solve(t), base) - target, 0.0, 1.0, 1e-15);
        p = solve(t);
    }
    let h = entropy_of(&p, base);
    let mean: f64 = p.iter().zip(&w).map(|(pi, wi)| pi * wi).sum();
    let value = mean - (rate + h - 1.0);
    ExponentResult::new(rate, value, Witness::Dist(embed(alphabet, &support, &p)))
}

/// Low-rate form: min of `Σ P(x)|x|_W` over the level set H_d(P) = 1 − R.
///
/// Solved on the tilted family `P_λ ∝ d^{−|x|_W/λ}` over finite-weight
/// letters, bisecting on 1/λ to hit the entropy level.
pub fn expurgation_lowrate(rate: f64, channel: &ChannelDist) -> ExponentResult {
    let alphabet = channel.alphabet();
    let table = w_weight_table(channel);
    let target = 1.0 - rate;
    if target <= 0.0 {
        return ExponentResult::new(rate, 0.0, Witness::Dist(ProbDist::point_mass(alphabet)));
    }
    let support = table.finite_support();
    let base = alphabet.d() as f64;
    if target > alphabet.log(support.len() as f64) + 1e-12 {
        return ExponentResult::new(rate, f64::INFINITY, Witness::None);
    }
    let w: Vec<f64> = support.iter().map(|&x| table.weight(x)).collect();
    let tilt = |mu: f64| -> Vec<f64> {
        let mut p: Vec<f64> = w.iter().map(|wi| base.powf(-wi * mu)).collect();
        let s: f64 = p.iter().sum();
        p.iter_mut().for_each(|v| *v /= s);
        p
    };
    // Entropy decreases in μ = 1/λ from log_d|X_fin| at μ = 0.
    let mut hi = 1.0;
    while entropy_of(&tilt(hi), base) > target && hi < 1e12 {
        hi *= 2.0;
    }
    let mu = if entropy_of(&tilt(hi), base) > target {
        hi
    } else {
        bisect(|m| entropy_of(&tilt(m), base) - target, 0.0, hi, 1e-14 * hi)
    };
    let p = tilt(mu);
    let value: f64 = p.iter().zip(&w).map(|(pi, wi)| pi * wi).sum();
    ExponentResult::new(rate, value, Witness::Dist(embed(alphabet, &support, &p)))
}

fn embed(alphabet: crate::channel::Alphabet, support: &[usize], p: &[f64]) -> ProbDist {
    let mut full = vec![0.0; alphabet.q()];
    for (&x, &v) in support.iter().zip(p) {
        full[x] = v;
    }
    ProbDist::normalized(alphabet, full)
}
