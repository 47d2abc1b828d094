//! Random-coding exponent: the Gallager parametric form and the
//! minimization over error distributions V.

use super::scalar::golden_max;
use super::simplex::mirror_descent;
use super::{
    capacity_lower_bound, divergence_of, entropy_of, is_degenerate, ExponentResult, ProbDist,
    Witness,
};
use crate::channel::ChannelDist;
use crate::error::{Error, Result};

/// Size of the tilted-family warm-start grid V_β ∝ W^β, β ∈ [½, 1].
const TILT_GRID: usize = 512;

/// E_0(ρ, W) = ρ − (1 + ρ)·log_d Σ_x W(x)^{1/(1+ρ)} for ρ ∈ [0, 1].
pub fn e0(rho: f64, channel: &ChannelDist) -> Result<f64> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::OutOfRange {
            name: "rho",
            value: rho,
        });
    }
    Ok(e0_unchecked(rho, channel))
}

fn e0_unchecked(rho: f64, channel: &ChannelDist) -> f64 {
    let a = channel.alphabet();
    let s: f64 = channel
        .probs()
        .iter()
        .map(|w| w.powf(1.0 / (1.0 + rho)))
        .sum();
    rho - (1.0 + rho) * a.log(s)
}

/// ∂E_0/∂ρ, differentiated in closed form:
/// `1 − log_d T + (1/(1+ρ))·Σ π(x) log_d W(x)` with `π ∝ W^{1/(1+ρ)}`.
pub fn e0_derivative(rho: f64, channel: &ChannelDist) -> f64 {
    let a = channel.alphabet();
    let exp = 1.0 / (1.0 + rho);
    let t: f64 = channel.probs().iter().map(|w| w.powf(exp)).sum();
    let tilted_log: f64 = channel
        .probs()
        .iter()
        .filter(|&&w| w > 0.0)
        .map(|&w| w.powf(exp) / t * a.log(w))
        .sum();
    1.0 - a.log(t) + tilted_log / (1.0 + rho)
}

/// The rate ∂E_0/∂ρ at ρ = 1 ending the straight-line segment of E_r,
/// clamped to `[0, 1 − H_d(W)]`.
pub fn critical_rate(channel: &ChannelDist) -> f64 {
    let cap = capacity_lower_bound(channel);
    if cap <= 0.0 {
        return 0.0;
    }
    e0_derivative(1.0, channel).clamp(0.0, cap)
}

/// E_r(R) = max_{0≤ρ≤1} [E_0(ρ) − ρR], with the closed form
/// `1 − R − log_d(Σ√W)²` below the critical rate.
pub fn random_coding_exponent_param(rate: f64, channel: &ChannelDist) -> ExponentResult {
    if is_degenerate(channel) {
        return ExponentResult::new(rate, 0.0, Witness::Rho(0.0));
    }
    if rate <= e0_derivative(1.0, channel) {
        let a = channel.alphabet();
        let root_sum: f64 = channel.probs().iter().map(|w| w.sqrt()).sum();
        let value = 1.0 - rate - a.log(root_sum * root_sum);
        return ExponentResult::new(rate, value, Witness::Rho(1.0));
    }
    let (rho, value) = golden_max(|r| e0_unchecked(r, channel) - r * rate, 0.0, 1.0, 1e-12);
    ExponentResult::new(rate, value, Witness::Rho(rho))
}

/// E_r(R) = min_V [D(V‖W) + |1 − H(V) − R|⁺] over distributions V on X.
///
/// Warm-started on the tilted family W^β and polished by entropic mirror
/// descent on the full simplex.
pub fn random_coding_exponent_min_v(rate: f64, channel: &ChannelDist) -> ExponentResult {
    let alphabet = channel.alphabet();
    if is_degenerate(channel) {
        return ExponentResult::new(rate, 0.0, Witness::Dist(ProbDist::of_channel(channel)));
    }
    let w = channel.probs();
    let base = alphabet.d() as f64;
    let ln_d = base.ln();
    let objective =
        |v: &[f64]| divergence_of(v, w, base) + (1.0 - entropy_of(v, base) - rate).max(0.0);
    let tilted = |beta: f64| -> Vec<f64> {
        let mut v: Vec<f64> = w
            .iter()
            .map(|x| if *x > 0.0 { x.powf(beta) } else { 0.0 })
            .collect();
        let s: f64 = v.iter().sum();
        v.iter_mut().for_each(|x| *x /= s);
        v
    };
    let beta_at = |i: usize| 0.5 + 0.5 * i as f64 / (TILT_GRID - 1) as f64;

    let best_i = (0..TILT_GRID)
        .map(|i| (i, objective(&tilted(beta_at(i)))))
        .fold((0, f64::INFINITY), |b, c| if c.1 < b.1 { c } else { b })
        .0;
    let lo = beta_at(best_i.saturating_sub(1));
    let hi = beta_at((best_i + 1).min(TILT_GRID - 1));
    let (beta, neg) = golden_max(|b| -objective(&tilted(b)), lo, hi, 1e-13);
    let mut best_v = tilted(beta);
    let mut best = -neg;

    let subgradient = |v: &[f64], g: &mut [f64]| {
        let active = 1.0 - entropy_of(v, base) - rate > 0.0;
        for x in 0..v.len() {
            g[x] = if v[x] > 0.0 {
                let mut gx = (v[x] / w[x]).ln() / ln_d;
                if active {
                    gx += v[x].ln() / ln_d;
                }
                gx
            } else {
                0.0
            };
        }
    };
    let (polished, value) = mirror_descent(objective, subgradient, &best_v, 0.05);
    if value < best {
        best = value;
        best_v = polished;
    }
    ExponentResult::new(
        rate,
        best,
        Witness::Dist(ProbDist::normalized(alphabet, best_v)),
    )
}
