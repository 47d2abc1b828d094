//! Entropic mirror descent on the probability simplex.

/// Iteration cap and stopping rule for the subgradient polish.
pub(crate) const MAX_ITERS: usize = 100_000;
pub(crate) const REL_TOL: f64 = 1e-8;
const STALL_WINDOW: usize = 200;

/// Minimizes a convex (possibly nonsmooth) objective over the simplex
/// restricted to the coordinates where `start` is positive.
///
/// Uses the exponentiated-gradient update `x ← x·exp(−η_t g)` with
/// `η_t = η₀/√(t+1)` and keeps the best iterate seen. Stops when the best
/// value has not improved by a relative `REL_TOL` over a window of
/// iterations.
pub(crate) fn mirror_descent(
    objective: impl Fn(&[f64]) -> f64,
    subgradient: impl Fn(&[f64], &mut [f64]),
    start: &[f64],
    eta0: f64,
) -> (Vec<f64>, f64) {
    let m = start.len();
    let mut x = start.to_vec();
    let mut best_x = x.clone();
    let mut best = objective(&x);
    let mut window_best = best;
    let mut g = vec![0.0; m];
    for t in 0..MAX_ITERS {
        subgradient(&x, &mut g);
        let gmax = x
            .iter()
            .zip(&g)
            .filter(|(v, _)| **v > 0.0)
            .map(|(_, gi)| gi.abs())
            .fold(0.0, f64::max);
        if gmax == 0.0 || !gmax.is_finite() {
            break;
        }
        // Normalize the step by the gradient scale so the update stays bounded.
        let eta = eta0 / ((t + 1) as f64).sqrt() / gmax;
        let shift = x
            .iter()
            .zip(&g)
            .filter(|(v, _)| **v > 0.0)
            .map(|(_, gi)| -eta * gi)
            .fold(f64::NEG_INFINITY, f64::max);
        let mut sum = 0.0;
        for (xi, gi) in x.iter_mut().zip(&g) {
            if *xi > 0.0 {
                *xi *= (-eta * gi - shift).exp();
                sum += *xi;
            }
        }
        x.iter_mut().for_each(|v| *v /= sum);
        let val = objective(&x);
        if val < best {
            best = val;
            best_x.copy_from_slice(&x);
        }
        if (t + 1) % STALL_WINDOW == 0 {
            if window_best - best <= REL_TOL * best.abs().max(1e-300) {
                break;
            }
            window_best = best;
        }
    }
    (best_x, best)
}

/// Minimizer of `Σ P(x)w(x) − H(P)/t` (base-`ln_base` logs) over the simplex
/// on `weights.len()` letters, by mirror descent with constant step ½.
///
/// The update contracts the log-iterate towards the Gibbs point
/// `P ∝ exp(−t·w·ln_base)` by a factor ½ per step; `t = 0` gives the uniform
/// distribution.
pub(crate) fn gibbs_by_descent(weights: &[f64], t: f64, ln_base: f64) -> Vec<f64> {
    const ETA: f64 = 0.5;
    let m = weights.len();
    let mut log_p = vec![-(m as f64).ln(); m];
    for _ in 0..200 {
        let mut delta: f64 = 0.0;
        for (lp, w) in log_p.iter_mut().zip(weights) {
            let next = (1.0 - ETA) * *lp - ETA * t * w * ln_base;
            delta = delta.max((next - *lp).abs());
            *lp = next;
        }
        let lse = log_sum_exp(&log_p);
        log_p.iter_mut().for_each(|v| *v -= lse);
        if delta < 1e-15 {
            break;
        }
    }
    log_p.into_iter().map(f64::exp).collect()
}

pub(crate) fn log_sum_exp(v: &[f64]) -> f64 {
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + v.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_descent_minimizes_linear_plus_entropy() {
        // min Σ x_i c_i + Σ x_i ln x_i has the closed form x ∝ exp(−c).
        let c = [0.3, 1.0, 2.0];
        let obj = |x: &[f64]| {
            x.iter()
                .zip(&c)
                .map(|(xi, ci)| xi * ci + if *xi > 0.0 { xi * xi.ln() } else { 0.0 })
                .sum::<f64>()
        };
        let grad = |x: &[f64], g: &mut [f64]| {
            for i in 0..3 {
                g[i] = c[i] + x[i].ln() + 1.0;
            }
        };
        let (x, _) = mirror_descent(obj, grad, &[1.0 / 3.0; 3], 1.0);
        let z: f64 = c.iter().map(|ci: &f64| (-ci).exp()).sum();
        for i in 0..3 {
            assert!((x[i] - (-c[i]).exp() / z).abs() < 1e-4, "{x:?}");
        }
    }

    #[test]
    fn gibbs_matches_closed_form() {
        let w = [0.0, 0.5, 2.0, 3.0];
        let p = gibbs_by_descent(&w, 1.3, 2f64.ln());
        let z: f64 = w.iter().map(|wi| 2f64.powf(-1.3 * wi)).sum();
        for (pi, wi) in p.iter().zip(&w) {
            assert!((pi - 2f64.powf(-1.3 * wi) / z).abs() < 1e-14);
        }
        let u = gibbs_by_descent(&w, 0.0, 2f64.ln());
        assert!(u.iter().all(|v| (v - 0.25).abs() < 1e-15));
    }
}
