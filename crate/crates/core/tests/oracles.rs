//! Checks against reference computations written out here from first
//! principles, independent of the library's solvers.

use std::f64::consts::PI;

use qdmc_core::channel::{bhattacharyya_matrix, min_eigenvalue, ChannelDist};
use qdmc_core::depolarizing::{delta_gv, e_ell, h_q, DepolParams};
use qdmc_core::exponent::{
    critical_rate, crossover_rate_rx, expurgation_exponent_min_p, expurgation_exponent_sup,
    expurgation_lowrate, r_infinity, random_coding_exponent_min_v, random_coding_exponent_param,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXAMPLE_D3: [f64; 9] = [0.0, 0.49, 0.0, 0.01, 0.01, 0.0, 0.49, 0.0, 0.0];

fn random_full_support(rng: &mut ChaCha8Rng, d: u32) -> ChannelDist {
    let q = (d * d) as usize;
    // Skew towards the identity so that the capacity bound is usually positive.
    let mut w: Vec<f64> = (0..q)
        .map(|_| rng.gen_range(0.001..1.0f64).powi(3))
        .collect();
    w[0] += rng.gen_range(1.0..6.0);
    let total: f64 = w.iter().sum();
    let w: Vec<f64> = w.iter().map(|v| v / total).collect();
    ChannelDist::custom(d, &w).unwrap()
}

/// Gallager's E_0 summed directly, base-d logs.
fn gallager_e0(w: &[f64], d: f64, rho: f64) -> f64 {
    let s: f64 = w.iter().map(|&p| p.powf(1.0 / (1.0 + rho))).sum();
    rho - (1.0 + rho) * s.log(d)
}

/// max over a dense ρ grid on [0, 1] of E_0(ρ) − ρR.
fn grid_random_coding(w: &[f64], d: f64, rate: f64) -> f64 {
    (0..=20_000)
        .map(|i| {
            let rho = i as f64 / 20_000.0;
            gallager_e0(w, d, rho) - rho * rate
        })
        .fold(0.0, f64::max)
}

#[test]
fn random_coding_against_dense_grid_on_random_channels() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for i in 0..20 {
        let d = if i % 2 == 0 { 2 } else { 3 };
        let w = random_full_support(&mut rng, d);
        for j in 0..=100 {
            let r = j as f64 / 100.0;
            let oracle = grid_random_coding(w.probs(), d as f64, r);
            let param = random_coding_exponent_param(r, &w).value;
            let min_v = random_coding_exponent_min_v(r, &w).value;
            worst = worst
                .max((param - oracle).abs())
                .max((min_v - oracle).abs());
        }
    }
    assert!(worst <= 1e-4, "worst deviation {worst:e}");
}

#[test]
fn expurgation_forms_agree_on_random_channels() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..20 {
        let d = if i % 2 == 0 { 2 } else { 3 };
        let w = random_full_support(&mut rng, d);
        let rx = crossover_rate_rx(&w);
        for j in 0..=100 {
            let r = j as f64 / 100.0;
            let sup = expurgation_exponent_sup(r, &w).value;
            let min_p = expurgation_exponent_min_p(r, &w).value;
            assert!(
                (sup - min_p).abs() <= 1e-4,
                "channel {i}, R={r}: {sup} vs {min_p}"
            );
            if r <= rx {
                let low = expurgation_lowrate(r, &w).value;
                assert!(
                    (low - min_p).abs() <= 1e-4,
                    "channel {i}, R={r}: low-rate {low}"
                );
            }
        }
    }
}

#[test]
fn random_coding_is_a_unit_slope_line_below_critical_rate() {
    for (d, p) in [(2, 0.0005), (2, 0.01), (3, 0.05)] {
        let w = ChannelDist::depolarizing(d, p).unwrap();
        let rc = critical_rate(&w);
        let anchor = random_coding_exponent_param(0.0, &w).value;
        for i in 0..=50 {
            let r = rc * i as f64 / 50.0;
            let e = random_coding_exponent_param(r, &w).value;
            assert!((e + r - anchor).abs() < 1e-9, "d={d} p={p} R={r}");
        }
    }
}

/// Eigenvalues of a group-circulant matrix M[x, y] = f(x − y) on Z_d² are the
/// character sums Σ_z f(z)·cos(2π(u·a + v·b)/d), real because f(z) = f(−z).
fn character_min_eigenvalue(w: &ChannelDist, rho: f64) -> f64 {
    let a = w.alphabet();
    let d = a.d() as usize;
    let f: Vec<f64> = (0..a.q()).map(|z| w.overlap(z).powf(1.0 / rho)).collect();
    let mut min = f64::INFINITY;
    for u in 0..d {
        for v in 0..d {
            let lambda: f64 = (0..a.q())
                .map(|z| {
                    let (za, zb) = (z / d, z % d);
                    f[z] * (2.0 * PI * ((u * za + v * zb) % d) as f64 / d as f64).cos()
                })
                .sum();
            min = min.min(lambda);
        }
    }
    min
}

#[test]
fn eigenvalues_match_character_sums() {
    let example = ChannelDist::custom(3, &EXAMPLE_D3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let channels = [
        example.clone(),
        ChannelDist::depolarizing(2, 0.1).unwrap(),
        ChannelDist::depolarizing(3, 0.3).unwrap(),
        random_full_support(&mut rng, 3),
        random_full_support(&mut rng, 2),
    ];
    for w in &channels {
        for rho in [1.0, 1.3, 1.37, 1.44, 2.0, 5.0] {
            let got = min_eigenvalue(w, rho).unwrap();
            let want = character_min_eigenvalue(w, rho);
            assert!((got - want).abs() < 1e-12, "rho {rho}: {got} vs {want}");
        }
    }
    // The sign change of the smallest eigenvalue sits between 1.36 and 1.37.
    assert!(character_min_eigenvalue(&example, 1.36) > 0.0);
    assert!(character_min_eigenvalue(&example, 1.37) < 0.0);
}

#[test]
fn depolarizing_gamma_is_the_off_diagonal_overlap() {
    for d in [2, 3, 5] {
        for p in [0.001, 0.05, 0.1, 0.3] {
            let params = DepolParams::new(d, p).unwrap();
            let m = bhattacharyya_matrix(&ChannelDist::depolarizing(d, p).unwrap(), 1.0).unwrap();
            assert!((params.gamma - m[(0, 1)]).abs() < 1e-12);
            assert!((params.gamma - m[(2, 3)]).abs() < 1e-12);
        }
    }
}

#[test]
fn first_branch_matches_low_rate_engine() {
    for (d, p) in [(2, 0.0005), (2, 0.002), (3, 0.001)] {
        let params = DepolParams::new(d, p).unwrap();
        let w = ChannelDist::depolarizing(d, p).unwrap();
        for i in 0..=40 {
            // Quantum rates whose classical rate lies below r_x.
            let r_classical = params.r_x * i as f64 / 40.0;
            let big_r = 2.0 * r_classical - 1.0;
            if !(0.0..=1.0).contains(&big_r) {
                continue;
            }
            let closed = 2.0 * e_ell(r_classical, p, d).unwrap();
            let engine = expurgation_lowrate(big_r, &w).value;
            assert!(
                (closed - engine).abs() < 1e-6,
                "d={d} p={p} R={big_r}: {closed} vs {engine}"
            );
        }
    }
}

#[test]
fn delta_gv_inverts_h() {
    for q in [4u32, 9, 25] {
        for i in 1..50 {
            let r = i as f64 / 50.0;
            let delta = delta_gv(r, q);
            assert!((h_q(delta, q).unwrap() - (1.0 - r)).abs() < 1e-10);
        }
    }
}

#[test]
fn zero_error_threshold_on_a_sparse_channel() {
    // W supported on {0, e} with d = 5: overlaps vanish outside {0, ±e},
    // so R_inf = 1 − log_5 3.
    let mut w = vec![0.0; 25];
    w[0] = 0.9;
    w[7] = 0.1;
    let w = ChannelDist::custom(5, &w).unwrap();
    let r_inf = r_infinity(&w);
    assert!((r_inf - (1.0 - 3f64.ln() / 5f64.ln())).abs() < 1e-14);
    for i in 0..=40 {
        let r = i as f64 / 40.0;
        let sup = expurgation_exponent_sup(r, &w).value;
        let min_p = expurgation_exponent_min_p(r, &w).value;
        if r < r_inf - 1e-9 {
            assert_eq!(sup, f64::INFINITY, "R={r}");
            assert_eq!(min_p, f64::INFINITY, "R={r}");
        } else if r > r_inf + 1e-9 {
            assert!(sup.is_finite() && min_p.is_finite(), "R={r}");
            assert!((sup - min_p).abs() < 1e-4, "R={r}: {sup} vs {min_p}");
        }
    }
}
