use std::fmt::Write;

use qdmc_core::channel::{
    is_equidistant, is_indivisible, is_nonneg_definite, ChannelDist, NND_TOLERANCE,
};
use qdmc_core::exponent::{
    capacity_lower_bound, critical_rate, crossover_rate_rx, entropy, r_infinity, ProbDist,
};

use crate::fmt::fixed;
use crate::{ChannelArgs, ChannelKind};

const PREDICATE_TOL: f64 = 1e-12;
/// ρ grid for the nonnegative-definiteness scan: 1.00, 1.01, …, 2.00.
const NND_STEPS: usize = 101;

pub fn report(args: &ChannelArgs, w: &ChannelDist) -> String {
    let a = w.alphabet();
    let d = a.d();
    let mut out = String::new();
    let source = match args.channel {
        ChannelKind::Depolarizing => {
            format!("depolarizing d={d} p={}", fixed(args.p.unwrap_or(0.0)))
        }
        ChannelKind::Custom => format!(
            "custom d={d} ({})",
            args.dist
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_default()
        ),
    };
    let h = entropy(&ProbDist::of_channel(w), d as f64);
    let rows: [(&str, String); 6] = [
        ("channel", source),
        ("letters q", a.q().to_string()),
        ("entropy H_d(W)", fixed(h)),
        ("capacity bound 1 - H_d(W)", fixed(capacity_lower_bound(w))),
        ("critical rate R_crit", fixed(critical_rate(w))),
        ("crossover rate R_x", fixed(crossover_rate_rx(w))),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<28}{v}").unwrap();
    }
    let r_inf = r_infinity(w);
    writeln!(out, "{:<28}{}", "zero-error threshold R_inf", fixed(r_inf)).unwrap();
    writeln!(
        out,
        "{:<28}{}",
        "equidistant",
        is_equidistant(w, PREDICATE_TOL)
    )
    .unwrap();
    writeln!(
        out,
        "{:<28}{}",
        "indivisible",
        is_indivisible(w, PREDICATE_TOL)
    )
    .unwrap();

    let first_failure = (0..NND_STEPS)
        .map(|i| 1.0 + i as f64 / (NND_STEPS - 1) as f64)
        .find(|&rho| !is_nonneg_definite(w, rho, NND_TOLERANCE).expect("rho >= 1"));
    writeln!(
        out,
        "{:<28}{}",
        "nonneg definite on [1, 2]",
        first_failure.is_none()
    )
    .unwrap();
    if let Some(rho) = first_failure {
        writeln!(out, "{:<28}{}", "first NND failure at rho", fixed(rho)).unwrap();
    }
    out
}
