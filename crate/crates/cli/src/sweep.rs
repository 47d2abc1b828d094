use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use qdmc_core::channel::ChannelDist;
use qdmc_core::exponent::{best_exponent, expurgation_exponent_sup, random_coding_exponent_param};
use rayon::prelude::*;
use serde_json::json;

use crate::fmt::{fixed, json_number};
use crate::{emit, ChannelArgs, Failure};

pub const CSV_HEADER: &str = "R,E_r,E_x,E_best,winner";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Bound {
    Rc,
    Ex,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Depolarizing d=2, p=0.0005, 201 rates on [0, 1].
    Fig1,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    channel: ChannelArgs,
    #[arg(long, value_enum, conflicts_with_all = ["channel", "d", "p", "dist", "r_min", "r_max", "steps"])]
    preset: Option<Preset>,
    #[arg(long, default_value_t = 0.0)]
    r_min: f64,
    #[arg(long, default_value_t = 1.0)]
    r_max: f64,
    #[arg(long, default_value_t = 101)]
    steps: usize,
    #[arg(long, value_enum, default_value = "both")]
    bound: Bound,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// One grid point. Bounds that were not requested are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub rate: f64,
    pub e_r: Option<f64>,
    pub e_x: Option<f64>,
    pub best: f64,
    pub winner: &'static str,
}

pub fn evaluate(rate: f64, w: &ChannelDist, bound: Bound) -> Row {
    match bound {
        Bound::Both => {
            let b = best_exponent(rate, w);
            Row {
                rate,
                e_r: Some(b.random_coding.value),
                e_x: Some(b.expurgation.value),
                best: b.value,
                winner: b.winner.as_str(),
            }
        }
        Bound::Rc => {
            let v = random_coding_exponent_param(rate, w).value;
            Row {
                rate,
                e_r: Some(v),
                e_x: None,
                best: v,
                winner: if v > 0.0 { "rc" } else { "none" },
            }
        }
        Bound::Ex => {
            let v = expurgation_exponent_sup(rate, w).value;
            Row {
                rate,
                e_r: None,
                e_x: Some(v),
                best: v,
                winner: if v > 0.0 { "ex" } else { "none" },
            }
        }
    }
}

/// Evaluates every grid point in parallel; rows come back in rate order.
pub fn sweep(w: &ChannelDist, r_min: f64, r_max: f64, steps: usize, bound: Bound) -> Vec<Row> {
    (0..steps)
        .into_par_iter()
        .map(|i| {
            let t = i as f64 / (steps - 1) as f64;
            let rate = if i == steps - 1 {
                r_max
            } else {
                r_min + t * (r_max - r_min)
            };
            evaluate(rate, w, bound)
        })
        .collect()
}

pub fn to_csv(rows: &[Row]) -> String {
    let opt = |v: Option<f64>| v.map(fixed).unwrap_or_default();
    let mut out = String::with_capacity(48 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            fixed(r.rate),
            opt(r.e_r),
            opt(r.e_x),
            fixed(r.best),
            r.winner
        )
        .unwrap();
    }
    out
}

pub fn to_json(rows: &[Row], w: &ChannelDist) -> String {
    let opt = |v: Option<f64>| v.map(json_number).unwrap_or(serde_json::Value::Null);
    let points: Vec<_> = rows
        .iter()
        .map(|r| {
            json!({
                "R": r.rate,
                "E_r": opt(r.e_r),
                "E_x": opt(r.e_x),
                "E_best": json_number(r.best),
                "winner": r.winner,
            })
        })
        .collect();
    let doc = json!({
        "channel": { "d": w.alphabet().d(), "w": w.probs() },
        "points": points,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("sweep serializes");
    s.push('\n');
    s
}

pub fn run(args: &SweepArgs) -> Result<(), Failure> {
    let (w, r_min, r_max, steps) = match args.preset {
        Some(Preset::Fig1) => (ChannelDist::depolarizing(2, 0.0005)?, 0.0, 1.0, 201),
        None => (args.channel.resolve()?, args.r_min, args.r_max, args.steps),
    };
    if !(0.0 <= r_min && r_min < r_max && r_max <= 1.0) {
        return Err(Failure::Input(format!(
            "rate range must satisfy 0 <= r-min < r-max <= 1 (got {r_min}, {r_max})"
        )));
    }
    if steps < 2 {
        return Err(Failure::Input(format!(
            "--steps must be at least 2 (got {steps})"
        )));
    }
    let rows = sweep(&w, r_min, r_max, steps, args.bound);
    let text = match args.format {
        Format::Csv => to_csv(&rows),
        Format::Json => to_json(&rows, &w),
    };
    emit(&text, args.out.as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints_and_order() {
        let w = ChannelDist::depolarizing(2, 0.01).unwrap();
        let rows = sweep(&w, 0.2, 0.7, 6, Bound::Rc);
        let rates: Vec<f64> = rows.iter().map(|r| r.rate).collect();
        assert_eq!(rates[0], 0.2);
        assert_eq!(rates[5], 0.7);
        assert!(rates.windows(2).all(|p| p[0] < p[1]));
        assert!(rows.iter().all(|r| r.e_x.is_none()));
    }

    #[test]
    fn csv_leaves_unrequested_columns_empty() {
        let w = ChannelDist::depolarizing(2, 0.01).unwrap();
        let csv = to_csv(&sweep(&w, 0.0, 1.0, 2, Bound::Ex));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("0.000000,,"));
    }
}
