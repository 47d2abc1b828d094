use std::path::PathBuf;

use clap::{Args, Subcommand};
use qdmc_core::code::{decode_trial, gv_trial, OracleRecord};
use rayon::prelude::*;
use serde_json::json;

use crate::{emit, Failure};

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Check the type-count (Gilbert–Varshamov) condition on random codes.
    Gv {
        #[command(flatten)]
        common: TrialArgs,
        #[arg(long)]
        delta: f64,
    },
    /// Exact coset-leader error probability against the union bound.
    Decode {
        #[command(flatten)]
        common: TrialArgs,
        /// Depolarizing probability.
        #[arg(long)]
        p: f64,
    },
}

#[derive(Args, Debug)]
pub struct TrialArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    d: u32,
    #[arg(long, default_value_t = 1)]
    trials: u64,
    /// Trial i uses seed `seed + i`, which is what its record reports.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_trials(
    common: &TrialArgs,
    trial: impl Fn(u64) -> qdmc_core::Result<OracleRecord> + Sync,
) -> Result<Vec<OracleRecord>, Failure> {
    // Fail fast on parameter and size errors before spawning the batch.
    if common.trials == 0 {
        return Ok(Vec::new());
    }
    let first = trial(common.seed)?;
    let rest: Vec<OracleRecord> = (1..common.trials)
        .into_par_iter()
        .map(|i| trial(common.seed.wrapping_add(i)))
        .collect::<qdmc_core::Result<_>>()?;
    Ok(std::iter::once(first).chain(rest).collect())
}

fn render(records: &[OracleRecord], summary: serde_json::Value) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out.push_str(&json!({ "summary": summary }).to_string());
    out.push('\n');
    out
}

pub fn run(cmd: &OracleCommand) -> Result<(), Failure> {
    match cmd {
        OracleCommand::Gv { common, delta } => {
            let (n, k, d, delta) = (common.n, common.k, common.d, *delta);
            let records = run_trials(common, |s| gv_trial(n, k, d, delta, s))?;
            let passed = records.iter().filter(|r| r.gv_pass == Some(true)).count();
            let summary = json!({
                "command": "gv",
                "trials": records.len(),
                "gv_pass": passed,
                "first_pass_seed": records.iter().find(|r| r.gv_pass == Some(true)).map(|r| r.seed),
            });
            emit(&render(&records, summary), common.out.as_deref())
        }
        OracleCommand::Decode { common, p } => {
            let (n, k, d, p) = (common.n, common.k, common.d, *p);
            let records = run_trials(common, |s| decode_trial(n, k, d, p, s))?;
            let holds = records.iter().filter(|r| r.bound_holds()).count();
            let summary = json!({
                "command": "decode",
                "trials": records.len(),
                "bound_holds": holds,
                "bound_violations": records.len() - holds,
            });
            emit(&render(&records, summary), common.out.as_deref())
        }
    }
}
