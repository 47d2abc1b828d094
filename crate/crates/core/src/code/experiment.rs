//! Seeded oracle trials emitting the JSON record schema
//! `{seed, n, k, d, p, P_err, union_bound, gv_pass, rate_classical, rate_quantum}`.

use serde::Serialize;

use super::additive::AdditiveCode;
use super::decode::{bhattacharyya_union_bound, exact_error_probability};
use super::types::check_gv;
use crate::channel::{Alphabet, ChannelDist};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleRecord {
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub d: u32,
    pub p: Option<f64>,
    #[serde(rename = "P_err")]
    pub p_err: Option<f64>,
    pub union_bound: Option<f64>,
    pub gv_pass: Option<bool>,
    pub rate_classical: f64,
    pub rate_quantum: f64,
}

impl OracleRecord {
    fn for_code(code: &AdditiveCode, seed: u64) -> Self {
        Self {
            seed,
            n: code.n(),
            k: code.k(),
            d: code.alphabet().d(),
            p: None,
            p_err: None,
            union_bound: None,
            gv_pass: None,
            rate_classical: code.rate(),
            rate_quantum: code.quantum_rate(),
        }
    }

    /// True when the finite-n inequality P_err ≤ union bound holds (or is not applicable).
    pub fn bound_holds(&self) -> bool {
        match (self.p_err, self.union_bound) {
            (Some(e), Some(u)) => e <= u + 1e-12,
            _ => true,
        }
    }
}

/// Samples a dual-containing code and evaluates exact decoding error and the
/// union bound on the depolarizing channel with parameter `p`.
pub fn decode_trial(n: usize, k: usize, d: u32, p: f64, seed: u64) -> Result<OracleRecord> {
    let alphabet = Alphabet::new(d)?;
    let channel = ChannelDist::depolarizing(d, p)?;
    let code = AdditiveCode::random_dual_containing(alphabet, n, k, seed)?;
    let mut rec = OracleRecord::for_code(&code, seed);
    rec.p = Some(p);
    rec.p_err = Some(exact_error_probability(&code, &channel)?);
    rec.union_bound = Some(bhattacharyya_union_bound(&code, &channel)?);
    Ok(rec)
}

/// Samples a dual-containing code and runs the GV type-count check at `delta`.
pub fn gv_trial(n: usize, k: usize, d: u32, delta: f64, seed: u64) -> Result<OracleRecord> {
    let alphabet = Alphabet::new(d)?;
    let code = AdditiveCode::random_dual_containing(alphabet, n, k, seed)?;
    let mut rec = OracleRecord::for_code(&code, seed);
    rec.gv_pass = Some(check_gv(&code, delta)?.passed);
    Ok(rec)
}
