//! Codeword type statistics and the Gilbert–Varshamov type-count check.

use std::collections::BTreeMap;

use super::additive::AdditiveCode;
use crate::error::Result;
use crate::exponent::entropy_of;

/// Letter counts of a word, indexed by canonical letter.
pub type TypeCounts = Vec<u32>;

/// Number of codewords of each type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeStats {
    pub n: usize,
    pub counts: BTreeMap<TypeCounts, u64>,
}

impl TypeStats {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, t: &[u32]) -> u64 {
        self.counts.get(t).copied().unwrap_or(0)
    }
}

pub fn type_of(letters: &[usize], q: usize) -> TypeCounts {
    let mut t = vec![0u32; q];
    for &x in letters {
        t[x] += 1;
    }
    t
}

/// Exact per-type codeword counts by full enumeration.
pub fn type_stats(code: &AdditiveCode) -> Result<TypeStats> {
    let q = code.alphabet().q();
    let mut counts = BTreeMap::new();
    code.for_each_codeword(|w| *counts.entry(type_of(w, q)).or_insert(0) += 1)?;
    Ok(TypeStats {
        n: code.n(),
        counts,
    })
}

/// |T_P|, the multinomial coefficient n!/Π n_x!.
pub fn type_class_size(t: &[u32]) -> f64 {
    let mut remaining = 0u32;
    let mut acc = 1.0f64;
    for &c in t {
        for i in 1..=c {
            remaining += 1;
            acc *= remaining as f64 / i as f64;
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq)]
pub struct GvViolation {
    pub type_counts: TypeCounts,
    pub count: u64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GvReport {
    pub passed: bool,
    pub violations: Vec<GvViolation>,
}

/// Checks `|C ∩ T_P| ≤ q^{n(R(C) + H_q(P) − 1 + δ)}` for every type P ≠ P_0.
pub fn check_gv(code: &AdditiveCode, delta: f64) -> Result<GvReport> {
    let stats = type_stats(code)?;
    let q = code.alphabet().q();
    let n = code.n() as f64;
    let rate = code.rate();
    let violations: Vec<GvViolation> = stats
        .counts
        .iter()
        .filter(|(t, _)| t[0] as usize != code.n())
        .filter_map(|(t, &count)| {
            let p: Vec<f64> = t.iter().map(|&c| c as f64 / n).collect();
            let h = entropy_of(&p, q as f64);
            let bound = (q as f64).powf(n * (rate + h - 1.0 + delta));
            (count as f64 > bound * (1.0 + 1e-12)).then(|| GvViolation {
                type_counts: t.clone(),
                count,
                bound,
            })
        })
        .collect();
    Ok(GvReport {
        passed: violations.is_empty(),
        violations,
    })
}
