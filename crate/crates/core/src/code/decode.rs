//! Exhaustive coset-leader decoding and the Bhattacharyya union bound.

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::additive::{AdditiveCode, ENUMERATION_CAP};
use crate::channel::{w_weight_table, ChannelDist};
use crate::error::{Error, Result};

/// Canonical index of a word: its letters read as base-q digits, most
/// significant first.
pub fn word_index(letters: &[usize], q: usize) -> u64 {
    letters
        .iter()
        .fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

pub fn word_letters(mut index: u64, n: usize, q: usize) -> Vec<usize> {
    let mut out = vec![0usize; n];
    for slot in out.iter_mut().rev() {
        *slot = (index % q as u64) as usize;
        index /= q as u64;
    }
    out
}

fn check_alphabets(code: &AdditiveCode, channel: &ChannelDist) -> Result<()> {
    if code.alphabet() != channel.alphabet() {
        return Err(Error::AlphabetMismatch(
            code.alphabet().q(),
            channel.alphabet().q(),
        ));
    }
    Ok(())
}

/// One maximum-probability leader per coset of X^n/C.
///
/// Cosets are labelled by syndromes against a basis of C⊥. Among tied
/// candidates the leader is the word with the smallest canonical index.
#[derive(Debug, Clone)]
pub struct CosetTable {
    code: AdditiveCode,
    channel: ChannelDist,
    /// `contrib[i][x]`: syndrome digits of letter x placed at position i.
    contrib: Vec<Vec<Vec<u32>>>,
    leaders: Vec<u64>,
    leader_log_prob: Vec<f64>,
    coset_mass: Vec<f64>,
}

impl CosetTable {
    pub fn build(code: &AdditiveCode, channel: &ChannelDist) -> Result<Self> {
        check_alphabets(code, channel)?;
        let a = code.alphabet();
        let (n, q, d) = (code.n(), a.q(), a.d());
        let space = (q as f64).powi(n as i32);
        if space > ENUMERATION_CAP {
            return Err(Error::TooLarge {
                what: "q^n",
                size: space,
            });
        }
        let dual = code.dual();
        let checks = dual.basis_rows();
        let m = checks.len();
        let contrib: Vec<Vec<Vec<u32>>> = (0..n)
            .map(|i| {
                (0..q)
                    .map(|x| {
                        let (xa, xb) = ((x as u32) / d, (x as u32) % d);
                        checks
                            .iter()
                            .map(|h| (h[2 * i] * xb + (d - h[2 * i + 1]) * xa) % d)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let log_w: Vec<f64> = channel.probs().iter().map(|w| w.ln()).collect();

        let cosets = (d as usize).pow(m as u32);
        let mut table = Self {
            code: code.clone(),
            channel: channel.clone(),
            contrib,
            leaders: vec![u64::MAX; cosets],
            leader_log_prob: vec![f64::NEG_INFINITY; cosets],
            coset_mass: vec![0.0; cosets],
        };

        // Depth-first walk over X^n in canonical order, carrying the partial
        // syndrome and log-probability per depth.
        let mut syn = vec![vec![0u32; m]; n + 1];
        let mut logp = vec![0.0f64; n + 1];
        let mut letters = vec![0usize; n];
        let mut pos = 0usize;
        let mut started = vec![false; n];
        loop {
            if pos == n {
                let s = pack(&syn[n], d);
                let index = word_index(&letters, q);
                let lp = logp[n];
                table.coset_mass[s] += lp.exp();
                if table.leaders[s] == u64::MAX || lp > table.leader_log_prob[s] {
                    table.leaders[s] = index;
                    table.leader_log_prob[s] = lp;
                }
                pos -= 1;
                continue;
            }
            if !started[pos] {
                started[pos] = true;
                letters[pos] = 0;
            } else {
                letters[pos] += 1;
                if letters[pos] == q {
                    started[pos] = false;
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    continue;
                }
            }
            let x = letters[pos];
            let (head, tail) = syn.split_at_mut(pos + 1);
            for ((out, prev), c) in tail[0]
                .iter_mut()
                .zip(&head[pos])
                .zip(&table.contrib[pos][x])
            {
                *out = (prev + c) % d;
            }
            logp[pos + 1] = logp[pos] + log_w[x];
            pos += 1;
        }
        Ok(table)
    }

    pub fn code(&self) -> &AdditiveCode {
        &self.code
    }

    pub fn channel(&self) -> &ChannelDist {
        &self.channel
    }

    pub fn num_cosets(&self) -> usize {
        self.leaders.len()
    }

    pub fn syndrome(&self, letters: &[usize]) -> usize {
        let d = self.code.alphabet().d();
        let m = self.code.n() * 2 - self.code.dimension();
        let mut s = vec![0u32; m];
        for (i, &x) in letters.iter().enumerate() {
            for (sj, c) in s.iter_mut().zip(&self.contrib[i][x]) {
                *sj = (*sj + c) % d;
            }
        }
        pack(&s, d)
    }

    pub fn leader_index(&self, syndrome: usize) -> u64 {
        self.leaders[syndrome]
    }

    pub fn leader(&self, syndrome: usize) -> Vec<usize> {
        word_letters(
            self.leaders[syndrome],
            self.code.n(),
            self.code.alphabet().q(),
        )
    }

    /// W^n of the leader, in natural-log space.
    pub fn leader_log_prob(&self, syndrome: usize) -> f64 {
        self.leader_log_prob[syndrome]
    }

    /// True iff `letters` is the chosen leader of its coset.
    pub fn is_leader(&self, letters: &[usize]) -> bool {
        let q = self.code.alphabet().q();
        self.leaders[self.syndrome(letters)] == word_index(letters, q)
    }

    /// Probability mass outside the leader set, Σ_S (W^n(S) − W^n(y(S))).
    pub fn error_probability(&self) -> f64 {
        self.coset_mass
            .iter()
            .zip(&self.leader_log_prob)
            .map(|(mass, lp)| (mass - lp.exp()).max(0.0))
            .sum()
    }
}

fn pack(s: &[u32], d: u32) -> usize {
    s.iter()
        .rev()
        .fold(0usize, |acc, &v| acc * d as usize + v as usize)
}

/// Exact probability that the channel error falls outside the coset-leader set.
pub fn exact_error_probability(code: &AdditiveCode, channel: &ChannelDist) -> Result<f64> {
    Ok(CosetTable::build(code, channel)?.error_probability())
}

/// Σ over nonzero codewords x of Σ_y √(W^n(y)W^n(y − x)) = d^{−Σ_i |x_i|_W}.
pub fn bhattacharyya_union_bound(code: &AdditiveCode, channel: &ChannelDist) -> Result<f64> {
    check_alphabets(code, channel)?;
    let table = w_weight_table(channel);
    let d = code.alphabet().d() as f64;
    let mut total = 0.0;
    code.for_each_codeword(|word| {
        if word.iter().all(|&x| x == 0) {
            return;
        }
        let weight: f64 = word.iter().map(|&x| table.weight(x)).sum();
        total += d.powf(-weight);
    })?;
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub samples: u64,
    pub failures: u64,
    pub estimate: f64,
    /// Binomial standard deviation √(p(1−p)/N) at the estimated p.
    pub std_error: f64,
}

/// Samples channel errors and counts those that are not coset leaders.
pub fn monte_carlo_error_probability(
    table: &CosetTable,
    samples: u64,
    seed: u64,
) -> MonteCarloEstimate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = WeightedIndex::new(table.channel().probs()).expect("valid channel");
    let n = table.code().n();
    let mut letters = vec![0usize; n];
    let mut failures = 0u64;
    for _ in 0..samples {
        for slot in letters.iter_mut() {
            *slot = dist.sample(&mut rng);
        }
        if !table.is_leader(&letters) {
            failures += 1;
        }
    }
    let estimate = failures as f64 / samples as f64;
    MonteCarloEstimate {
        samples,
        failures,
        estimate,
        std_error: (estimate * (1.0 - estimate) / samples as f64).sqrt(),
    }
}
