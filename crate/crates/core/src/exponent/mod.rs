//! Entropy utilities and the general-channel exponent bounds.
//!
//! All logarithms are base d. Rates are quantum rates R; the classical
//! rate of the underlying additive code, in base-d units, is `1 + R`.

mod expurgation;
mod random_coding;
pub(crate) mod scalar;
mod simplex;

pub use expurgation::{
    crossover_rate_rx, e_ex, e_ex_derivative, expurgation_exponent_min_p, expurgation_exponent_sup,
    expurgation_lowrate, r_infinity,
};
pub use random_coding::{
    critical_rate, e0, e0_derivative, random_coding_exponent_min_v, random_coding_exponent_param,
};

use crate::channel::{Alphabet, ChannelDist};
use crate::error::{Error, Result};

/// A probability distribution on the q-letter alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist {
    alphabet: Alphabet,
    p: Vec<f64>,
}

impl ProbDist {
    /// Validates (sum within 1e-9) and renormalizes.
    pub fn new(alphabet: Alphabet, p: Vec<f64>) -> Result<Self> {
        let q = alphabet.q();
        if p.len() != q {
            return Err(Error::WrongLength {
                expected: q,
                got: p.len(),
            });
        }
        if let Some((index, &value)) = p
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::InvalidEntry { index, value });
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > crate::channel::SUM_TOLERANCE {
            return Err(Error::BadSum(sum));
        }
        Ok(Self::normalized(alphabet, p))
    }

    pub(crate) fn normalized(alphabet: Alphabet, mut p: Vec<f64>) -> Self {
        let sum: f64 = p.iter().sum();
        p.iter_mut().for_each(|v| *v /= sum);
        Self { alphabet, p }
    }

    /// The point mass P_0 at the zero letter.
    pub fn point_mass(alphabet: Alphabet) -> Self {
        let mut p = vec![0.0; alphabet.q()];
        p[0] = 1.0;
        Self { alphabet, p }
    }

    pub fn uniform(alphabet: Alphabet) -> Self {
        let q = alphabet.q();
        Self {
            alphabet,
            p: vec![1.0 / q as f64; q],
        }
    }

    pub fn of_channel(channel: &ChannelDist) -> Self {
        Self {
            alphabet: channel.alphabet(),
            p: channel.probs().to_vec(),
        }
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn probs(&self) -> &[f64] {
        &self.p
    }
}

/// Shannon entropy with the 0·log 0 = 0 convention.
pub fn entropy(p: &ProbDist, base: f64) -> f64 {
    entropy_of(&p.p, base)
}

pub(crate) fn entropy_of(p: &[f64], base: f64) -> f64 {
    -p.iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| v * v.ln())
        .sum::<f64>()
        / base.ln()
}

/// Information divergence D(Q‖P); +∞ when Q puts mass where P has none.
pub fn divergence(q: &ProbDist, p: &ProbDist, base: f64) -> Result<f64> {
    if q.alphabet != p.alphabet {
        return Err(Error::AlphabetMismatch(q.alphabet.q(), p.alphabet.q()));
    }
    Ok(divergence_of(&q.p, &p.p, base))
}

pub(crate) fn divergence_of(q: &[f64], p: &[f64], base: f64) -> f64 {
    let mut acc = 0.0;
    for (&a, &b) in q.iter().zip(p) {
        if a > 0.0 {
            if b <= 0.0 {
                return f64::INFINITY;
            }
            acc += a * (a / b).ln();
        }
    }
    (acc / base.ln()).max(0.0)
}

/// 1 − H_d(W); negative values mean the bound is vacuous.
pub fn capacity_lower_bound(channel: &ChannelDist) -> f64 {
    1.0 - entropy_of(channel.probs(), channel.alphabet().d() as f64)
}

/// Converts a base-d exponent or rate to base q = d².
#[inline]
pub fn base_d_to_q(value: f64) -> f64 {
    value / 2.0
}

/// What accompanies an exponent value: the optimizing ρ or distribution.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    None,
    Rho(f64),
    Dist(ProbDist),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExponentResult {
    pub rate: f64,
    /// Base-d exponent, clamped at zero; may be +∞.
    pub value: f64,
    pub witness: Witness,
}

impl ExponentResult {
    pub(crate) fn new(rate: f64, value: f64, witness: Witness) -> Self {
        Self {
            rate,
            value: value.max(0.0),
            witness,
        }
    }

    pub fn rho(&self) -> Option<f64> {
        match self.witness {
            Witness::Rho(r) => Some(r),
            _ => None,
        }
    }

    pub fn dist(&self) -> Option<&ProbDist> {
        match &self.witness {
            Witness::Dist(p) => Some(p),
            _ => None,
        }
    }
}

/// Which bound attains [`best_exponent`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    RandomCoding,
    Expurgation,
    /// Both bounds vanish.
    None,
}

impl Winner {
    pub fn as_str(&self) -> &'static str {
        match self {
            Winner::RandomCoding => "rc",
            Winner::Expurgation => "ex",
            Winner::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BestExponent {
    pub rate: f64,
    pub value: f64,
    pub random_coding: ExponentResult,
    pub expurgation: ExponentResult,
    pub winner: Winner,
}

/// Pointwise maximum of the random-coding and expurgation bounds.
pub fn best_exponent(rate: f64, channel: &ChannelDist) -> BestExponent {
    let random_coding = random_coding_exponent_param(rate, channel);
    let expurgation = expurgation_exponent_sup(rate, channel);
    let (value, winner) = if expurgation.value > random_coding.value {
        (expurgation.value, Winner::Expurgation)
    } else if random_coding.value > 0.0 {
        (random_coding.value, Winner::RandomCoding)
    } else {
        (0.0, Winner::None)
    };
    BestExponent {
        rate,
        value,
        random_coding,
        expurgation,
        winner,
    }
}

/// Bounds are vacuous when 1 − H_d(W) ≤ 0.
pub(crate) fn is_degenerate(channel: &ChannelDist) -> bool {
    capacity_lower_bound(channel) <= 0.0
}
