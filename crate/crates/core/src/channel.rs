//! The error alphabet X = (F_d)², additive channels on it, W-weights and
//! the Bhattacharyya structure used by the expurgation bounds.
//!
//! Letters are indexed canonically as `a·d + b` for the pair `(a, b)`, so for
//! d = 3 the order is 00, 01, 02, 10, 11, 12, 20, 21, 22. Every file format
//! in the crate uses this order.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on the sum of a user-supplied distribution.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Default eigenvalue tolerance for [`is_nonneg_definite`], relative to the
/// matrix 1-norm.
pub const NND_TOLERANCE: f64 = 1e-10;

/// The additive group (F_d)² with q = d² elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    d: u32,
}

impl Alphabet {
    pub fn new(d: u32) -> Result<Self> {
        if !is_prime(d) {
            return Err(Error::NotPrime(d));
        }
        Ok(Self { d })
    }

    #[inline]
    pub fn d(&self) -> u32 {
        self.d
    }

    #[inline]
    pub fn q(&self) -> usize {
        (self.d * self.d) as usize
    }

    pub fn element(&self, index: usize) -> GroupElement {
        debug_assert!(index < self.q());
        let d = self.d as usize;
        GroupElement {
            a: (index / d) as u32,
            b: (index % d) as u32,
        }
    }

    pub fn index(&self, x: GroupElement) -> usize {
        (x.a * self.d + x.b) as usize
    }

    /// Canonical index of `x + y`.
    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        let d = self.d as usize;
        ((x / d + y / d) % d) * d + (x % d + y % d) % d
    }

    /// Canonical index of `x − y`.
    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        let d = self.d as usize;
        ((x / d + d - y / d) % d) * d + (x % d + d - y % d) % d
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.sub(0, x)
    }

    /// Logarithm in the canonical base d.
    #[inline]
    pub fn log(&self, x: f64) -> f64 {
        x.ln() / (self.d as f64).ln()
    }
}

/// A letter of X, the pair `(a, b)` of residues mod d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub a: u32,
    pub b: u32,
}

fn is_prime(d: u32) -> bool {
    if d < 2 {
        return false;
    }
    let mut f = 2u32;
    while f.saturating_mul(f) <= d {
        if d.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// The probability distribution W on X induced by a QDMC; it is the whole
/// channel model.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelDist {
    alphabet: Alphabet,
    w: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct ChannelFile {
    d: u32,
    w: Vec<f64>,
}

impl ChannelDist {
    /// The depolarizing channel: W(0) = 1 − p, W(x) = p/(q − 1) otherwise.
    pub fn depolarizing(d: u32, p: f64) -> Result<Self> {
        let alphabet = Alphabet::new(d)?;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        let q = alphabet.q();
        let mut w = vec![p / (q - 1) as f64; q];
        w[0] = 1.0 - p;
        Ok(Self { alphabet, w })
    }

    /// Validates and renormalizes a distribution given in canonical index order.
    pub fn custom(d: u32, probs: &[f64]) -> Result<Self> {
        let alphabet = Alphabet::new(d)?;
        let q = alphabet.q();
        if probs.len() != q {
            return Err(Error::WrongLength {
                expected: q,
                got: probs.len(),
            });
        }
        if let Some((index, &value)) = probs
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::InvalidEntry { index, value });
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::BadSum(sum));
        }
        let w = probs.iter().map(|v| v / sum).collect();
        Ok(Self { alphabet, w })
    }

    pub fn noiseless(d: u32) -> Result<Self> {
        Self::depolarizing(d, 0.0)
    }

    pub fn uniform(d: u32) -> Result<Self> {
        let q = Alphabet::new(d)?.q();
        Self::custom(d, &vec![1.0 / q as f64; q])
    }

    /// Parses the `{"d": <int>, "w": [...]}` channel file format.
    pub fn from_json(text: &str) -> std::result::Result<Self, ChannelFileError> {
        let file: ChannelFile = serde_json::from_str(text)?;
        Ok(Self::custom(file.d, &file.w)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ChannelFile {
            d: self.alphabet.d,
            w: self.w.clone(),
        })
        .expect("channel serializes")
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn probs(&self) -> &[f64] {
        &self.w
    }

    #[inline]
    pub fn prob(&self, x: usize) -> f64 {
        self.w[x]
    }

    /// Σ_e √(W(e)W(e − x)), the Bhattacharyya overlap of W with its shift by x.
    pub fn overlap(&self, x: usize) -> f64 {
        let a = self.alphabet;
        (0..a.q())
            .map(|e| (self.w[e] * self.w[a.sub(e, x)]).sqrt())
            .sum()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ChannelFileError {
    #[error("malformed channel file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// Per-letter W-weights |x|_W = −log_d Σ_e √(W(e)W(e − x)), +∞ where the
/// overlap vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct WWeightTable {
    alphabet: Alphabet,
    weights: Vec<f64>,
}

impl WWeightTable {
    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    #[inline]
    pub fn weight(&self, x: usize) -> f64 {
        self.weights[x]
    }

    /// Letters of finite weight; always contains 0.
    pub fn finite_support(&self) -> Vec<usize> {
        (0..self.weights.len())
            .filter(|&x| self.weights[x].is_finite())
            .collect()
    }
}

pub fn w_weight_table(channel: &ChannelDist) -> WWeightTable {
    let a = channel.alphabet();
    let weights = (0..a.q())
        .map(|x| {
            if x == 0 {
                return 0.0;
            }
            let s = channel.overlap(x);
            if s <= 0.0 {
                f64::INFINITY
            } else {
                // The overlap is at most 1 by Cauchy–Schwarz; rounding can push it past.
                (-a.log(s)).max(0.0)
            }
        })
        .collect();
    WWeightTable {
        alphabet: a,
        weights,
    }
}

/// The q×q matrix `[(Σ_e √(W(x − e)W(x′ − e)))^{1/ρ}]`.
pub fn bhattacharyya_matrix(channel: &ChannelDist, rho: f64) -> Result<DMatrix<f64>> {
    if rho.is_nan() || rho < 1.0 {
        return Err(Error::OutOfRange {
            name: "rho",
            value: rho,
        });
    }
    let a = channel.alphabet();
    let q = a.q();
    let w = channel.probs();
    let mut m = DMatrix::zeros(q, q);
    for x in 0..q {
        m[(x, x)] = 1.0;
        for y in (x + 1)..q {
            let s: f64 = (0..q)
                .map(|e| (w[a.sub(x, e)] * w[a.sub(y, e)]).sqrt())
                .sum();
            let v = s.powf(1.0 / rho);
            m[(x, y)] = v;
            m[(y, x)] = v;
        }
    }
    Ok(m)
}

/// True when all off-diagonal overlaps agree within `tol`.
pub fn is_equidistant(channel: &ChannelDist, tol: f64) -> bool {
    let m = bhattacharyya_matrix(channel, 1.0).expect("rho = 1 is valid");
    let q = m.nrows();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for x in 0..q {
        for y in 0..q {
            if x != y {
                lo = lo.min(m[(x, y)]);
                hi = hi.max(m[(x, y)]);
            }
        }
    }
    q < 2 || hi - lo <= tol
}

/// Smallest eigenvalue of the (symmetric) Bhattacharyya matrix at `rho`.
pub fn min_eigenvalue(channel: &ChannelDist, rho: f64) -> Result<f64> {
    let m = bhattacharyya_matrix(channel, rho)?;
    let eig = SymmetricEigen::new(m);
    Ok(eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min))
}

/// True iff the minimum eigenvalue is at least `−tol·‖M‖₁`.
pub fn is_nonneg_definite(channel: &ChannelDist, rho: f64, tol: f64) -> Result<bool> {
    let m = bhattacharyya_matrix(channel, rho)?;
    let norm1 = (0..m.ncols())
        .map(|j| m.column(j).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let eig = SymmetricEigen::new(m);
    let min = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    Ok(min >= -tol * norm1)
}

/// True iff every nonzero letter has W-weight above `tol`.
pub fn is_indivisible(channel: &ChannelDist, tol: f64) -> bool {
    let table = w_weight_table(channel);
    table.weights()[1..].iter().all(|&w| w > tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE_D3: [f64; 9] = [0.0, 0.49, 0.0, 0.01, 0.01, 0.0, 0.49, 0.0, 0.0];
    // γ_4(0.1), evaluated at 30 digits.
    const GAMMA_4_01: f64 = 0.413_076_828_180_442_1;

    #[test]
    fn primality() {
        assert!(Alphabet::new(2).is_ok());
        assert!(Alphabet::new(7).is_ok());
        assert_eq!(Alphabet::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Alphabet::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Alphabet::new(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn group_arithmetic() {
        let a = Alphabet::new(3).unwrap();
        for x in 0..9 {
            assert_eq!(a.sub(x, x), 0);
            assert_eq!(a.add(x, a.neg(x)), 0);
            assert_eq!(a.index(a.element(x)), x);
            for y in 0..9 {
                assert_eq!(a.sub(a.add(x, y), y), x);
            }
        }
        // (1,2) + (2,2) = (0,1)
        assert_eq!(a.add(5, 8), 1);
    }

    #[test]
    fn depolarizing_entries() {
        let w = ChannelDist::depolarizing(2, 0.0).unwrap();
        assert_eq!(w.probs(), &[1.0, 0.0, 0.0, 0.0]);
        let w = ChannelDist::depolarizing(2, 0.3).unwrap();
        assert!((w.prob(0) - 0.7).abs() < 1e-15);
        assert!(w.probs()[1..].iter().all(|&v| (v - 0.1).abs() < 1e-15));
        let w = ChannelDist::depolarizing(3, 0.08).unwrap();
        assert!((w.prob(0) - 0.92).abs() < 1e-15);
        assert!(w.probs()[1..].iter().all(|&v| (v - 0.01).abs() < 1e-15));
        assert!(ChannelDist::depolarizing(4, 0.1).is_err());
        assert!(ChannelDist::depolarizing(2, 1.2).is_err());
        assert!(ChannelDist::depolarizing(2, -0.1).is_err());
    }

    #[test]
    fn custom_validation() {
        let w = ChannelDist::custom(3, &EXAMPLE_D3).unwrap();
        assert!((w.probs().iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert_eq!(w.prob(1), 0.49);
        let u = ChannelDist::custom(2, &[0.25; 4]).unwrap();
        assert_eq!(u, ChannelDist::uniform(2).unwrap());
        assert!(matches!(
            ChannelDist::custom(2, &[0.5, 0.5, 0.0]),
            Err(Error::WrongLength {
                expected: 4,
                got: 3
            })
        ));
        assert!(matches!(
            ChannelDist::custom(2, &[1.5, -0.5, 0.0, 0.0]),
            Err(Error::InvalidEntry { index: 1, .. })
        ));
        assert!(matches!(
            ChannelDist::custom(2, &[0.5, 0.4, 0.0, 0.0]),
            Err(Error::BadSum(_))
        ));
    }

    #[test]
    fn channel_file_round_trip() {
        let text = r#"{"d": 3, "w": [0, 0.49, 0, 0.01, 0.01, 0, 0.49, 0, 0]}"#;
        let w = ChannelDist::from_json(text).unwrap();
        assert_eq!(w, ChannelDist::custom(3, &EXAMPLE_D3).unwrap());
        assert_eq!(ChannelDist::from_json(&w.to_json()).unwrap(), w);
        assert!(ChannelDist::from_json(r#"{"d": 2}"#).is_err());
        assert!(ChannelDist::from_json(r#"{"d": 2, "w": [1, 0]}"#).is_err());
    }

    #[test]
    fn w_weights_of_trivial_channels() {
        let t = w_weight_table(&ChannelDist::uniform(2).unwrap());
        assert!(t.weights().iter().all(|&w| w.abs() < 1e-15));
        let t = w_weight_table(&ChannelDist::noiseless(2).unwrap());
        assert_eq!(t.weight(0), 0.0);
        assert!(t.weights()[1..].iter().all(|w| w.is_infinite()));
        assert_eq!(t.finite_support(), vec![0]);
    }

    #[test]
    fn w_weights_of_depolarizing() {
        let p: f64 = 0.1;
        // Four-term overlap: two cross terms with W(0) and two between nonzero letters.
        let four_term = 2.0 * ((1.0 - p) * p / 3.0).sqrt() + 2.0 * p / 3.0;
        assert!((four_term - GAMMA_4_01).abs() < 1e-15);
        let t = w_weight_table(&ChannelDist::depolarizing(2, p).unwrap());
        for x in 1..4 {
            assert!((t.weight(x) - 1.275_517_961_361_889_6).abs() < 1e-12);
        }
    }

    #[test]
    fn bhattacharyya_matrix_examples() {
        let m = bhattacharyya_matrix(&ChannelDist::noiseless(2).unwrap(), 1.0).unwrap();
        assert_eq!(m, DMatrix::identity(4, 4));
        let m = bhattacharyya_matrix(&ChannelDist::depolarizing(2, 0.1).unwrap(), 1.0).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let want = if x == y { 1.0 } else { GAMMA_4_01 };
                assert!((m[(x, y)] - want).abs() < 1e-12);
            }
        }
        assert!(bhattacharyya_matrix(&ChannelDist::uniform(2).unwrap(), 0.5).is_err());
    }

    #[test]
    fn predicates() {
        let ex = ChannelDist::custom(3, &EXAMPLE_D3).unwrap();
        assert!(!is_equidistant(&ex, 1e-9));
        assert!(is_nonneg_definite(&ex, 1.0, NND_TOLERANCE).unwrap());
        assert!(!is_nonneg_definite(&ex, 1.5, NND_TOLERANCE).unwrap());
        assert!(is_indivisible(&ex, 1e-12));

        for d in [2, 3, 5] {
            for p in [0.0, 0.01, 0.3, 0.9] {
                let w = ChannelDist::depolarizing(d, p).unwrap();
                assert!(is_equidistant(&w, 1e-12), "d={d} p={p}");
            }
        }
        let u = ChannelDist::uniform(3).unwrap();
        assert!(is_equidistant(&u, 1e-12));
        assert!(!is_indivisible(&u, 1e-12));

        let noiseless = ChannelDist::noiseless(2).unwrap();
        for rho in [1.0, 2.0, 50.0] {
            assert!(is_nonneg_definite(&noiseless, rho, NND_TOLERANCE).unwrap());
        }
        assert!(is_indivisible(&noiseless, 1e-12));
        assert!(is_indivisible(
            &ChannelDist::depolarizing(2, 0.1).unwrap(),
            1e-12
        ));
        assert!(is_nonneg_definite(&ex, 0.9, NND_TOLERANCE).is_err());
    }
}
