use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::Rref;
use super::vector::SymplecticVector;
use crate::channel::Alphabet;
use crate::error::{Error, Result};

/// Largest enumerable instance, in words.
pub const ENUMERATION_CAP: f64 = (1u64 << 24) as f64;

/// An F_d-linear code C ⊆ X^n, held as a reduced basis of F_d^{2n}.
///
/// The F_d-dimension is always even, 2k, so that |C| = q^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveCode {
    alphabet: Alphabet,
    n: usize,
    basis: Rref,
}

impl AdditiveCode {
    pub fn from_generators(
        alphabet: Alphabet,
        n: usize,
        generators: &[SymplecticVector],
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadCodeParams { n, k: 0 });
        }
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch(n, g.len()));
        }
        let basis = Rref::from_rows(
            alphabet.d(),
            2 * n,
            generators.iter().map(|g| g.to_flat()).collect::<Vec<_>>(),
        );
        Self::from_basis(alphabet, n, basis)
    }

    fn from_basis(alphabet: Alphabet, n: usize, basis: Rref) -> Result<Self> {
        if !basis.dim().is_multiple_of(2) {
            return Err(Error::OddDimension(basis.dim()));
        }
        Ok(Self { alphabet, n, basis })
    }

    /// The code {0}.
    pub fn zero(alphabet: Alphabet, n: usize) -> Result<Self> {
        Self::from_generators(alphabet, n, &[])
    }

    /// The whole space X^n.
    pub fn full(alphabet: Alphabet, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadCodeParams { n, k: n });
        }
        let rows = (0..2 * n).map(|i| {
            let mut v = vec![0u32; 2 * n];
            v[i] = 1;
            v
        });
        Self::from_basis(
            alphabet,
            n,
            Rref::from_rows(alphabet.d(), 2 * n, rows.collect::<Vec<_>>()),
        )
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// log_q |C|.
    pub fn k(&self) -> usize {
        self.basis.dim() / 2
    }

    /// Dimension over F_d, 2k.
    pub fn dimension(&self) -> usize {
        self.basis.dim()
    }

    /// R(C) = k/n.
    pub fn rate(&self) -> f64 {
        self.k() as f64 / self.n as f64
    }

    /// Rate of the associated stabilizer code, 2k/n − 1.
    pub fn quantum_rate(&self) -> f64 {
        2.0 * self.rate() - 1.0
    }

    pub fn generators(&self) -> Vec<SymplecticVector> {
        self.basis
            .rows
            .iter()
            .map(|r| SymplecticVector::from_flat(self.alphabet, r))
            .collect()
    }

    pub(crate) fn basis_rows(&self) -> &[Vec<u32>] {
        &self.basis.rows
    }

    pub fn contains(&self, v: &SymplecticVector) -> bool {
        v.len() == self.n && self.basis.contains(&v.to_flat())
    }

    /// The symplectic dual C⊥.
    pub fn dual(&self) -> AdditiveCode {
        Self::from_basis(self.alphabet, self.n, symplectic_complement(&self.basis))
            .expect("symplectic complement of an even-dimensional space is even")
    }

    /// True iff C⊥ ⊆ C.
    pub fn is_dual_containing(&self) -> bool {
        self.dual()
            .basis
            .rows
            .iter()
            .all(|r| self.basis.contains(r))
    }

    /// q^k, the number of codewords.
    pub fn size(&self) -> f64 {
        (self.alphabet.d() as f64).powi(self.dimension() as i32)
    }

    /// Visits every codeword as a list of canonical letter indices.
    pub fn for_each_codeword(&self, mut visit: impl FnMut(&[usize])) -> Result<()> {
        if self.size() > ENUMERATION_CAP {
            return Err(Error::TooLarge {
                what: "q^k",
                size: self.size(),
            });
        }
        let d = self.alphabet.d();
        let rows = &self.basis.rows;
        let mut coeffs = vec![0u32; rows.len()];
        let mut acc = vec![0u32; 2 * self.n];
        let mut letters = vec![0usize; self.n];
        loop {
            for (l, c) in letters.iter_mut().zip(acc.chunks_exact(2)) {
                *l = (c[0] * d + c[1]) as usize;
            }
            visit(&letters);
            // Odometer step: bump the lowest coefficient, adding its row each time.
            let mut i = 0;
            loop {
                if i == rows.len() {
                    return Ok(());
                }
                for (a, r) in acc.iter_mut().zip(&rows[i]) {
                    *a = (*a + r) % d;
                }
                coeffs[i] += 1;
                if coeffs[i] < d {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    /// Samples a code with C⊥ ⊆ C and |C| = q^k.
    ///
    /// Grows a random isotropic subspace S of dimension 2(n − k) one vector at
    /// a time, each drawn from S⊥ and rejected if already in S, then returns
    /// C = S⊥. Deterministic for a fixed seed.
    pub fn random_dual_containing(
        alphabet: Alphabet,
        n: usize,
        k: usize,
        seed: u64,
    ) -> Result<Self> {
        if n == 0 || k > n || 2 * k < n {
            return Err(Error::BadCodeParams { n, k });
        }
        let d = alphabet.d();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut stab = Rref::empty(d, 2 * n);
        let target = 2 * (n - k);
        while stab.dim() < target {
            let perp = symplectic_complement(&stab);
            let mut v = vec![0u32; 2 * n];
            for row in &perp.rows {
                let c = rng.gen_range(0..d);
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = (*vi + c * ri) % d;
                }
            }
            stab.insert(v);
        }
        Self::from_basis(alphabet, n, symplectic_complement(&stab))
    }
}

/// {y : (g, y) = 0 for every g in the span}.
fn symplectic_complement(span: &Rref) -> Rref {
    let d = span.d;
    // (g, y) = Σ g_i y_i′ − g_i′ y_i is the linear form with coefficients (−g_i′, g_i).
    let forms = span.rows.iter().map(|g| {
        g.chunks_exact(2)
            .flat_map(|c| [(d - c[1]) % d, c[0]])
            .collect::<Vec<u32>>()
    });
    Rref::from_rows(d, span.len, forms.collect::<Vec<_>>()).null_space()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::vector::symplectic_form;

    fn a2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    #[test]
    fn zero_and_full_are_dual() {
        for n in 1..4 {
            let z = AdditiveCode::zero(a2(), n).unwrap();
            let f = AdditiveCode::full(a2(), n).unwrap();
            assert_eq!(z.dual(), f);
            assert_eq!(f.dual(), z);
            assert!(f.is_dual_containing());
            assert!(!z.is_dual_containing());
        }
    }

    #[test]
    fn odd_dimension_rejected() {
        let v = SymplecticVector::from_letters(a2(), &[1, 0]).unwrap();
        assert_eq!(
            AdditiveCode::from_generators(a2(), 2, &[v]),
            Err(Error::OddDimension(1))
        );
    }

    #[test]
    fn random_code_parameters() {
        for d in [2, 3] {
            let a = Alphabet::new(d).unwrap();
            for (n, k) in [(2, 1), (3, 2), (4, 2), (5, 3), (4, 4)] {
                let c = AdditiveCode::random_dual_containing(a, n, k, 5).unwrap();
                assert_eq!(c.k(), k);
                assert_eq!(c.dual().k(), n - k);
                assert!(c.is_dual_containing());
                assert_eq!(c.dual().dual(), c);
            }
        }
        assert!(AdditiveCode::random_dual_containing(a2(), 4, 1, 0).is_err());
        assert!(AdditiveCode::random_dual_containing(a2(), 4, 5, 0).is_err());
        assert_eq!(
            AdditiveCode::random_dual_containing(a2(), 3, 3, 9).unwrap(),
            AdditiveCode::full(a2(), 3).unwrap()
        );
    }

    #[test]
    fn seeded_sampling_is_deterministic() {
        let c1 = AdditiveCode::random_dual_containing(a2(), 5, 3, 42).unwrap();
        let c2 = AdditiveCode::random_dual_containing(a2(), 5, 3, 42).unwrap();
        assert_eq!(c1.generators(), c2.generators());
    }

    #[test]
    fn self_dual_n2_exhaustive() {
        let c = AdditiveCode::random_dual_containing(a2(), 2, 1, 1).unwrap();
        let mut words = Vec::new();
        c.for_each_codeword(|w| words.push(w.to_vec())).unwrap();
        assert_eq!(words.len(), 4);
        // Self-dual: every pair of codewords is orthogonal, and C⊥ = C.
        for x in &words {
            for y in &words {
                let vx = SymplecticVector::from_letters(a2(), x).unwrap();
                let vy = SymplecticVector::from_letters(a2(), y).unwrap();
                assert_eq!(symplectic_form(&vx, &vy).unwrap(), 0);
            }
        }
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn codeword_enumeration_is_complete_and_distinct() {
        let a = Alphabet::new(3).unwrap();
        let c = AdditiveCode::random_dual_containing(a, 3, 2, 7).unwrap();
        let mut seen = std::collections::HashSet::new();
        c.for_each_codeword(|w| {
            assert!(c.contains(&SymplecticVector::from_letters(a, w).unwrap()));
            seen.insert(w.to_vec());
        })
        .unwrap();
        assert_eq!(seen.len(), 81);
    }
}
