use crate::channel::{Alphabet, GroupElement};
use crate::error::{Error, Result};

/// A word of X^n, the i-th coordinate read as the pair (x_i, x_i′).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    alphabet: Alphabet,
    coords: Vec<GroupElement>,
}

impl SymplecticVector {
    pub fn new(alphabet: Alphabet, coords: Vec<GroupElement>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::OutOfRange {
                name: "n",
                value: 0.0,
            });
        }
        let d = alphabet.d();
        if let Some(i) = coords.iter().position(|g| g.a >= d || g.b >= d) {
            return Err(Error::OutOfRange {
                name: "coordinate",
                value: i as f64,
            });
        }
        Ok(Self { alphabet, coords })
    }

    /// Builds a vector from canonical letter indices.
    pub fn from_letters(alphabet: Alphabet, letters: &[usize]) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&x| x >= alphabet.q()) {
            return Err(Error::OutOfRange {
                name: "letter",
                value: bad as f64,
            });
        }
        Self::new(
            alphabet,
            letters.iter().map(|&x| alphabet.element(x)).collect(),
        )
    }

    pub(crate) fn from_flat(alphabet: Alphabet, flat: &[u32]) -> Self {
        let coords = flat
            .chunks_exact(2)
            .map(|c| GroupElement { a: c[0], b: c[1] })
            .collect();
        Self { alphabet, coords }
    }

    /// Layout `[x_1, x_1′, x_2, x_2′, …]`.
    pub(crate) fn to_flat(&self) -> Vec<u32> {
        self.coords.iter().flat_map(|g| [g.a, g.b]).collect()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[GroupElement] {
        &self.coords
    }

    pub fn letters(&self) -> Vec<usize> {
        self.coords
            .iter()
            .map(|&g| self.alphabet.index(g))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        let d = self.alphabet.d();
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| GroupElement {
                a: (x.a + y.a) % d,
                b: (x.b + y.b) % d,
            })
            .collect();
        Ok(Self {
            alphabet: self.alphabet,
            coords,
        })
    }
}

/// `(x, y) = Σ_i x_i·y_i′ − x_i′·y_i` in F_d.
pub fn symplectic_form(x: &SymplecticVector, y: &SymplecticVector) -> Result<u32> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(symplectic_flat(&x.to_flat(), &y.to_flat(), x.alphabet.d()))
}

pub(crate) fn symplectic_flat(x: &[u32], y: &[u32], d: u32) -> u32 {
    let mut acc = 0u32;
    for (xc, yc) in x.chunks_exact(2).zip(y.chunks_exact(2)) {
        acc = (acc + xc[0] * yc[1] + (d - xc[1]) * yc[0]) % d;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vec(a: Alphabet, n: usize, rng: &mut ChaCha8Rng) -> SymplecticVector {
        let letters: Vec<usize> = (0..n).map(|_| rng.gen_range(0..a.q())).collect();
        SymplecticVector::from_letters(a, &letters).unwrap()
    }

    #[test]
    fn alternating_and_basic_value() {
        let a = Alphabet::new(2).unwrap();
        let x = SymplecticVector::new(a, vec![GroupElement { a: 1, b: 0 }]).unwrap();
        let y = SymplecticVector::new(a, vec![GroupElement { a: 0, b: 1 }]).unwrap();
        assert_eq!(symplectic_form(&x, &y).unwrap(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in [2, 3, 5] {
            let a = Alphabet::new(d).unwrap();
            for _ in 0..50 {
                let v = random_vec(a, 4, &mut rng);
                assert_eq!(symplectic_form(&v, &v).unwrap(), 0);
            }
        }
    }

    #[test]
    fn bilinear_and_skew() {
        let a = Alphabet::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let (x, y, z) = (
                random_vec(a, 2, &mut rng),
                random_vec(a, 2, &mut rng),
                random_vec(a, 2, &mut rng),
            );
            let lhs = symplectic_form(&x, &y.add(&z).unwrap()).unwrap();
            let rhs = (symplectic_form(&x, &y).unwrap() + symplectic_form(&x, &z).unwrap()) % 3;
            assert_eq!(lhs, rhs);
            let xy = symplectic_form(&x, &y).unwrap();
            let yx = symplectic_form(&y, &x).unwrap();
            assert_eq!((xy + yx) % 3, 0);
        }
    }

    #[test]
    fn errors() {
        let a = Alphabet::new(2).unwrap();
        let x = SymplecticVector::from_letters(a, &[1, 2]).unwrap();
        let y = SymplecticVector::from_letters(a, &[1]).unwrap();
        assert!(symplectic_form(&x, &y).is_err());
        assert!(SymplecticVector::from_letters(a, &[4]).is_err());
        assert!(SymplecticVector::from_letters(a, &[]).is_err());
    }
}
