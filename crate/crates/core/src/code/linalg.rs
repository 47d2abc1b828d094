//! Row reduction over the prime field F_d.

pub(crate) fn inv_mod(a: u32, d: u32) -> u32 {
    // Fermat: a^(d−2) mod d.
    let (mut base, mut exp, mut acc) = (a as u64 % d as u64, d - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % d as u64;
        }
        base = base * base % d as u64;
        exp >>= 1;
    }
    acc as u32
}

/// A subspace of F_d^len kept in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Rref {
    pub d: u32,
    pub len: usize,
    pub rows: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn empty(d: u32, len: usize) -> Self {
        Self {
            d,
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(d: u32, len: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut r = Self::empty(d, len);
        for row in rows {
            r.insert(row);
        }
        r
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after elimination against the basis; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        let d = self.d;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f != 0 {
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = (*vi + (d - f) * ri) % d;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        let d = self.d;
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[c], d);
        v.iter_mut().for_each(|x| *x = *x * inv % d);
        for row in &mut self.rows {
            let f = row[c];
            if f != 0 {
                for (ri, vi) in row.iter_mut().zip(&v) {
                    *ri = (*ri + (d - f) * vi) % d;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.rows.insert(at, v);
        self.pivots.insert(at, c);
        true
    }

    /// Basis of {y : row·y = 0 for every row}.
    pub fn null_space(&self) -> Rref {
        let d = self.d;
        let free = (0..self.len).filter(|c| !self.pivots.contains(c));
        let vecs = free.map(|f| {
            let mut v = vec![0u32; self.len];
            v[f] = 1;
            for (row, &c) in self.rows.iter().zip(&self.pivots) {
                v[c] = (d - row[f]) % d;
            }
            v
        });
        Rref::from_rows(d, self.len, vecs.collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for d in [2u32, 3, 5, 7, 11] {
            for a in 1..d {
                assert_eq!(a * inv_mod(a, d) % d, 1);
            }
        }
    }

    #[test]
    fn rank_and_null_space() {
        let r = Rref::from_rows(
            3,
            4,
            vec![vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 1, 1]],
        );
        // Second row is twice the first.
        assert_eq!(r.dim(), 2);
        let ns = r.null_space();
        assert_eq!(ns.dim(), 2);
        for y in &ns.rows {
            for row in &r.rows {
                let dot: u32 = row.iter().zip(y).map(|(a, b)| a * b).sum::<u32>() % 3;
                assert_eq!(dot, 0);
            }
        }
        assert!(r.contains(&[1, 2, 1, 2]));
        assert!(!r.contains(&[1, 0, 0, 0]));
    }
}
