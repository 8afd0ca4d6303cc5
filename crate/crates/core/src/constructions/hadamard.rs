//! Hadamard matrices and the two-shell design they induce.

use crate::constructions::field::{prime_power, FiniteField};
use crate::design::WeightedDesign;
use crate::error::{Error, Result};
use crate::scalar::rational;
use crate::word::BinaryWord;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardMatrix {
    entries: Vec<Vec<i8>>,
}

impl HadamardMatrix {
    /// Validates `H H^T = h I` over `{+1, -1}` entries.
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        let h = entries.len();
        if h == 0 || entries.iter().any(|r| r.len() != h) {
            return Err(Error::InvalidHadamard("matrix must be square and nonempty".into()));
        }
        if entries.iter().flatten().any(|&x| x != 1 && x != -1) {
            return Err(Error::InvalidHadamard("entries must be +1 or -1".into()));
        }
        for i in 0..h {
            for j in 0..i {
                let dot: i64 = (0..h).map(|c| (entries[i][c] * entries[j][c]) as i64).sum();
                if dot != 0 {
                    return Err(Error::InvalidHadamard(format!("rows {j} and {i} are not orthogonal")));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.entries
    }

    /// Sign changes making the first row and the first column all `+1`.
    pub fn normalized(&self) -> Self {
        let mut e = self.entries.clone();
        let h = e.len();
        for c in 0..h {
            if e[0][c] < 0 {
                for row in e.iter_mut() {
                    row[c] = -row[c];
                }
            }
        }
        for row in e.iter_mut() {
            if row[0] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
        }
        Self { entries: e }
    }

    pub fn is_normalized(&self) -> bool {
        self.entries[0].iter().all(|&x| x == 1) && self.entries.iter().all(|r| r[0] == 1)
    }
}

/// Sylvester matrix of order `2^k`.
pub fn sylvester_hadamard(k: u32) -> HadamardMatrix {
    let mut m: Vec<Vec<i8>> = vec![vec![1]];
    for _ in 0..k {
        let h = m.len();
        let mut next = vec![vec![0i8; 2 * h]; 2 * h];
        for i in 0..h {
            for j in 0..h {
                next[i][j] = m[i][j];
                next[i][j + h] = m[i][j];
                next[i + h][j] = m[i][j];
                next[i + h][j + h] = -m[i][j];
            }
        }
        m = next;
    }
    HadamardMatrix::new(m).expect("Sylvester construction")
}

/// Paley matrix of order `q + 1` for a prime power `q = 3 mod 4`.
pub fn paley_hadamard(q: u64) -> Result<HadamardMatrix> {
    let qs = q as usize;
    if q % 4 != 3 || prime_power(qs).is_none() {
        return Err(Error::BadModulus(q));
    }
    let f = FiniteField::new(qs).ok_or(Error::BadModulus(q))?;
    let sq = f.squares();
    let h = qs + 1;
    // H = I + S with S skew: S[0][j] = 1, S[i][0] = -1, S[a+1][b+1] = chi(b - a)
    let mut m = vec![vec![0i8; h]; h];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let s = match (i, j) {
                (0, 0) => 0,
                (0, _) => 1,
                (_, 0) => -1,
                _ => f.chi(&sq, f.sub(j - 1, i - 1)),
            };
            *x = if i == j { 1 } else { s };
        }
    }
    HadamardMatrix::new(m)
}

/// Tight design in H(2m, 2) from a Hadamard matrix of order `m + 1`, `m = 3 mod 4`.
///
/// Shell 2 holds the `m` coordinate pairs `{2i, 2i+1}`; shell `m` holds one
/// word per row of the normalised matrix, taking `(1,0)` on pair `i` for a `+`
/// in column `i + 1` and `(0,1)` for a `-`.
pub fn hadamard_design(h: &HadamardMatrix) -> Result<WeightedDesign> {
    let order = h.order();
    if order < 4 || (order - 1) % 4 != 3 {
        return Err(Error::BadOrder(format!("order {order} is not m + 1 with m = 3 mod 4")));
    }
    let m = order - 1;
    let n = 2 * m;
    let normal = h.normalized();
    let mut points = Vec::with_capacity(n + 1);
    let mut weights: Vec<Rational> = Vec::with_capacity(n + 1);
    for i in 0..m {
        points.push(BinaryWord::from_support(n, [2 * i, 2 * i + 1]));
        weights.push(rational(1, 1));
    }
    let heavy = rational(8, n as i64 + 2);
    for row in normal.rows() {
        let support = (0..m).map(|i| if row[i + 1] > 0 { 2 * i } else { 2 * i + 1 });
        points.push(BinaryWord::from_support(n, support));
        weights.push(heavy.clone());
    }
    WeightedDesign::new(n, points, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylvester_orders() {
        assert_eq!(sylvester_hadamard(0).rows(), &[vec![1]]);
        for k in 1..=5 {
            assert_eq!(sylvester_hadamard(k).order(), 1 << k);
        }
    }

    #[test]
    fn paley_orders() {
        assert_eq!(paley_hadamard(3).unwrap().order(), 4);
        assert_eq!(paley_hadamard(11).unwrap().order(), 12);
        assert_eq!(paley_hadamard(27).unwrap().order(), 28);
        assert_eq!(paley_hadamard(5), Err(Error::BadModulus(5)));
        assert_eq!(paley_hadamard(15), Err(Error::BadModulus(15)));
    }

    #[test]
    fn normalization_keeps_orthogonality() {
        let h = paley_hadamard(7).unwrap().normalized();
        assert!(h.is_normalized());
        assert!(HadamardMatrix::new(h.rows().to_vec()).is_ok());
    }

    #[test]
    fn rejects_non_hadamard() {
        assert!(HadamardMatrix::new(vec![vec![1, 1], vec![1, 1]]).is_err());
        assert!(HadamardMatrix::new(vec![vec![1, 0], vec![1, -1]]).is_err());
    }

    #[test]
    fn design_shape() {
        let d = hadamard_design(&sylvester_hadamard(2)).unwrap();
        assert_eq!(d.n(), 6);
        assert_eq!(d.len(), 7);
        assert!(hadamard_design(&sylvester_hadamard(1)).is_err());
        assert!(hadamard_design(&sylvester_hadamard(0)).is_err());
    }
}
