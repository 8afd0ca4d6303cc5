//! Symmetric 2-designs and the tight designs derived from them.

use serde::{Deserialize, Serialize};

use crate::constructions::field::{prime_power, FiniteField};
use crate::constructions::hadamard::HadamardMatrix;
use crate::design::WeightedDesign;
use crate::error::{Error, Result};
use crate::word::{BinaryWord, MAX_LEN};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricDesign {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    /// Each block sorted ascending; blocks in construction order.
    pub blocks: Vec<Vec<usize>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSymmetricDesign(msg.into())
}

impl SymmetricDesign {
    /// Checks every defining property; blocks are sorted on the way in.
    pub fn new(v: usize, k: usize, lambda: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if v == 0 || v > MAX_LEN + 1 {
            return Err(invalid(format!("v = {v} outside 1..=65")));
        }
        if blocks.len() != v {
            return Err(invalid(format!("{} blocks for v = {v}", blocks.len())));
        }
        if lambda * (v - 1) != k * k.saturating_sub(1) {
            return Err(invalid(format!("lambda(v-1) != k(k-1) for ({v},{k},{lambda})")));
        }
        let mut masks = Vec::with_capacity(v);
        for b in blocks.iter_mut() {
            b.sort_unstable();
            b.dedup();
            if b.len() != k || b.iter().any(|&p| p >= v) {
                return Err(invalid(format!("block {b:?} is not a {k}-subset of 0..{v}")));
            }
            masks.push(b.iter().fold(0u128, |m, &p| m | 1 << p));
        }
        for p in 0..v {
            let deg = masks.iter().filter(|m| *m >> p & 1 == 1).count();
            if deg != k {
                return Err(invalid(format!("point {p} lies in {deg} blocks")));
            }
            for q in 0..p {
                let both = masks.iter().filter(|m| *m >> p & 1 == 1 && *m >> q & 1 == 1).count();
                if both != lambda {
                    return Err(invalid(format!("points {q},{p} lie together in {both} blocks")));
                }
            }
        }
        for i in 0..v {
            for j in 0..i {
                if (masks[i] & masks[j]).count_ones() as usize != lambda {
                    return Err(invalid(format!("blocks {j} and {i} do not meet in {lambda} points")));
                }
            }
        }
        Ok(Self { v, k, lambda, blocks })
    }

    pub fn parameters(&self) -> (usize, usize, usize) {
        (self.v, self.k, self.lambda)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let raw: SymmetricDesign = serde_json::from_slice(bytes).map_err(|e| Error::MalformedFile {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        Self::new(raw.v, raw.k, raw.lambda, raw.blocks)
    }
}

/// Points and lines of the projective plane over `GF(q)`.
pub fn projective_plane(q: u64) -> Result<SymmetricDesign> {
    let qs = q as usize;
    let f = (prime_power(qs).is_some() && qs * qs + qs <= MAX_LEN)
        .then(|| FiniteField::new(qs))
        .flatten()
        .ok_or(Error::UnsupportedOrder(q))?;
    // normalised vectors: first nonzero coordinate equals 1
    let mut pts: Vec<[usize; 3]> = Vec::new();
    for a in 0..qs {
        for b in 0..qs {
            pts.push([1, a, b]);
        }
    }
    for b in 0..qs {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    let dot = |x: &[usize; 3], y: &[usize; 3]| {
        (0..3).fold(0, |acc, i| f.add(acc, f.mul(x[i], y[i])))
    };
    let blocks = pts
        .iter()
        .map(|line| (0..pts.len()).filter(|&p| dot(line, &pts[p]) == 0).collect())
        .collect();
    SymmetricDesign::new(qs * qs + qs + 1, qs + 1, 1, blocks)
}

/// Quadratic residue difference set design over `GF(q)`, `q = 3 mod 4`.
pub fn paley_design(q: u64) -> Result<SymmetricDesign> {
    let qs = q as usize;
    if q % 4 != 3 || prime_power(qs).is_none() {
        return Err(Error::BadModulus(q));
    }
    let f = FiniteField::new(qs).ok_or(Error::BadModulus(q))?;
    let sq = f.squares();
    let blocks = (0..qs)
        .map(|x| (0..qs).filter(|&s| sq[s]).map(|s| f.add(s, x)).collect())
        .collect();
    SymmetricDesign::new(qs, (qs - 1) / 2, (qs - 3) / 4, blocks)
}

/// 2-(4t-1, 2t-1, t-1) from a Hadamard matrix of order `4t`: the `+` entries
/// of the normalised matrix with its first row and column removed.
pub fn hadamard_symmetric_design(h: &HadamardMatrix) -> Result<SymmetricDesign> {
    let order = h.order();
    if order < 8 || order % 4 != 0 {
        return Err(Error::BadOrder(format!("order {order} is not a multiple of 4 above 4")));
    }
    let normal = h.normalized();
    let blocks = normal.rows()[1..]
        .iter()
        .map(|row| (1..order).filter(|&j| row[j] > 0).map(|j| j - 1).collect())
        .collect();
    let t = order / 4;
    SymmetricDesign::new(order - 1, 2 * t - 1, t - 1, blocks)
}

/// 2-(16, 6, 2) on a 4x4 grid: cell `(i, j)` gives the block made of row `i`
/// and column `j` without the cell itself.
pub fn grid_design() -> SymmetricDesign {
    let s = 4;
    let blocks = (0..s * s)
        .map(|cell| {
            let (i, j) = (cell / s, cell % s);
            (0..s * s).filter(|&p| p != cell && (p / s == i || p % s == j)).collect()
        })
        .collect();
    SymmetricDesign::new(16, 6, 2, blocks).expect("grid design")
}

/// Complementary design 2-(v, v-k, v-2k+lambda).
pub fn complement_design(d: &SymmetricDesign) -> Result<SymmetricDesign> {
    if d.v - d.k < 2 {
        return Err(Error::Degenerate(format!("complement of 2-({},{},{}) has blocks of size {}", d.v, d.k, d.lambda, d.v - d.k)));
    }
    let blocks = d.blocks.iter().map(|b| (0..d.v).filter(|p| !b.contains(p)).collect()).collect();
    SymmetricDesign::new(d.v, d.v - d.k, d.v + d.lambda - 2 * d.k, blocks)
}

fn coordinate_map(v: usize, base: usize) -> impl Fn(usize) -> usize {
    move |p| {
        debug_assert!(p != base && p < v);
        if p < base {
            p
        } else {
            p - 1
        }
    }
}

fn check_base(d: &SymmetricDesign, base: usize) -> Result<()> {
    if base >= d.v {
        return Err(Error::OutOfRange(format!("base point {base} for v = {}", d.v)));
    }
    if d.k < 2 || d.k + 2 > d.v {
        return Err(Error::Degenerate(format!("block size {} leaves an empty shell", d.k)));
    }
    Ok(())
}

/// Shell `k-1` from blocks through `base` (with `base` removed), shell `k` from
/// blocks avoiding it; the other points become coordinates `0..v-1` in order.
pub fn from_symmetric_residual(d: &SymmetricDesign, base: usize) -> Result<WeightedDesign> {
    check_base(d, base)?;
    let n = d.v - 1;
    let map = coordinate_map(d.v, base);
    let points = d
        .blocks
        .iter()
        .map(|b| BinaryWord::from_support(n, b.iter().filter(|&&p| p != base).map(|&p| map(p))))
        .collect();
    WeightedDesign::with_unit_weights(n, points)
}

/// As [`from_symmetric_residual`], but blocks through `base` are replaced by
/// their complements in the point set, giving shell `v - k`.
pub fn from_symmetric_complemented(d: &SymmetricDesign, base: usize) -> Result<WeightedDesign> {
    check_base(d, base)?;
    if 2 * d.k == d.v {
        return Err(Error::HalfSizeBlock { v: d.v, k: d.k });
    }
    let n = d.v - 1;
    let map = coordinate_map(d.v, base);
    let points = d
        .blocks
        .iter()
        .map(|b| {
            if b.contains(&base) {
                BinaryWord::from_support(n, (0..d.v).filter(|p| !b.contains(p)).map(&map))
            } else {
                BinaryWord::from_support(n, b.iter().map(|&p| map(p)))
            }
        })
        .collect();
    WeightedDesign::with_unit_weights(n, points)
}
