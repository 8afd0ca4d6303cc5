//! Binary words of length at most 64.

use std::fmt;
use std::str::FromStr;

pub const MAX_LEN: usize = 64;

/// A word of `{0,1}^n`. Coordinate `i` is bit `i` of `bits` and character `i`
/// of the text form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    n: u8,
    bits: u64,
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BinaryWord {
    pub fn zero(n: usize) -> Self {
        Self::from_bits(n, 0)
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!((1..=MAX_LEN).contains(&n), "word length {n} outside 1..=64");
        assert_eq!(bits & !mask(n), 0, "bits beyond length {n}");
        Self { n: n as u8, bits }
    }

    pub fn from_support(n: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u64;
        for i in support {
            assert!(i < n, "coordinate {i} outside word of length {n}");
            bits |= 1 << i;
        }
        Self::from_bits(n, bits)
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn distance(&self, other: &Self) -> usize {
        assert_eq!(self.n, other.n, "length mismatch");
        (self.bits ^ other.bits).count_ones() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// True when the support of `self` is inside the support of `other`.
    pub fn is_covered_by(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(&self) -> Self {
        Self::from_bits(self.len(), !self.bits & mask(self.len()))
    }
}

/// All words of weight `r` in increasing numeric order.
pub fn words_of_weight(n: usize, r: usize) -> Vec<BinaryWord> {
    assert!((1..=MAX_LEN).contains(&n) && r <= n);
    if r == 0 {
        return vec![BinaryWord::zero(n)];
    }
    let mut out = Vec::new();
    let last = mask(n);
    let mut x = mask(r);
    loop {
        out.push(BinaryWord::from_bits(n, x));
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let (s, overflow) = x.overflowing_add(c);
        if overflow || c == 0 {
            break;
        }
        let next = (((x ^ s) >> 2) / c) | s;
        if next & !last != 0 {
            break;
        }
        x = next;
    }
    out
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len()).map(|i| if self.contains(i) { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || s.len() > MAX_LEN {
            return Err(format!("bit string length {} outside 1..=64", s.len()));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => return Err(format!("unexpected character {other:?} in bit string")),
            }
        }
        Ok(Self::from_bits(s.len(), bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamming::binomial_u64;

    #[test]
    fn text_round_trip() {
        let w: BinaryWord = "110010".parse().unwrap();
        assert_eq!(w.support(), vec![0, 1, 4]);
        assert_eq!(w.to_string(), "110010");
        assert_eq!(w.complement().to_string(), "001101");
        assert!("1102".parse::<BinaryWord>().is_err());
    }

    #[test]
    fn distance_is_weight_of_sum() {
        let a = BinaryWord::from_support(8, [0, 1, 2]);
        let b = BinaryWord::from_support(8, [2, 3]);
        assert_eq!(a.distance(&b), 3);
        assert!(BinaryWord::from_support(8, [2]).is_covered_by(&b));
    }

    #[test]
    fn shells_have_binomial_size() {
        for n in 1..=12 {
            for r in 0..=n {
                let ws = words_of_weight(n, r);
                assert_eq!(ws.len() as u64, binomial_u64(n as u64, r as u64));
                assert!(ws.iter().all(|w| w.weight() == r));
                assert!(ws.windows(2).all(|p| p[0].bits() < p[1].bits()));
            }
        }
        assert_eq!(words_of_weight(64, 64).len(), 1);
        assert_eq!(words_of_weight(64, 1).len(), 64);
    }
}
