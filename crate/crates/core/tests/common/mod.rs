//! Golden data and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;

use proptest::prelude::*;
use proptest::strategy::ValueTree;

use reldesign::constructions::catalog;
use reldesign::design::WeightedDesign;
use reldesign::word::BinaryWord;
use reldesign::Rational;

pub const GOLDEN_TABLE: &str = include_str!("../golden/table.csv");

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenRow {
    pub label: String,
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    #[serde(rename = "N1")]
    pub n1: usize,
    #[serde(rename = "N2")]
    pub n2: usize,
    pub alpha1: usize,
    pub alpha2: usize,
    pub gamma: usize,
    pub w: String,
    pub lambda1: String,
    pub lambda2: String,
    pub status: String,
}

impl GoldenRow {
    pub fn exists(&self) -> bool {
        self.status == "exists"
    }
}

pub fn golden() -> Vec<GoldenRow> {
    csv::Reader::from_reader(GOLDEN_TABLE.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .expect("golden table parses")
}

pub fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Coefficient of `z^k` in `(1 - z)^u (1 + z)^(n - u)`.
pub fn krawtchouk_by_expansion(n: usize, k: usize, u: usize) -> i128 {
    let mut poly = vec![1i128];
    for i in 0..n {
        let sign = if i < u { -1 } else { 1 };
        let mut next = vec![0i128; poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + 1] += sign * c;
        }
        poly = next;
    }
    poly.get(k).copied().unwrap_or(0)
}

/// All subsets of `0..n` of size `r` as bit masks, by filtering every mask.
pub fn masks_of_weight(n: usize, r: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == r).collect()
}

/// `phi_i(x) = n - 2 d(e_i, x)` for `i < n`, and `phi_n = 1` standing for `phi_0`.
pub fn phi(n: usize, i: usize, x: u64) -> i64 {
    if i == n {
        return 1;
    }
    let weight = x.count_ones() as i64;
    let dist = if x >> i & 1 == 1 { weight - 1 } else { weight + 1 };
    n as i64 - 2 * dist
}

/// `sum_{x in shell r} phi_a(x) phi_b(x)` for every `a, b` in the order
/// `phi_1, ..., phi_n, phi_0`.
pub fn shell_products(n: usize, r: usize) -> Vec<Vec<i64>> {
    let words = masks_of_weight(n, r);
    (0..=n)
        .map(|a| (0..=n).map(|b| words.iter().map(|&x| phi(n, a, x) * phi(n, b, x)).sum()).collect())
        .collect()
}

/// `sum_nu W_nu / |X_nu| * sum_{x in X_nu} f(x)` applied to the product table.
pub fn brute_gram(n: usize, shells: &[(usize, BigRational)]) -> Vec<Vec<BigRational>> {
    let mut out = vec![vec![BigRational::zero(); n + 1]; n + 1];
    for (r, w) in shells {
        let prod = shell_products(n, *r);
        let size = BigRational::from_integer(BigInt::from(choose(n as u64, *r as u64)));
        for a in 0..=n {
            for b in 0..=n {
                out[a][b] += w * BigRational::from_integer(prod[a][b].into()) / &size;
            }
        }
    }
    out
}

/// Relative `t`-design by the character criterion: for every `u` with
/// `|u| <= t`, the weighted sum of `(-1)^{|u & y|}` over the design equals
/// the shell-weighted average of the same character over the full shells.
pub fn is_relative_design(d: &WeightedDesign, t: usize) -> bool {
    let n = d.n();
    let mut totals: Vec<(usize, BigRational)> = Vec::new();
    for (y, w) in d.iter() {
        match totals.iter_mut().find(|(r, _)| *r == y.weight()) {
            Some((_, s)) => *s += w,
            None => totals.push((y.weight(), w.clone())),
        }
    }
    let chi = |u: u64, x: u64| if (u & x).count_ones() % 2 == 0 { 1i64 } else { -1 };
    for j in 0..=t {
        for u in masks_of_weight(n, j) {
            let observed = d.iter().fold(BigRational::zero(), |acc, (y, w)| acc + w * BigRational::from_integer(chi(u, y.bits()).into()));
            let mut expected = BigRational::zero();
            for (r, w) in &totals {
                let s: i64 = masks_of_weight(n, *r).iter().map(|&x| chi(u, x)).sum();
                expected += w * BigRational::new(s.into(), BigInt::from(choose(n as u64, *r as u64)));
            }
            if observed != expected {
                return false;
            }
        }
    }
    true
}

/// Pairwise distances realised between two lists of words.
pub fn distances(a: &[u64], b: &[u64], same: bool) -> std::collections::BTreeSet<u32> {
    let mut out = std::collections::BTreeSet::new();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if !same || j > i {
                out.insert((x ^ y).count_ones());
            }
        }
    }
    out
}

/// A random weighted set on at most three shells of H(n, 2).
pub fn random_set() -> impl Strategy<Value = WeightedDesign> {
    (5usize..=12)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec((1..n, any::<u64>(), 1i64..4), 1..=3)))
        .prop_map(|(n, picks)| {
            let mut chosen: BTreeMap<u64, Rational> = BTreeMap::new();
            for (r, seed, w) in picks {
                let shell = masks_of_weight(n, r);
                for (i, x) in shell.iter().enumerate() {
                    // every shell word kept or dropped by one bit of the seed
                    if seed >> (i % 64) & 1 == 1 || shell.len() <= 2 {
                        chosen.insert(*x, Rational::from_integer(w.into()));
                    }
                }
            }
            let (points, weights) = chosen.into_iter().map(|(x, w)| (BinaryWord::from_bits(n, x), w)).unzip();
            WeightedDesign::new(n, points, weights).unwrap()
        })
}

pub fn near_design_corpus() -> &'static Vec<WeightedDesign> {
    static CORPUS: OnceLock<Vec<WeightedDesign>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut out = Vec::new();
        for n in [6, 10, 12] {
            for e in catalog(n) {
                out.push(e.design.clone());
                // near-design: one point moved to another word of its shell
                let pts = e.design.points();
                let moved = (0..1u64 << n)
                    .map(|b| BinaryWord::from_bits(n, b))
                    .find(|x| x.weight() == pts[0].weight() && !pts.contains(x))
                    .unwrap();
                let mut near = pts.to_vec();
                near[0] = moved;
                out.push(WeightedDesign::new(n, near, e.design.weights().to_vec()).unwrap());
                let mut reweighted = e.design.weights().to_vec();
                reweighted[1] = &reweighted[1] * Rational::new(3.into(), 2.into());
                out.push(WeightedDesign::new(n, pts.to_vec(), reweighted).unwrap());
            }
        }
        out
    })
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..50, 1i64..50).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

pub fn shell_pairs() -> Vec<(usize, usize, usize)> {
    (3..=10usize).flat_map(|n| (1..n).flat_map(move |r1| (r1 + 1..n).map(move |r2| (n, r1, r2)))).collect()
}

/// `count` values drawn from `strategy` with a fixed seed.
pub fn sample<S: Strategy>(strategy: S, count: usize) -> Vec<S::Value> {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    (0..count).map(|_| strategy.new_tree(&mut runner).expect("strategy").current()).collect()
}
