//! Weighted point sets in H(n,2) with base point the all-zeros word.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational};
use crate::word::BinaryWord;
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDesign {
    n: usize,
    points: Vec<BinaryWord>,
    weights: Vec<Rational>,
}

impl WeightedDesign {
    pub fn new(n: usize, points: Vec<BinaryWord>, weights: Vec<Rational>) -> Result<Self> {
        if points.len() != weights.len() {
            return Err(Error::InvalidDesign(format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::InvalidDesign(format!("point {p} has length {}, expected {n}", p.len())));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
            return Err(Error::InvalidDesign(format!("weight {w} is not positive")));
        }
        let mut seen = BTreeSet::new();
        if let Some(p) = points.iter().find(|p| !seen.insert(**p)) {
            return Err(Error::InvalidDesign(format!("duplicate point {p}")));
        }
        Ok(Self { n, points, weights })
    }

    pub fn with_unit_weights(n: usize, points: Vec<BinaryWord>) -> Result<Self> {
        let weights = vec![Rational::one(); points.len()];
        Self::new(n, points, weights)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[BinaryWord] {
        &self.points
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BinaryWord, &Rational)> {
        self.points.iter().zip(&self.weights)
    }

    pub fn total_weight(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |acc, w| acc + w)
    }

    /// Points of weight `r` with their weights.
    pub fn shell(&self, r: usize) -> Vec<(BinaryWord, Rational)> {
        self.iter().filter(|(p, _)| p.weight() == r).map(|(p, w)| (*p, w.clone())).collect()
    }

    /// Same points with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Self {
        let weights = self.weights.iter().map(|w| w * factor).collect();
        Self::new(self.n, self.points.clone(), weights).expect("scaling by a positive factor")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Shell {
    pub r: usize,
    pub count: usize,
    pub total_weight: Rational,
    pub constant_weight: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShellProfile {
    pub shells: Vec<Shell>,
}

impl ShellProfile {
    pub fn len(&self) -> usize {
        self.shells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shells.is_empty()
    }

    pub fn radii(&self) -> Vec<usize> {
        self.shells.iter().map(|s| s.r).collect()
    }
}

pub fn shells_of(d: &WeightedDesign) -> ShellProfile {
    let mut by_r: BTreeMap<usize, Vec<&Rational>> = BTreeMap::new();
    for (p, w) in d.iter() {
        by_r.entry(p.weight()).or_default().push(w);
    }
    let shells = by_r
        .into_iter()
        .map(|(r, ws)| {
            let total_weight = ws.iter().fold(Rational::zero(), |acc, w| acc + *w);
            let constant_weight = ws.iter().all(|w| *w == ws[0]).then(|| ws[0].clone());
            Shell { r, count: ws.len(), total_weight, constant_weight }
        })
        .collect();
    ShellProfile { shells }
}

/// Distances realised inside each of two shells and between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationProfile {
    pub r1: usize,
    pub r2: usize,
    pub within1: BTreeSet<usize>,
    pub within2: BTreeSet<usize>,
    pub across: BTreeSet<usize>,
}

impl RelationProfile {
    /// Every pair class realises exactly one distance.
    pub fn is_coherent(&self) -> bool {
        self.within1.len() <= 1 && self.within2.len() <= 1 && self.across.len() == 1
    }

    /// Parity and range conditions that any pair of words must satisfy.
    pub fn is_consistent(&self, n: usize) -> bool {
        let within_ok = |set: &BTreeSet<usize>, r: usize| {
            set.iter().all(|&a| a % 2 == 0 && a >= 2 && a <= (2 * r).min(2 * (n - r)))
        };
        within_ok(&self.within1, self.r1)
            && within_ok(&self.within2, self.r2)
            && self.across.iter().all(|&g| g % 2 == (self.r1 + self.r2) % 2)
    }
}

pub fn relation_profile(d: &WeightedDesign) -> Result<RelationProfile> {
    let radii = shells_of(d).radii();
    if radii.len() != 2 {
        return Err(Error::WrongShellCount(radii.len()));
    }
    let (r1, r2) = (radii[0], radii[1]);
    let y1: Vec<_> = d.points().iter().filter(|p| p.weight() == r1).collect();
    let y2: Vec<_> = d.points().iter().filter(|p| p.weight() == r2).collect();
    let within = |ys: &[&BinaryWord]| {
        let mut set = BTreeSet::new();
        for (i, a) in ys.iter().enumerate() {
            for b in &ys[i + 1..] {
                set.insert(a.distance(b));
            }
        }
        set
    };
    let across = y1.iter().flat_map(|a| y2.iter().map(move |b| a.distance(b))).collect();
    let profile = RelationProfile { r1, r2, within1: within(&y1), within2: within(&y2), across };
    debug_assert!(profile.is_consistent(d.n()));
    Ok(profile)
}

/// Complement every point. Point weights are kept, so the ratio between the
/// two shell weights is inverted.
pub fn complement(d: &WeightedDesign) -> WeightedDesign {
    let points = d.points().iter().map(BinaryWord::complement).collect();
    WeightedDesign::new(d.n(), points, d.weights().to_vec()).expect("complement preserves validity")
}

#[derive(Serialize, Deserialize)]
struct DesignFile {
    n: usize,
    points: Vec<String>,
    weights: Vec<String>,
}

fn malformed(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::MalformedFile { location: location.into(), message: message.into() }
}

pub fn load(bytes: &[u8]) -> Result<WeightedDesign> {
    let file: DesignFile = serde_json::from_slice(bytes)
        .map_err(|e| malformed(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    if file.n == 0 || file.n > crate::word::MAX_LEN {
        return Err(malformed("n", format!("word length {} outside 1..=64", file.n)));
    }
    if file.points.len() != file.weights.len() {
        return Err(malformed(
            "weights",
            format!("{} weights for {} points", file.weights.len(), file.points.len()),
        ));
    }
    let mut points = Vec::with_capacity(file.points.len());
    let mut seen = BTreeSet::new();
    for (i, s) in file.points.iter().enumerate() {
        let p: BinaryWord = s.parse().map_err(|m| malformed(format!("points[{i}]"), m))?;
        if p.len() != file.n {
            return Err(malformed(format!("points[{i}]"), format!("length {} differs from n = {}", p.len(), file.n)));
        }
        if !seen.insert(p) {
            return Err(malformed(format!("points[{i}]"), format!("duplicate point {p}")));
        }
        points.push(p);
    }
    let mut weights = Vec::with_capacity(file.weights.len());
    for (i, s) in file.weights.iter().enumerate() {
        let w = parse_rational(s).map_err(|m| malformed(format!("weights[{i}]"), m))?;
        if !w.is_positive() {
            return Err(malformed(format!("weights[{i}]"), format!("weight {s} is not positive")));
        }
        weights.push(w);
    }
    WeightedDesign::new(file.n, points, weights).map_err(|e| malformed("design", e.to_string()))
}

pub fn save(d: &WeightedDesign) -> Vec<u8> {
    let file = DesignFile {
        n: d.n(),
        points: d.points().iter().map(ToString::to_string).collect(),
        weights: d.weights().iter().map(format_rational).collect(),
    };
    let mut out = serde_json::to_vec_pretty(&file).expect("serializable");
    out.push(b'\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, rational};

    fn small() -> WeightedDesign {
        let pts = ["110000", "001100", "000011", "101010", "100101", "011001", "010110"];
        WeightedDesign::with_unit_weights(6, pts.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn shell_profile_groups_by_weight() {
        let prof = shells_of(&small());
        assert_eq!(prof.radii(), vec![2, 3]);
        assert_eq!(prof.shells[0].count, 3);
        assert_eq!(prof.shells[1].count, 4);
        assert_eq!(prof.shells[0].constant_weight, Some(integer(1)));
    }

    #[test]
    fn unequal_weights_have_no_constant() {
        let pts = vec!["1100".parse().unwrap(), "0011".parse().unwrap()];
        let d = WeightedDesign::new(4, pts, vec![integer(1), integer(2)]).unwrap();
        assert_eq!(shells_of(&d).shells[0].constant_weight, None);
    }

    #[test]
    fn relation_profile_of_small_design() {
        let rel = relation_profile(&small()).unwrap();
        assert_eq!(rel.within1, BTreeSet::from([4]));
        assert_eq!(rel.within2, BTreeSet::from([4]));
        assert_eq!(rel.across, BTreeSet::from([3]));
        assert!(rel.is_coherent());
    }

    #[test]
    fn single_point_shell_has_no_internal_distance() {
        let pts = vec!["1100000000".parse().unwrap(), "1111100000".parse().unwrap(), "0011111000".parse().unwrap()];
        let rel = relation_profile(&WeightedDesign::with_unit_weights(10, pts).unwrap()).unwrap();
        assert!(rel.within1.is_empty());
        assert!(relation_profile(&WeightedDesign::with_unit_weights(10, vec!["1000000000".parse().unwrap()]).unwrap()).is_err());
    }

    #[test]
    fn complement_is_an_involution() {
        let d = small().scaled(&rational(3, 2));
        let c = complement(&d);
        assert_eq!(c.points()[0].to_string(), "001111");
        assert_eq!(c.weights()[0], rational(3, 2));
        assert_eq!(complement(&c), d);
    }

    #[test]
    fn file_round_trip() {
        let d = small().scaled(&rational(3, 2));
        assert_eq!(load(&save(&d)).unwrap(), d);
    }

    #[test]
    fn rejects_malformed_files() {
        let dup = br#"{"n":4,"points":["1100","1100"],"weights":["1","1"]}"#;
        assert!(matches!(load(dup), Err(Error::MalformedFile { location, .. }) if location == "points[1]"));
        let bad_len = br#"{"n":4,"points":["110"],"weights":["1"]}"#;
        assert!(load(bad_len).is_err());
        let count = br#"{"n":4,"points":["1100"],"weights":[]}"#;
        assert!(load(count).is_err());
        let neg = br#"{"n":4,"points":["1100"],"weights":["-1/2"]}"#;
        assert!(load(neg).is_err());
        assert!(load(b"{").is_err());
        let frac = br#"{"n":4,"points":["1100"],"weights":["3/2"]}"#;
        assert_eq!(load(frac).unwrap().weights()[0], rational(3, 2));
    }
}
