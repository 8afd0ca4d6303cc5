//! Checks that a weighted set is a relative t-design, that it is tight, and
//! that it has the structure forced on tight designs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::design::{relation_profile, shells_of, RelationProfile, WeightedDesign};
use crate::error::{Error, Result};
use crate::gram::{gram_closed_form, gram_matrix, GramParameters};
use crate::hamming::{binomial, shell_intersection, KrawtchoukTable};
use crate::linalg::Matrix;
use crate::scalar::from_bigint;
use crate::word::{words_of_weight, BinaryWord};
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub j: usize,
    pub u: BinaryWord,
    pub observed: Rational,
    pub expected: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentsReport {
    pub t: usize,
    pub ok: bool,
    pub first_violation: Option<Violation>,
}

/// Compares `sum_y w(y) Q_j(d(u,y))` with the shell-averaged value for every
/// `u` of weight `j <= t`.
pub fn moments_check(d: &WeightedDesign, t: usize) -> MomentsReport {
    let n = d.n();
    assert!(t <= n, "t = {t} exceeds n = {n}");
    let q = KrawtchoukTable::new(n);
    let profile = shells_of(d);
    for j in 0..=t {
        let mut expected = Rational::zero();
        for s in &profile.shells {
            let mut inner = Rational::zero();
            for nu in 0..=n {
                let c = shell_intersection(n, j, s.r, nu);
                if !c.is_zero() {
                    inner += from_bigint(&(c * q.get(j, nu)));
                }
            }
            expected += &s.total_weight * inner / from_bigint(&binomial(n as u64, s.r as i64));
        }
        for u in words_of_weight(n, j) {
            // accumulate weight by distance, then apply Q_j once per distance
            let mut by_distance = vec![Rational::zero(); n + 1];
            for (y, w) in d.iter() {
                by_distance[u.distance(y)] += w;
            }
            let observed = by_distance
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .fold(Rational::zero(), |acc, (nu, w)| acc + w * from_bigint(q.get(j, nu)));
            if observed != expected {
                let first_violation = Some(Violation { j, u, observed, expected });
                return MomentsReport { t, ok: false, first_violation };
            }
        }
    }
    MomentsReport { t, ok: true, first_violation: None }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BalancedReport {
    pub t: usize,
    /// `lambdas[j]` for every `j` that was found balanced.
    pub lambdas: Vec<Rational>,
    pub ok: bool,
    pub first_violation: Option<Violation>,
}

/// Checks that the weight of points whose support contains `u` depends only
/// on `|u|`, for `|u| <= t`.
pub fn balanced_check(d: &WeightedDesign, t: usize) -> BalancedReport {
    let n = d.n();
    assert!(t <= n, "t = {t} exceeds n = {n}");
    let mut lambdas = Vec::with_capacity(t + 1);
    for j in 0..=t {
        let mut value: Option<Rational> = None;
        for u in words_of_weight(n, j) {
            let s = d
                .iter()
                .filter(|(y, _)| u.is_covered_by(y))
                .fold(Rational::zero(), |acc, (_, w)| acc + w);
            match &value {
                None => value = Some(s),
                Some(v) if *v == s => {}
                Some(v) => {
                    let first_violation = Some(Violation { j, u, observed: s, expected: v.clone() });
                    return BalancedReport { t, lambdas, ok: false, first_violation };
                }
            }
        }
        lambdas.push(value.expect("every shell is nonempty"));
    }
    BalancedReport { t, lambdas, ok: true, first_violation: None }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightnessReport {
    pub size: usize,
    pub bound: usize,
    pub tight: bool,
}

/// Gram data of a design supported on two proper shells.
pub fn design_gram(d: &WeightedDesign) -> Result<GramParameters<Rational>> {
    let profile = shells_of(d);
    if profile.len() != 2 {
        return Err(Error::WrongShellCount(profile.len()));
    }
    let (a, b) = (&profile.shells[0], &profile.shells[1]);
    gram_closed_form(d.n(), a.r, b.r, a.total_weight.clone(), b.total_weight.clone())
}

/// Compares `|Y|` with the dimension of the span of `phi_0, ..., phi_n` on the
/// two shells, computed as the rank of their Gram matrix.
pub fn tightness_check(d: &WeightedDesign) -> Result<TightnessReport> {
    let g = design_gram(d)?;
    let bound = gram_matrix(&g).rank();
    Ok(TightnessReport { size: d.len(), bound, tight: d.len() == bound })
}

/// `phi_1, ..., phi_n, phi_0` evaluated at every point, one row per function.
pub fn evaluation_matrix(d: &WeightedDesign) -> Matrix<Rational> {
    let n = d.n();
    Matrix::from_fn(n + 1, d.len(), |s, col| {
        if s == n {
            return Rational::from_integer(1.into());
        }
        let y = &d.points()[col];
        let r = y.weight() as i64;
        let dist = if y.contains(s) { r - 1 } else { r + 1 };
        Rational::from_integer((n as i64 - 2 * dist).into())
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameReport {
    /// `E W E^T` equals the Gram matrix.
    pub gram_ok: bool,
    /// `E^T G^{-1} E` equals `W^{-1}`.
    pub dual_ok: bool,
}

impl FrameReport {
    pub fn ok(&self) -> bool {
        self.gram_ok && self.dual_ok
    }
}

/// Common denominator of `values` and the numerators over it.
fn clear_denominators<'a>(values: impl Iterator<Item = &'a Rational> + Clone) -> (BigInt, Vec<BigInt>) {
    let den = values.clone().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let nums = values.map(|v| v.numer() * (&den / v.denom())).collect();
    (den, nums)
}

pub fn frame_check(d: &WeightedDesign) -> Result<FrameReport> {
    let g = design_gram(d)?;
    let size = d.n() + 1;
    if d.len() != size {
        return Err(Error::NotTight { size: d.len(), expected: size });
    }
    let gram = gram_matrix(&g);
    // integer arithmetic after scaling; E has integer entries
    let e = evaluation_matrix(d);
    let e: Vec<Vec<BigInt>> = (0..size).map(|a| (0..size).map(|y| e.get(a, y).to_integer()).collect()).collect();
    let (wden, w) = clear_denominators(d.weights().iter());
    let gram_ok = (0..size).all(|a| {
        (0..size).all(|b| {
            let s: BigInt = (0..size).map(|y| &e[a][y] * &w[y] * &e[b][y]).sum();
            Rational::new(s, wden.clone()) == *gram.get(a, b)
        })
    });
    let dual_ok = match gram.inverse() {
        Some(inv) => {
            let entries: Vec<&Rational> = (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).map(|(a, b)| inv.get(a, b)).collect();
            let (den, flat) = clear_denominators(entries.into_iter());
            let inv_e: Vec<Vec<BigInt>> = (0..size)
                .map(|a| (0..size).map(|z| (0..size).map(|b| &flat[a * size + b] * &e[b][z]).sum()).collect())
                .collect();
            (0..size).all(|y| {
                (0..size).all(|z| {
                    let s: BigInt = (0..size).map(|a| &e[a][y] * &inv_e[a][z]).sum();
                    let expected = if y == z { d.weights()[y].recip() } else { Rational::zero() };
                    Rational::new(s, den.clone()) == expected
                })
            })
        }
        None => false,
    };
    Ok(FrameReport { gram_ok, dual_ok })
}

pub fn weight_constancy_check(d: &WeightedDesign) -> bool {
    shells_of(d).shells.iter().all(|s| s.constant_weight.is_some())
}

/// Every check at once, as run by the command line `verify`.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub moments: MomentsReport,
    pub balanced: BalancedReport,
    pub tightness: Result<TightnessReport>,
    pub frame: Result<FrameReport>,
    pub constant_weights: bool,
    pub relations: Result<RelationProfile>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.moments.ok
            && self.balanced.ok
            && matches!(&self.tightness, Ok(r) if r.tight)
            && matches!(&self.frame, Ok(f) if f.ok())
            && self.constant_weights
            && matches!(&self.relations, Ok(r) if r.is_coherent())
    }
}

pub fn verify_design(d: &WeightedDesign, t: usize) -> VerificationReport {
    let tightness = tightness_check(d);
    // the frame identities only make sense once the size is right
    let frame = match &tightness {
        Ok(r) if r.size == d.n() + 1 => frame_check(d),
        Ok(r) => Err(Error::NotTight { size: r.size, expected: d.n() + 1 }),
        Err(e) => Err(e.clone()),
    };
    VerificationReport {
        moments: moments_check(d, t),
        balanced: balanced_check(d, t),
        tightness,
        frame,
        constant_weights: weight_constancy_check(d),
        relations: relation_profile(d),
    }
}
