//! Per-point and per-pair incidence counts forced by a parameter row.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::feasibility::ParameterRow;
use crate::hamming::binomial;
use crate::scalar::{from_bigint, integer};
use crate::Rational;

/// Number of shell-`i` points whose support contains a fixed coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointLambdas {
    pub shell1: Rational,
    pub shell2: Rational,
}

impl PointLambdas {
    pub fn get(&self, shell: usize) -> &Rational {
        match shell {
            1 => &self.shell1,
            2 => &self.shell2,
            _ => panic!("shell index must be 1 or 2"),
        }
    }

    /// Both values as integers, when they are.
    pub fn as_counts(&self) -> Option<(usize, usize)> {
        let c = |r: &Rational| r.is_integer().then(|| r.to_integer().to_usize()).flatten();
        Some((c(&self.shell1)?, c(&self.shell2)?))
    }
}

pub fn point_lambda_values(row: &ParameterRow) -> PointLambdas {
    let n = integer(row.n as i64);
    let (r1, r2) = (integer(row.r1 as i64), integer(row.r2 as i64));
    let one = integer(1);
    let gap = &r2 - &r1;
    let shell1 = ((&r2 - &one) * &row.lambda1 - (&n - &one) * &row.lambda2) / (&gap * row.shell_weight(1));
    let shell2 = ((&n - &one) * &row.lambda2 - (&r1 - &one) * &row.lambda1) / (&gap * row.shell_weight(2));
    PointLambdas { shell1, shell2 }
}

/// The first shell (if any) whose point count is not an integer in `0..=N_i`.
pub fn bad_point_lambda(row: &ParameterRow, pl: &PointLambdas) -> Option<usize> {
    (1..=2).find(|&i| {
        let v = pl.get(i);
        let (_, count, _) = row.shell(i);
        !v.is_integer() || v.is_negative() || *v > integer(count as i64)
    })
}

/// Counts for a fixed coordinate pair `u`: shell-`i` points containing `u`
/// (`inside`) and disjoint from `u` (`outside`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PairLambdaSolution {
    pub inside1: usize,
    pub outside1: usize,
    pub inside2: usize,
    pub outside2: usize,
}

impl PairLambdaSolution {
    pub fn inside(&self, shell: usize) -> usize {
        if shell == 1 {
            self.inside1
        } else {
            self.inside2
        }
    }

    pub fn outside(&self, shell: usize) -> usize {
        if shell == 1 {
            self.outside1
        } else {
            self.outside2
        }
    }
}

/// `Q_2` of H(n,2) as a polynomial, so it is defined past `n`.
fn q2(n: i64, u: i64) -> Rational {
    let d = n - 2 * u;
    crate::scalar::rational(d * d - n, 2)
}

/// All nonnegative `(inside1, outside1, inside2, outside2)` with
/// `inside_i + outside_i <= N_i` such that the weighted `inside` counts sum to
/// `lambda2` and the degree-2 moment around a weight-2 word equals its shell
/// average.
pub fn pair_lambda_solutions(row: &ParameterRow) -> Vec<PairLambdaSolution> {
    let n = row.n as i64;
    let shells = [(row.r1 as i64, row.n1, row.shell_weight(1)), (row.r2 as i64, row.n2, row.shell_weight(2))];
    let mut target = Rational::zero();
    for (r, count, w) in &shells {
        let c = |k: i64| from_bigint(&binomial((n - 2) as u64, k));
        let avg = c(r - 2) * q2(n, r - 2) + c(*r) * q2(n, r + 2) + integer(2) * c(r - 1) * q2(n, *r);
        target += w * integer(*count as i64) * avg / from_bigint(&binomial(n as u64, *r));
    }
    // contribution of one point of shell i by position relative to u
    let contrib = |i: usize, a: usize, b: usize| {
        let (r, count, w) = &shells[i];
        let rest = (*count - a - b) as i64;
        w * (integer(a as i64) * q2(n, r - 2) + integer(b as i64) * q2(n, r + 2) + integer(rest) * q2(n, *r))
    };
    let mut out = Vec::new();
    for a in 0..=row.n1 {
        for c in 0..=row.n2 {
            if &shells[0].2 * integer(a as i64) + &shells[1].2 * integer(c as i64) != row.lambda2 {
                continue;
            }
            for b in 0..=row.n1 - a {
                let first = contrib(0, a, b);
                for d in 0..=row.n2 - c {
                    if &first + contrib(1, c, d) == target {
                        out.push(PairLambdaSolution { inside1: a, outside1: b, inside2: c, outside2: d });
                    }
                }
            }
        }
    }
    out
}
