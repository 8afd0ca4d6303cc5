//! Double-counting checks on the pair-count solutions.

use std::collections::BTreeSet;

use crate::feasibility::ParameterRow;
use crate::hamming::binomial_u64;
use crate::nonexistence::lambdas::PairLambdaSolution;

/// Why a row fails a counting check, with a one-line explanation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountingViolation {
    /// Every pair lies in no shell-`i` point although those points contain pairs.
    NoPairsCovered { shell: usize },
    /// A forced per-pair count disagrees with the total number of covered pairs.
    PairTotal { shell: usize, inside: bool, forced: usize },
}

impl CountingViolation {
    pub fn describe(&self, row: &ParameterRow) -> String {
        match *self {
            CountingViolation::NoPairsCovered { shell } => {
                let (r, count, _) = row.shell(shell);
                format!(
                    "every coordinate pair lies in 0 points of shell {shell}, but its {count} points of weight {r} each contain {} pairs",
                    binomial_u64(r as u64, 2)
                )
            }
            CountingViolation::PairTotal { shell, inside, forced } => {
                let (r, count, _) = row.shell(shell);
                let covered = if inside { r } else { row.n - r };
                let word = if inside { "inside" } else { "outside" };
                format!(
                    "every coordinate pair lies {word} exactly {forced} points of shell {shell}, so {forced} * C({},2) = {} must equal {count} * C({covered},2) = {}",
                    row.n,
                    forced as u64 * binomial_u64(row.n as u64, 2),
                    count as u64 * binomial_u64(covered as u64, 2)
                )
            }
        }
    }
}

fn forced(values: impl Iterator<Item = usize>) -> Option<usize> {
    let set: BTreeSet<usize> = values.collect();
    (set.len() == 1).then(|| *set.iter().next().expect("one element"))
}

/// First violated counting rule, if any.
pub fn counting_violation(row: &ParameterRow, solutions: &[PairLambdaSolution]) -> Option<CountingViolation> {
    let pairs = binomial_u64(row.n as u64, 2);
    for shell in 1..=2 {
        let (r, count, _) = row.shell(shell);
        if forced(solutions.iter().map(|s| s.inside(shell))) == Some(0) && r >= 2 && count >= 1 {
            return Some(CountingViolation::NoPairsCovered { shell });
        }
    }
    for shell in 1..=2 {
        let (r, count, _) = row.shell(shell);
        let inside = forced(solutions.iter().map(|s| s.inside(shell)));
        for (is_inside, value, covered) in [(true, inside, r), (false, forced(solutions.iter().map(|s| s.outside(shell))), row.n - r)] {
            if let Some(v) = value {
                if v as u64 * pairs != count as u64 * binomial_u64(covered as u64, 2) {
                    return Some(CountingViolation::PairTotal { shell, inside: is_inside, forced: v });
                }
            }
        }
    }
    None
}
