//! The decision pipeline for one parameter row.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::constructions::{catalog, design_row, CatalogEntry};
use crate::design::{save, WeightedDesign};
use crate::feasibility::{ParameterRow, RowRecord};
use crate::nonexistence::filters::counting_violation;
use crate::nonexistence::lambdas::{bad_point_lambda, pair_lambda_solutions, point_lambda_values, PairLambdaSolution};
use crate::nonexistence::search::{search, BlockProblem, SearchOutcome};
use crate::scalar::format_rational;
use crate::verify::verify_design;
use crate::word::BinaryWord;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefutationKind {
    NonIntegralPointLambda,
    EmptyLambdaSystem,
    CountingFilter,
    ExhaustedSearch,
}

impl RefutationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RefutationKind::NonIntegralPointLambda => "non_integral_point_lambda",
            RefutationKind::EmptyLambdaSystem => "empty_lambda_system",
            RefutationKind::CountingFilter => "counting_filter",
            RefutationKind::ExhaustedSearch => "exhausted_search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub kind: RefutationKind,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A complete verified design from the constructions.
    Design { source: String, design: WeightedDesign },
    /// Supports of one shell satisfying every single-shell condition.
    Blocks { shell: usize, r: usize, blocks: Vec<BinaryWord> },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Refuted(Refutation),
    Found(Witness),
    Undecided(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Refuted(_) => "refuted",
            Verdict::Found(_) => "found",
            Verdict::Undecided(_) => "undecided",
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Verdict::Found(_))
    }
}

fn refuted(kind: RefutationKind, trace: Vec<String>) -> Verdict {
    Verdict::Refuted(Refutation { kind, trace })
}

/// Pair degrees a shell can take, from pair solutions consistent with every
/// point lying in `degree` blocks of that shell.
pub fn admissible_pair_degrees(row: &ParameterRow, shell: usize, degree: usize, sols: &[PairLambdaSolution]) -> BTreeSet<usize> {
    let (_, count, _) = row.shell(shell);
    sols.iter()
        .filter(|s| count + s.inside(shell) == 2 * degree + s.outside(shell))
        .map(|s| s.inside(shell))
        .collect()
}

/// The single-shell block problem, complemented when the blocks are large.
pub fn shell_problem(row: &ParameterRow, shell: usize, degree: usize, sols: &[PairLambdaSolution]) -> (BlockProblem, bool) {
    let (r, count, alpha) = row.shell(shell);
    let problem = BlockProblem {
        points: row.n,
        blocks: count,
        k: r,
        mu: r - alpha / 2,
        degree,
        pair_degrees: admissible_pair_degrees(row, shell, degree, sols),
    };
    if 2 * r > row.n {
        (problem.complemented(), true)
    } else {
        (problem, false)
    }
}

/// Search one shell for a block configuration.
pub fn csp_search(row: &ParameterRow, shell: usize, degree: usize, sols: &[PairLambdaSolution], budget: u64) -> Verdict {
    let (r, count, alpha) = row.shell(shell);
    let (problem, flipped) = shell_problem(row, shell, degree, sols);
    let mut trace = vec![format!(
        "shell {shell}: {count} blocks of size {r} on {} points, pairwise meeting in {} points, point degree {degree}, pair degrees {:?}",
        row.n,
        r - alpha / 2,
        problem_pair_degrees(row, shell, degree, sols)
    )];
    if flipped {
        trace.push(format!(
            "searching complements: blocks of size {}, meeting in {}, point degree {}, pair degrees {:?}",
            problem.k, problem.mu, problem.degree, problem.pair_degrees
        ));
    }
    if let Some(reason) = problem.obviously_infeasible() {
        trace.push(reason);
        return refuted(RefutationKind::ExhaustedSearch, trace);
    }
    let result = search(&problem, budget);
    match result.outcome {
        SearchOutcome::Found(blocks) => {
            let full = if row.n == 64 { u64::MAX } else { (1u64 << row.n) - 1 };
            let blocks = blocks
                .into_iter()
                .map(|b| BinaryWord::from_bits(row.n, if flipped { !b & full } else { b }))
                .collect();
            Verdict::Found(Witness::Blocks { shell, r, blocks })
        }
        SearchOutcome::Exhausted => {
            trace.push(format!("search exhausted after {} nodes", result.nodes));
            refuted(RefutationKind::ExhaustedSearch, trace)
        }
        SearchOutcome::BudgetExceeded => {
            Verdict::Undecided(format!("shell {shell} search stopped after {} nodes", result.nodes))
        }
    }
}

fn problem_pair_degrees(row: &ParameterRow, shell: usize, degree: usize, sols: &[PairLambdaSolution]) -> Vec<usize> {
    admissible_pair_degrees(row, shell, degree, sols).into_iter().collect()
}

/// Independent re-check of a single-shell witness against the row.
pub fn witness_satisfies_row(row: &ParameterRow, witness: &Witness) -> bool {
    match witness {
        Witness::Design { design, .. } => design_row(design).as_ref() == Some(row) && verify_design(design, 2).passed(),
        Witness::Blocks { shell, r, blocks } => {
            let pl = point_lambda_values(row);
            let Some((d1, d2)) = pl.as_counts() else { return false };
            let degree = if *shell == 1 { d1 } else { d2 };
            let (rr, count, alpha) = row.shell(*shell);
            let sols = pair_lambda_solutions(row);
            let problem = BlockProblem {
                points: row.n,
                blocks: count,
                k: rr,
                mu: rr - alpha / 2,
                degree,
                pair_degrees: admissible_pair_degrees(row, *shell, degree, &sols),
            };
            *r == rr && problem.is_solution(&blocks.iter().map(BinaryWord::bits).collect::<Vec<_>>())
        }
    }
}

/// Runs the pipeline with a precomputed list of constructed designs for `row.n`.
pub fn decide_with_catalog(row: &ParameterRow, entries: &[CatalogEntry], budget: u64) -> Verdict {
    for e in entries {
        if design_row(&e.design).as_ref() == Some(row) && verify_design(&e.design, 2).passed() {
            return Verdict::Found(Witness::Design { source: e.name.clone(), design: e.design.clone() });
        }
    }
    let pl = point_lambda_values(row);
    if let Some(shell) = bad_point_lambda(row, &pl) {
        let (_, count, _) = row.shell(shell);
        return refuted(
            RefutationKind::NonIntegralPointLambda,
            vec![format!(
                "each coordinate lies in {} points of shell {shell}, which is not an integer in [0, {count}]",
                format_rational(pl.get(shell))
            )],
        );
    }
    let (d1, d2) = pl.as_counts().expect("checked integral");
    let sols = pair_lambda_solutions(row);
    if sols.is_empty() {
        return refuted(
            RefutationKind::EmptyLambdaSystem,
            vec!["no nonnegative integer pair counts satisfy both pair equations".into()],
        );
    }
    if let Some(v) = counting_violation(row, &sols) {
        return refuted(RefutationKind::CountingFilter, vec![v.describe(row)]);
    }
    let first = if row.n2 < row.n1 { 2 } else { 1 };
    let mut reasons = Vec::new();
    for shell in [first, 3 - first] {
        let degree = if shell == 1 { d1 } else { d2 };
        match csp_search(row, shell, degree, &sols, budget) {
            Verdict::Undecided(why) => reasons.push(why),
            other => return other,
        }
    }
    Verdict::Undecided(reasons.join("; "))
}

pub fn decide(row: &ParameterRow, budget: u64) -> Verdict {
    decide_with_catalog(row, &catalog(row.n), budget)
}

/// Decides many rows in parallel; output order follows input order.
pub fn decide_all(rows: &[ParameterRow], budget: u64) -> Vec<Verdict> {
    let lengths: BTreeSet<usize> = rows.iter().map(|r| r.n).collect();
    let catalogs: BTreeMap<usize, Vec<CatalogEntry>> =
        lengths.into_par_iter().map(|n| (n, catalog(n))).collect();
    rows.par_iter().map(|r| decide_with_catalog(r, &catalogs[&r.n], budget)).collect()
}

/// Structured form: `{"row", "label", "verdict", "reason" | "witness"}`.
pub fn verdict_json(row: &ParameterRow, label: &str, verdict: &Verdict) -> Value {
    let mut out = json!({
        "row": serde_json::to_value(RowRecord::from(row)).expect("serializable"),
        "label": label,
        "verdict": verdict.label(),
    });
    let obj = out.as_object_mut().expect("object");
    match verdict {
        Verdict::Refuted(r) => {
            obj.insert("reason".into(), json!({ "kind": r.kind.as_str(), "trace": r.trace }));
        }
        Verdict::Undecided(why) => {
            obj.insert("reason".into(), json!(why));
        }
        Verdict::Found(Witness::Design { source, design }) => {
            let design: Value = serde_json::from_slice(&save(design)).expect("design json");
            obj.insert("witness".into(), json!({ "kind": "design", "source": source, "design": design }));
        }
        Verdict::Found(Witness::Blocks { shell, r, blocks }) => {
            let blocks: Vec<String> = blocks.iter().map(ToString::to_string).collect();
            obj.insert("witness".into(), json!({ "kind": "blocks", "shell": shell, "r": r, "blocks": blocks }));
        }
    }
    out
}
