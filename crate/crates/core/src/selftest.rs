//! Deterministic property checks bundled with the library.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::constructions::{catalog, design_row};
use crate::design::{relation_profile, WeightedDesign};
use crate::feasibility::{candidate_row, enumerate_rows, satisfies_count_identities};
use crate::gram::{gram_closed_form, gram_matrix, gram_schmidt_closed_form, gram_schmidt_generic, GramParameters};
use crate::hamming::{binomial, shell_intersection, KrawtchoukTable};
use crate::nonexistence::verdict::{decide_all, witness_satisfies_row, Verdict};
use crate::scalar::{integer, rational};
use crate::verify::{balanced_check, frame_check, moments_check, verify_design};
use crate::word::{words_of_weight, BinaryWord};
use crate::Rational;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

fn check(name: &'static str, f: impl FnOnce() -> Result<String, String>) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult { name, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

fn krawtchouk_identities() -> Result<String, String> {
    for n in 1..=14usize {
        let q = KrawtchoukTable::new(n);
        let two_n = BigInt::from(1u64) << n;
        for k in 0..=n {
            for l in 0..=n {
                let s: BigInt = (0..=n).map(|u| binomial(n as u64, u as i64) * q.get(k, u) * q.get(l, u)).sum();
                let expect = if k == l { &two_n * binomial(n as u64, k as i64) } else { BigInt::zero() };
                if s != expect {
                    return Err(format!("orthogonality fails at n={n}, k={k}, l={l}"));
                }
                if binomial(n as u64, l as i64) * q.get(k, l) != binomial(n as u64, k as i64) * q.get(l, k) {
                    return Err(format!("reciprocity fails at n={n}, k={k}, u={l}"));
                }
            }
            for j in 0..=n {
                let total: BigInt = (0..=n).map(|nu| shell_intersection(n, j, k, nu)).sum();
                if total != binomial(n as u64, k as i64) {
                    return Err(format!("shell intersections do not sum to C({n},{k}) for j={j}"));
                }
            }
        }
    }
    Ok("n = 1..14".into())
}

/// `<phi_a, phi_b>` by summing over both shells; index `n` stands for `phi_0`.
fn brute_inner(n: usize, shells: &[(usize, Rational)], a: usize, b: usize) -> Rational {
    let phi = |i: usize, x: &BinaryWord| -> i64 {
        if i == n {
            1
        } else {
            n as i64 - 2 * x.distance(&BinaryWord::from_support(n, [i])) as i64
        }
    };
    let mut total = Rational::zero();
    for (r, w) in shells {
        let s: i64 = words_of_weight(n, *r).iter().map(|x| phi(a, x) * phi(b, x)).sum();
        total += w * integer(s) / Rational::from_integer(binomial(n as u64, *r as i64));
    }
    total
}

fn weight_grid() -> Vec<(Rational, Rational)> {
    vec![(integer(1), integer(1)), (rational(3, 2), rational(1, 7)), (integer(5), rational(2, 3))]
}

fn gram_checks() -> Result<String, String> {
    let mut cases = 0;
    for n in 3..=8usize {
        for r1 in 1..n {
            for r2 in r1 + 1..n {
                for (w1, w2) in weight_grid() {
                    let g = gram_closed_form(n, r1, r2, w1.clone(), w2.clone()).map_err(|e| e.to_string())?;
                    let shells = [(r1, w1.clone()), (r2, w2.clone())];
                    let brute = GramParameters {
                        d0: brute_inner(n, &shells, 0, n),
                        c0: brute_inner(n, &shells, 0, 0),
                        c2: brute_inner(n, &shells, 0, 1),
                        ..g.clone()
                    };
                    if brute != g {
                        return Err(format!("closed form differs from direct sum at n={n}, r=({r1},{r2})"));
                    }
                    if let Ok(closed) = gram_schmidt_closed_form(&g) {
                        let generic = gram_schmidt_generic(&gram_matrix(&g)).map_err(|e| e.to_string())?;
                        if closed.norms != generic.norms || closed.coefficients != generic.coefficients {
                            return Err(format!("Gram-Schmidt forms disagree at n={n}, r=({r1},{r2})"));
                        }
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} shell/weight cases"))
}

fn table_checks() -> Result<String, String> {
    let rows = enumerate_rows(6, 30);
    if rows.len() != 94 {
        return Err(format!("{} rows for 6 <= n <= 30, expected 94", rows.len()));
    }
    for r in &rows {
        if !satisfies_count_identities(r) {
            return Err(format!("count identities fail for {r:?}"));
        }
        if !rows.contains(&r.complement()) {
            return Err(format!("complement of {:?} missing", r.key()));
        }
    }
    Ok("94 rows, complement closed".into())
}

fn construction_checks() -> Result<String, String> {
    let mut count = 0;
    for n in 6..=30 {
        for e in catalog(n) {
            let report = verify_design(&e.design, 2);
            if !report.passed() {
                return Err(format!("{} (n = {n}) fails verification", e.name));
            }
            if design_row(&e.design).is_none() {
                return Err(format!("{} (n = {n}) matches no parameter row", e.name));
            }
            count += 1;
        }
    }
    Ok(format!("{count} constructed designs verified"))
}

/// Small weighted sets: designs, perturbed designs, and subsets of shells.
fn equivalence_corpus() -> Vec<(WeightedDesign, usize)> {
    let mut out = Vec::new();
    for n in [6, 10, 12] {
        for e in catalog(n) {
            out.push((e.design.clone(), 2));
            let mut pts = e.design.points().to_vec();
            pts[0] = pts[0].complement();
            if let Ok(d) = WeightedDesign::new(n, pts, e.design.weights().to_vec()) {
                out.push((d, 2));
            }
        }
    }
    for n in 5..=7 {
        for r in 1..n {
            let shell = words_of_weight(n, r);
            for step in 1..=3usize {
                let pts: Vec<BinaryWord> = shell.iter().step_by(step).copied().collect();
                out.push((WeightedDesign::with_unit_weights(n, pts).expect("distinct"), 2));
            }
        }
    }
    out
}

fn equivalence_checks() -> Result<String, String> {
    let corpus = equivalence_corpus();
    for (d, t) in &corpus {
        for tt in 0..=*t {
            if moments_check(d, tt).ok != balanced_check(d, tt).ok {
                return Err(format!("criteria disagree on a set of {} points in H({},2), t = {tt}", d.len(), d.n()));
            }
        }
    }
    Ok(format!("{} weighted sets", corpus.len()))
}

fn frame_checks() -> Result<String, String> {
    let mut count = 0;
    for n in [6, 10, 12, 14] {
        for e in catalog(n) {
            if !frame_check(&e.design).map_err(|x| x.to_string())?.ok() {
                return Err(format!("frame identities fail for {}", e.name));
            }
            let mut pts = e.design.points().to_vec();
            pts.swap(0, 1);
            let mut weights = e.design.weights().to_vec();
            weights[0] = &weights[0] * integer(2);
            let perturbed = WeightedDesign::new(n, pts, weights).map_err(|x| x.to_string())?;
            if frame_check(&perturbed).map_err(|x| x.to_string())?.ok() {
                return Err(format!("perturbed {} passes the frame identities", e.name));
            }
            if relation_profile(&e.design).map(|r| !r.is_coherent()).unwrap_or(true) {
                return Err(format!("{} has more than one distance in a relation", e.name));
            }
            count += 1;
        }
    }
    Ok(format!("{count} designs and perturbations"))
}

fn decision_checks() -> Result<String, String> {
    let rows = enumerate_rows(6, 15);
    let verdicts = decide_all(&rows, 10_000_000);
    for (r, v) in rows.iter().zip(&verdicts) {
        match v {
            Verdict::Found(w) if !witness_satisfies_row(r, w) => return Err(format!("bad witness for {:?}", r.key())),
            Verdict::Undecided(why) => return Err(format!("{:?} undecided: {why}", r.key())),
            _ => {}
        }
    }
    let smallest = candidate_row(6, 2, 3, 3).expect("feasible");
    if !verdicts[rows.iter().position(|r| *r == smallest).expect("present")].is_found() {
        return Err("smallest row not constructed".into());
    }
    Ok(format!("{} rows decided", rows.len()))
}

pub fn run() -> Vec<CheckResult> {
    vec![
        check("krawtchouk identities", krawtchouk_identities),
        check("gram closed forms", gram_checks),
        check("feasibility table", table_checks),
        check("constructions verified", construction_checks),
        check("design criteria agree", equivalence_checks),
        check("frame identities", frame_checks),
        check("decisions consistent", decision_checks),
    ]
}
