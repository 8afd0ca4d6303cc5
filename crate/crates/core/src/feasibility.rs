//! Feasible parameter sets for tight relative 2-designs on two shells.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::hamming::binomial;
use crate::scalar::{as_i64, format_rational, from_bigint, integer, is_even_integer, parse_rational, rational};
use crate::Rational;

/// One row of parameters. Shell 1 carries weight 1 and shell 2 weight `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParameterRow {
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    pub n1: usize,
    pub n2: usize,
    pub alpha1: usize,
    pub alpha2: usize,
    pub gamma: usize,
    /// Common support size of a shell-1 and a shell-2 point is `r1 - a`.
    pub a: usize,
    pub w: Rational,
    pub lambda1: Rational,
    pub lambda2: Rational,
}

impl ParameterRow {
    pub fn shell(&self, i: usize) -> (usize, usize, usize) {
        match i {
            1 => (self.r1, self.n1, self.alpha1),
            2 => (self.r2, self.n2, self.alpha2),
            _ => panic!("shell index must be 1 or 2"),
        }
    }

    pub fn shell_weight(&self, i: usize) -> Rational {
        match i {
            1 => Rational::one(),
            2 => self.w.clone(),
            _ => panic!("shell index must be 1 or 2"),
        }
    }

    /// Parameters of the point-complemented design, with weights rescaled so
    /// that the new first shell has weight 1.
    pub fn complement(&self) -> ParameterRow {
        candidate_row(self.n, self.n - self.r2, self.n - self.r1, self.n2)
            .expect("complement of a feasible row is feasible")
    }

    pub fn key(&self) -> (usize, usize, usize, usize) {
        (self.n, self.r1, self.r2, self.n1)
    }
}

fn ratio(num: i64, den: i64) -> Option<Rational> {
    (den != 0).then(|| rational(num, den))
}

fn as_usize_in(v: &Rational, lo: i64, hi: i64) -> Option<usize> {
    as_i64(v).filter(|x| (lo..=hi).contains(x)).map(|x| x as usize)
}

/// The row for `(n, r1, r2, N1)` if every feasibility condition holds.
pub fn candidate_row(n: usize, r1: usize, r2: usize, n1: usize) -> Option<ParameterRow> {
    if !(1 <= r1 && r1 < r2 && r2 < n && 2 <= n1 && n1 < n) {
        return None;
    }
    let (ni, r1i, r2i, n1i) = (n as i64, r1 as i64, r2 as i64, n1 as i64);
    let n2 = n + 1 - n1;
    let w = ratio(n1i * r1i * (ni - n1i) * (ni - r1i), r2i * (n1i - 1) * (ni + 1 - n1i) * (ni - r2i))?;
    let alpha1 = ratio(2 * (ni - r1i) * r1i * n1i, ni * (n1i - 1))?;
    let alpha2 = ratio(2 * (ni - r2i) * (ni + 1 - n1i) * r2i, ni * (ni - n1i))?;
    let alpha_ok = |a: &Rational, r: i64| {
        is_even_integer(a) && as_usize_in(a, 2, (2 * r).min(2 * (ni - r))).is_some()
    };
    if !alpha_ok(&alpha1, r1i) || !alpha_ok(&alpha2, r2i) {
        return None;
    }
    let a = as_usize_in(&rational(r1i * (ni - r2i), ni), 0, r1i.min(ni - r2i))?;
    let gamma = r2 - r1 + 2 * a;

    // lambda_i C(n,i) = C(r1,i) N1 + w C(r2,i) N2
    let lambda = |i: i64| {
        let lhs = from_bigint(&(binomial(r1 as u64, i) * n1)) + &w * from_bigint(&(binomial(r2 as u64, i) * n2));
        lhs / from_bigint(&binomial(n as u64, i))
    };
    let (lambda1, lambda2) = (lambda(1), lambda(2));
    // with equal weights the lambdas count points and must be integers
    if w.is_one() && !(lambda1.is_integer() && lambda2.is_integer()) {
        return None;
    }
    Some(ParameterRow {
        n,
        r1,
        r2,
        n1,
        n2,
        alpha1: as_i64(&alpha1)? as usize,
        alpha2: as_i64(&alpha2)? as usize,
        gamma,
        a,
        w,
        lambda1,
        lambda2,
    })
}

/// All feasible rows for `n_min <= n <= n_max` in `(n, r1, r2, N1)` order.
pub fn enumerate_rows(n_min: usize, n_max: usize) -> Vec<ParameterRow> {
    (n_min.max(2)..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            (1..n).flat_map(move |r1| {
                (r1 + 1..n).flat_map(move |r2| (2..n).filter_map(move |n1| candidate_row(n, r1, r2, n1)))
            })
        })
        .collect()
}

/// `n(i)` labels numbering rows within each `n` from 1.
pub fn labels(rows: &[ParameterRow]) -> Vec<String> {
    let mut out = Vec::with_capacity(rows.len());
    let mut current = None;
    let mut index = 0;
    for row in rows {
        if current != Some(row.n) {
            current = Some(row.n);
            index = 0;
        }
        index += 1;
        out.push(format!("{}({})", row.n, index));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
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
}

impl From<&ParameterRow> for RowRecord {
    fn from(r: &ParameterRow) -> Self {
        RowRecord {
            n: r.n,
            r1: r.r1,
            r2: r.r2,
            n1: r.n1,
            n2: r.n2,
            alpha1: r.alpha1,
            alpha2: r.alpha2,
            gamma: r.gamma,
            w: format_rational(&r.w),
            lambda1: format_rational(&r.lambda1),
            lambda2: format_rational(&r.lambda2),
        }
    }
}

impl TryFrom<RowRecord> for ParameterRow {
    type Error = String;

    /// Accepts a record only if it is exactly the feasible row for its key.
    fn try_from(rec: RowRecord) -> Result<Self, String> {
        let row = candidate_row(rec.n, rec.r1, rec.r2, rec.n1)
            .ok_or_else(|| format!("({}, {}, {}, {}) is not feasible", rec.n, rec.r1, rec.r2, rec.n1))?;
        let w = parse_rational(&rec.w)?;
        let lambda1 = parse_rational(&rec.lambda1)?;
        let lambda2 = parse_rational(&rec.lambda2)?;
        let given = ParameterRow {
            n2: rec.n2,
            alpha1: rec.alpha1,
            alpha2: rec.alpha2,
            gamma: rec.gamma,
            w,
            lambda1,
            lambda2,
            ..row.clone()
        };
        if given != row {
            return Err(format!("record {rec:?} disagrees with computed row"));
        }
        Ok(row)
    }
}

pub const CSV_HEADER: &str = "n,r1,r2,N1,N2,alpha1,alpha2,gamma,w,lambda1,lambda2";

pub fn to_csv(rows: &[ParameterRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        writer.write_record(CSV_HEADER.split(',')).expect("in-memory write");
    }
    for row in rows {
        writer.serialize(RowRecord::from(row)).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn from_csv(text: &str) -> Result<Vec<ParameterRow>, String> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().map_err(|e| e.to_string())?.iter().map(str::to_owned).collect();
    if header.join(",") != CSV_HEADER {
        return Err(format!("unexpected header {:?}", header.join(",")));
    }
    reader
        .deserialize::<RowRecord>()
        .enumerate()
        .map(|(i, rec)| {
            let rec = rec.map_err(|e| format!("record {}: {e}", i + 1))?;
            ParameterRow::try_from(rec).map_err(|e| format!("record {}: {e}", i + 1))
        })
        .collect()
}

pub fn to_json_lines(rows: &[ParameterRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(&RowRecord::from(row)).expect("serializable"));
        out.push('\n');
    }
    out
}

pub fn from_json_lines(text: &str) -> Result<Vec<ParameterRow>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            let rec: RowRecord = serde_json::from_str(line).map_err(|e| format!("line {}: {e}", i + 1))?;
            ParameterRow::try_from(rec).map_err(|e| format!("line {}: {e}", i + 1))
        })
        .collect()
}

/// Fixed-width text table with an `n(i)` label column.
pub fn to_table(rows: &[ParameterRow]) -> String {
    let header = ["row", "r1", "r2", "N1", "N2", "alpha1", "alpha2", "gamma", "w", "lambda1", "lambda2"];
    let mut cells: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for (label, r) in labels(rows).into_iter().zip(rows) {
        cells.push(vec![
            label,
            r.r1.to_string(),
            r.r2.to_string(),
            r.n1.to_string(),
            r.n2.to_string(),
            r.alpha1.to_string(),
            r.alpha2.to_string(),
            r.gamma.to_string(),
            format_rational(&r.w),
            format_rational(&r.lambda1),
            format_rational(&r.lambda2),
        ]);
    }
    let widths: Vec<usize> = (0..header.len()).map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

/// Integer point count identities every row satisfies.
pub fn satisfies_count_identities(r: &ParameterRow) -> bool {
    let n1 = integer(r.n1 as i64);
    let n2 = integer(r.n2 as i64);
    let c = |m: usize| from_bigint(&binomial(m as u64, 2));
    let first = &n1 * integer(r.r1 as i64) + &r.w * &n2 * integer(r.r2 as i64) == integer(r.n as i64) * &r.lambda1;
    let second = n1 * c(r.r1) + &r.w * n2 * c(r.r2) == c(r.n) * &r.lambda2;
    first && second && !r.w.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_row() {
        let r = candidate_row(6, 2, 3, 3).unwrap();
        assert_eq!((r.n2, r.alpha1, r.alpha2, r.gamma), (4, 4, 4, 3));
        assert_eq!((r.w, r.lambda1, r.lambda2), (integer(1), integer(3), integer(1)));
    }

    #[test]
    fn weighted_row() {
        let r = candidate_row(30, 15, 28, 16).unwrap();
        assert_eq!((r.alpha1, r.alpha2, r.gamma), (16, 4, 15));
        assert_eq!((r.w, r.lambda1, r.lambda2), (integer(4), integer(64), integer(56)));
    }

    #[test]
    fn fractional_alpha_is_rejected() {
        assert!(candidate_row(6, 1, 2, 2).is_none());
        assert!(candidate_row(6, 3, 3, 3).is_none());
        assert!(candidate_row(6, 2, 3, 6).is_none());
    }

    #[test]
    fn empty_ranges() {
        assert_eq!(enumerate_rows(6, 6).len(), 2);
        assert!(enumerate_rows(7, 9).is_empty());
    }

    #[test]
    fn csv_round_trip() {
        let rows = enumerate_rows(6, 12);
        let text = to_csv(&rows);
        assert!(text.starts_with(CSV_HEADER));
        assert_eq!(from_csv(&text).unwrap(), rows);
        assert_eq!(from_json_lines(&to_json_lines(&rows)).unwrap(), rows);
    }

    #[test]
    fn tampered_record_is_rejected() {
        let text = to_csv(&enumerate_rows(6, 6)).replace(",3,1\n", ",3,2\n");
        assert!(from_csv(&text).is_err());
    }

    #[test]
    fn table_labels() {
        let table = to_table(&enumerate_rows(6, 6));
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].trim_start().starts_with("6(1)"));
        assert!(lines[2].trim_start().starts_with("6(2)"));
    }
}
