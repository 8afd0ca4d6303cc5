use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use reldesign::constructions::{
    complement_design, design_row, from_symmetric_complemented, from_symmetric_residual, hadamard_design,
    paley_design, projective_plane, SymmetricDesign,
};
use reldesign::constructions::catalog::hadamard_of_order;
use reldesign::design::{complement, load, save, shells_of, WeightedDesign};
use reldesign::feasibility::{enumerate_rows, labels, to_csv, to_json_lines, to_table, ParameterRow};
use reldesign::nonexistence::verdict::{verdict_json, DEFAULT_BUDGET};
use reldesign::nonexistence::{decide_all, Verdict, Witness};
use reldesign::scalar::format_rational;
use reldesign::verify::{verify_design, Violation};

const EXIT_FAILED: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;
const BUDGET_VAR: &str = "DESIGNS_SEARCH_BUDGET";

#[derive(Parser)]
#[command(name = "reldesign", version, about = "Tight relative 2-designs on two shells of H(n,2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the feasible parameter rows for a range of lengths.
    Enumerate {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
    },
    /// Check a weighted design file against every design criterion.
    Verify {
        #[arg(long)]
        design: PathBuf,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Build, verify and save a design.
    Construct {
        #[command(subcommand)]
        source: Source,
    },
    /// Decide existence for the parameter rows of one length.
    Decide {
        #[arg(long)]
        n: usize,
        /// 1-based index within the rows of length n.
        #[arg(long)]
        row_index: Option<usize>,
        /// Node limit for each shell search; DESIGNS_SEARCH_BUDGET takes precedence.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = VerdictFormat::Text)]
        format: VerdictFormat,
    },
    /// Run the bundled property checks.
    Selftest,
}

#[derive(Subcommand)]
enum Source {
    /// From a Hadamard matrix of order m + 1, giving a design in H(2m, 2).
    Hadamard {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        output: Output,
    },
    /// From a symmetric 2-(n+1, k, lambda) design, giving a design in H(n, 2).
    Symmetric {
        #[command(flatten)]
        input: SymmetricInput,
        #[arg(long, value_enum, default_value_t = Variant::Residual)]
        variant: Variant,
        /// Use the complementary symmetric design.
        #[arg(long)]
        complement: bool,
        /// Point of the symmetric design to delete.
        #[arg(long, default_value_t = 0)]
        base: usize,
        /// Also write the symmetric design used.
        #[arg(long)]
        save_symmetric: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SymmetricInput {
    /// Projective plane of prime-power order q.
    #[arg(long)]
    plane: Option<u64>,
    /// Quadratic residues of GF(q), q = 3 mod 4.
    #[arg(long)]
    paley: Option<u64>,
    /// Symmetric design file.
    #[arg(long)]
    from: Option<PathBuf>,
}

#[derive(Args)]
struct Output {
    /// Complement every point of the result.
    #[arg(long)]
    flip: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerdictFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Residual,
    Complemented,
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_MALFORMED, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { n_min, n_max, format } => enumerate(n_min, n_max, format),
        Command::Verify { design, t } => verify(&design, t),
        Command::Construct { source } => construct(source),
        Command::Decide { n, row_index, budget, format } => decide(n, row_index, budget, format),
        Command::Selftest => selftest(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn check_length(n: usize) -> Result<(), Failure> {
    if !(2..=64).contains(&n) {
        return Err(malformed(format!("length {n} outside 2..=64")));
    }
    Ok(())
}

fn enumerate(n_min: usize, n_max: usize, format: TableFormat) -> Result<u8, Failure> {
    check_length(n_min)?;
    check_length(n_max)?;
    if n_min > n_max {
        return Err(malformed(format!("--n-min {n_min} exceeds --n-max {n_max}")));
    }
    let rows = enumerate_rows(n_min, n_max);
    let text = match format {
        TableFormat::Csv => to_csv(&rows),
        TableFormat::Json => to_json_lines(&rows),
        TableFormat::Table => to_table(&rows),
    };
    print!("{text}");
    Ok(0)
}

fn row_label(row: &ParameterRow) -> String {
    let rows = enumerate_rows(row.n, row.n);
    let i = rows.iter().position(|r| r == row).expect("rows of a length contain each feasible row");
    labels(&rows)[i].clone()
}

fn describe_violation(v: &Option<Violation>) -> String {
    match v {
        None => String::new(),
        Some(v) => format!(
            " (j = {}, u = {}: observed {}, expected {})",
            v.j,
            v.u,
            format_rational(&v.observed),
            format_rational(&v.expected)
        ),
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn print_report(d: &WeightedDesign, t: usize) -> bool {
    let report = verify_design(d, t);
    let shells: Vec<String> = shells_of(d)
        .shells
        .iter()
        .map(|s| format!("{} points of weight {}", s.count, s.r))
        .collect();
    println!("design: n = {}, {}", d.n(), shells.join(", "));
    println!("moments t = {t}: {}{}", mark(report.moments.ok), describe_violation(&report.moments.first_violation));
    let lambdas: Vec<String> = report.balanced.lambdas.iter().map(format_rational).collect();
    println!(
        "balanced t = {t}: {} (lambda = [{}]){}",
        mark(report.balanced.ok),
        lambdas.join(", "),
        describe_violation(&report.balanced.first_violation)
    );
    match &report.tightness {
        Ok(r) => println!("tightness: {} (size {}, bound {})", mark(r.tight), r.size, r.bound),
        Err(e) => println!("tightness: FAIL ({e})"),
    }
    match &report.frame {
        Ok(f) => println!("frame: {} (gram {}, dual {})", mark(f.ok()), mark(f.gram_ok), mark(f.dual_ok)),
        Err(e) => println!("frame: FAIL ({e})"),
    }
    println!("constant weight per shell: {}", mark(report.constant_weights));
    match &report.relations {
        Ok(r) => println!(
            "relations: {} (within {}: {:?}, within {}: {:?}, across: {:?})",
            mark(r.is_coherent()),
            r.r1,
            r.within1,
            r.r2,
            r.within2,
            r.across
        ),
        Err(e) => println!("relations: FAIL ({e})"),
    }
    if let Some(row) = design_row(d) {
        println!("row: {}", row_label(&row));
    }
    let passed = report.passed();
    println!("result: {}", if passed { "PASS" } else { "FAIL" });
    passed
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn verify(path: &Path, t: usize) -> Result<u8, Failure> {
    let d = load(&read(path)?).map_err(|e| malformed(format!("{}: {e}", path.display())))?;
    Ok(if print_report(&d, t) { 0 } else { EXIT_FAILED })
}

fn finish(design: WeightedDesign, output: &Output) -> Result<u8, Failure> {
    let design = if output.flip { complement(&design) } else { design };
    let passed = print_report(&design, 2);
    fs::write(&output.out, save(&design))
        .map_err(|e| Failure { code: EXIT_FAILED, message: format!("{}: {e}", output.out.display()) })?;
    println!("saved: {}", output.out.display());
    Ok(if passed { 0 } else { EXIT_FAILED })
}

fn construct(source: Source) -> Result<u8, Failure> {
    match source {
        Source::Hadamard { m, output } => {
            if m % 4 != 3 {
                return Err(malformed(format!("m = {m} is not 3 mod 4")));
            }
            let h = hadamard_of_order(m + 1)
                .ok_or_else(|| malformed(format!("no Hadamard matrix of order {} is generated", m + 1)))?;
            let d = hadamard_design(&h).map_err(|e| malformed(e.to_string()))?;
            finish(d, &output)
        }
        Source::Symmetric { input, variant, complement, base, save_symmetric, output } => {
            let sym = if let Some(q) = input.plane {
                projective_plane(q)
            } else if let Some(q) = input.paley {
                paley_design(q)
            } else {
                let path = input.from.expect("one input is required");
                SymmetricDesign::from_json(&read(&path)?)
            }
            .map_err(|e| malformed(e.to_string()))?;
            let sym = if complement { complement_design(&sym).map_err(|e| malformed(e.to_string()))? } else { sym };
            if base >= sym.v {
                return Err(malformed(format!("base point {base} outside 0..{}", sym.v)));
            }
            if let Some(path) = save_symmetric {
                fs::write(&path, sym.to_json())
                    .map_err(|e| Failure { code: EXIT_FAILED, message: format!("{}: {e}", path.display()) })?;
            }
            let (v, k, lambda) = sym.parameters();
            println!("symmetric design: 2-({v},{k},{lambda})");
            let d = match variant {
                Variant::Residual => from_symmetric_residual(&sym, base),
                Variant::Complemented => from_symmetric_complemented(&sym, base),
            }
            .map_err(|e| malformed(e.to_string()))?;
            finish(d, &output)
        }
    }
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| malformed(format!("{BUDGET_VAR}={s:?} is not a node count"))),
        Err(_) => Ok(flag.unwrap_or(DEFAULT_BUDGET)),
    }
}

fn decide(n: usize, row_index: Option<usize>, flag: Option<u64>, format: VerdictFormat) -> Result<u8, Failure> {
    check_length(n)?;
    let budget = budget(flag)?;
    let rows = enumerate_rows(n, n);
    let names = labels(&rows);
    let chosen: Vec<usize> = match row_index {
        None => (0..rows.len()).collect(),
        Some(i) if i >= 1 && i <= rows.len() => vec![i - 1],
        Some(i) => return Err(malformed(format!("row index {i} outside 1..={} for n = {n}", rows.len()))),
    };
    let selected: Vec<ParameterRow> = chosen.iter().map(|&i| rows[i].clone()).collect();
    let verdicts = decide_all(&selected, budget);
    let mut undecided = false;
    for (&i, v) in chosen.iter().zip(&verdicts) {
        undecided |= matches!(v, Verdict::Undecided(_));
        match format {
            VerdictFormat::Json => println!("{}", verdict_json(&rows[i], &names[i], v)),
            VerdictFormat::Text => println!("{} {}", names[i], verdict_text(v)),
        }
    }
    if rows.is_empty() {
        eprintln!("no feasible rows for n = {n}");
    }
    Ok(if undecided { EXIT_UNDECIDED } else { 0 })
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Refuted(r) => format!("refuted [{}]: {}", r.kind.as_str(), r.trace.join("; ")),
        Verdict::Found(Witness::Design { source, .. }) => format!("found: {source}"),
        Verdict::Found(Witness::Blocks { shell, r, blocks }) => {
            let blocks: Vec<String> = blocks.iter().map(ToString::to_string).collect();
            format!("found: shell {shell} blocks of weight {r}: {}", blocks.join(" "))
        }
        Verdict::Undecided(why) => format!("undecided: {why}"),
    }
}

fn selftest() -> Result<u8, Failure> {
    let results = reldesign::selftest::run();
    for r in &results {
        println!("{} {}: {} ({:.2}s)", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail, r.seconds);
    }
    Ok(if results.iter().all(|r| r.passed) { 0 } else { EXIT_FAILED })
}
