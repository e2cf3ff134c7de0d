//! `aplattice`: command-line front end for the lattice of arithmetic
//! progressions.
//!
//! Exit status: 0 when every verdict passes, 1 when one fails, 2 on usage,
//! bound or I/O errors.

mod checks;
mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use aplattice::complexes::{chain_counts, crosscut_complex, order_complex};
use aplattice::homology::reduced_homology;
use aplattice::lattice::{count_progressions_formula, lattice_size_formula, Lattice, DEFAULT_BOUND};
use aplattice::structure::COMODERNISM_BOUND;
use aplattice::MoebiusMethod;
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::RunReport;

const HOMOLOGY_BOUND: u32 = 8;
const COMPLEX_BOUND: u32 = 10;

#[derive(Parser)]
#[command(name = "aplattice", version, about = "The lattice L_n of arithmetic progressions in {1..n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print p(n,k), b(n,k) or |L_n| as TSV.
    Table {
        kind: TableKind,
        #[arg(long, default_value_t = 11)]
        n_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Compute M_n = μ(∅, [n]) by one method and compare with μ(n-1).
    Mobius {
        /// A single n or an inclusive range `a..b`.
        range: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value = "definition")]
        method: MoebiusMethod,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named check for one n or an inclusive range `a..b`.
    Check {
        name: CheckName,
        range: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Write a DOT or JSON artifact.
    Export {
        kind: ExportKind,
        #[arg(long)]
        n: u32,
        /// Which complex for complex-json and homology-json.
        #[arg(long, value_enum, default_value_t = ComplexKind::Order)]
        complex: ComplexKind,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Lift the default size bounds (prints a cost warning).
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    P,
    B,
    Size,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckName {
    Theorem1,
    Coatoms,
    Comodernistic,
    Complemented,
    Folkman,
    Euler,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    HasseDot,
    LatticeJson,
    ComplexJson,
    HomologyJson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComplexKind {
    Order,
    Crosscut,
}

enum Failure {
    Usage(String),
    Verdict,
}

impl From<aplattice::Error> for Failure {
    fn from(e: aplattice::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Returns the effective bound, warning when it is lifted.
fn enforce_bound(what: &str, n: u32, bound: u32, allow_large: bool) -> Result<u32, Failure> {
    if n <= bound {
        return Ok(bound);
    }
    if !allow_large {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the {what} bound {bound}; pass --allow-large to proceed anyway"
        )));
    }
    eprintln!("warning: n = {n} exceeds the {what} bound {bound}; cost grows steeply with n");
    Ok(n)
}

fn parse_range(range: Option<&str>, n: Option<u32>, n_max: Option<u32>) -> Result<(u32, u32), Failure> {
    let bad = |s: &str| Failure::Usage(format!("expected `n` or `a..b`, got {s:?}"));
    let parsed = match range {
        Some(s) => match s.split_once("..") {
            Some((a, b)) => {
                let a: u32 = a.parse().map_err(|_| bad(s))?;
                let b: u32 = b.trim_start_matches('=').parse().map_err(|_| bad(s))?;
                Some((a, b))
            }
            None => {
                let v: u32 = s.parse().map_err(|_| bad(s))?;
                Some((v, v))
            }
        },
        None => None,
    };
    let (lo, hi) = match (parsed, n, n_max) {
        (Some(r), None, None) => r,
        (None, Some(v), None) => (v, v),
        (None, Some(a), Some(b)) => (a, b),
        (None, None, Some(b)) => (0, b),
        (None, None, None) => return Err(Failure::Usage("no n given".into())),
        _ => return Err(Failure::Usage("give either a positional range or --n/--n-max".into())),
    };
    if lo > hi {
        return Err(Failure::Usage(format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(report: &RunReport, json: bool) -> Result<(), Failure> {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table { kind, n_max, out, common } => {
            enforce_bound("table", n_max, DEFAULT_BOUND, common.allow_large)?;
            let tsv = table_tsv(kind, n_max)?;
            if common.json {
                let mut report = RunReport::new("table");
                report.param("n_max", n_max);
                report.table(table_name(kind), tsv);
                emit(&format!("{}\n", report.to_json()), out.as_ref())
            } else {
                emit(&tsv, out.as_ref())
            }
        }
        Command::Mobius { range, n, method, common } => {
            let (lo, hi) = parse_range(range.as_deref(), n, None)?;
            enforce_bound("Möbius", hi, DEFAULT_BOUND, common.allow_large)?;
            let mut report = RunReport::new("mobius");
            report.param("method", method).param("n", format!("{lo}..{hi}"));
            for n in lo..=hi {
                checks::mobius(&mut report, n, method)?;
            }
            finish(&report, common.json)
        }
        Command::Check { name, range, n, n_max, common } => {
            let (lo, hi) = parse_range(range.as_deref(), n, n_max)?;
            let (bound, min_n) = match name {
                CheckName::Theorem1 => (DEFAULT_BOUND, 0),
                CheckName::Coatoms => (DEFAULT_BOUND, 0),
                CheckName::Comodernistic => (COMODERNISM_BOUND, 0),
                CheckName::Complemented => (DEFAULT_BOUND, 2),
                CheckName::Folkman => (HOMOLOGY_BOUND, 4),
                CheckName::Euler => (COMPLEX_BOUND, 2),
            };
            if lo < min_n {
                return Err(Failure::Usage(format!("this check starts at n = {min_n}")));
            }
            let bound = enforce_bound("check", hi, bound, common.allow_large)?;
            let mut report = RunReport::new("check");
            report.param("name", check_name(name)).param("n", format!("{lo}..{hi}"));
            for n in lo..=hi {
                match name {
                    CheckName::Theorem1 => checks::theorem1(&mut report, n)?,
                    CheckName::Coatoms => checks::coatom_check(&mut report, n, bound)?,
                    CheckName::Comodernistic => checks::comodernism(&mut report, n, bound)?,
                    CheckName::Complemented => checks::complemented(&mut report, n, bound)?,
                    CheckName::Folkman => checks::folkman(&mut report, n, bound)?,
                    CheckName::Euler => checks::euler(&mut report, n, bound)?,
                }
            }
            finish(&report, common.json)
        }
        Command::Export { kind, n, complex, out, common } => {
            let bound = match kind {
                ExportKind::HasseDot | ExportKind::LatticeJson => DEFAULT_BOUND,
                ExportKind::ComplexJson => COMPLEX_BOUND,
                ExportKind::HomologyJson => HOMOLOGY_BOUND,
            };
            let bound = enforce_bound("export", n, bound, common.allow_large)?;
            let lattice = Lattice::build_with_bound(n, bound)?;
            let build_complex = || match complex {
                ComplexKind::Order => order_complex(&lattice),
                ComplexKind::Crosscut => crosscut_complex(&lattice),
            };
            let text = match kind {
                ExportKind::HasseDot => lattice.to_dot(),
                ExportKind::LatticeJson => lattice.to_json(),
                ExportKind::ComplexJson => build_complex()?.to_json(),
                ExportKind::HomologyJson => reduced_homology(&build_complex()?)?.to_json(),
            };
            let text = if text.ends_with('\n') { text } else { text + "\n" };
            emit(&text, out.as_ref())
        }
    }
}

fn table_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::P => "p",
        TableKind::B => "b",
        TableKind::Size => "size",
    }
}

fn check_name(name: CheckName) -> &'static str {
    match name {
        CheckName::Theorem1 => "theorem1",
        CheckName::Coatoms => "coatoms",
        CheckName::Comodernistic => "comodernistic",
        CheckName::Complemented => "complemented",
        CheckName::Folkman => "folkman",
        CheckName::Euler => "euler",
    }
}

/// Header line, then one ragged row per `n`: `p` has columns `k = 0..n`,
/// `b` has `k = 1..n`, `size` has `|L_n|`.
fn table_tsv(kind: TableKind, n_max: u32) -> Result<String, Failure> {
    let mut out = String::new();
    match kind {
        TableKind::P => {
            let cols: Vec<String> = (0..=n_max).map(|k| format!("p_n{k}")).collect();
            writeln!(out, "n\t{}", cols.join("\t")).unwrap();
            for n in 1..=n_max {
                let row: Vec<String> =
                    (0..=n).map(|k| count_progressions_formula(n.into(), k.into()).to_string()).collect();
                writeln!(out, "{n}\t{}", row.join("\t")).unwrap();
            }
        }
        TableKind::B => {
            let cols: Vec<String> = (1..=n_max).map(|k| format!("b_n{k}")).collect();
            writeln!(out, "n\t{}", cols.join("\t")).unwrap();
            let table = chain_counts(n_max.max(1))?;
            for n in 1..=n_max {
                let row: Vec<String> = table.row(n).iter().map(u128::to_string).collect();
                writeln!(out, "{n}\t{}", row.join("\t")).unwrap();
            }
        }
        TableKind::Size => {
            writeln!(out, "n\tsize").unwrap();
            for n in 0..=n_max {
                writeln!(out, "{n}\t{}", lattice_size_formula(n.into())?).unwrap();
            }
        }
    }
    Ok(out)
}
