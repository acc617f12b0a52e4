//! `cbc`: verification runs, family surveys and restricted explorers.

mod checks;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use cbc_core::breadth::FFunction;
use cbc_core::corpus::{build_group, parse_group_file, survey_csv, survey_family, SURVEY_CSV_HEADER};
use cbc_core::group::{GroupTable, DEFAULT_ORDER_CAP};
use cbc_core::theorems::{
    class_breadth_check, conjecture_report, SurveyRow, DEFAULT_NORMAL_CAP, DEFAULT_SUBSET_CAP,
};
use cbc_core::Error;

use checks::{Check, CheckOutcome};

#[derive(Parser)]
#[command(name = "cbc", version, about = "Class-breadth verification for finite p-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks on one group file.
    Verify(VerifyArgs),
    /// Class-breadth rows for a family of groups.
    Survey(SurveyArgs),
    /// Restricted covering-invariant report for one group file.
    Explore(ExploreArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    checks: Vec<CheckArg>,
    /// Write the class-breadth subgroup certificate here.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_NORMAL_CAP)]
    max_normals: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    ClassBreadth,
    Theorem2,
    Theorem3,
    Lemmas,
    Prop1,
    All,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long)]
    family: String,
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<u64>,
    #[arg(long, default_value_t = 2187)]
    max_order: u128,
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct ExploreArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_NORMAL_CAP)]
    max_normals: usize,
    #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
    subset_cap: usize,
}

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn order_cap() -> usize {
    std::env::var("CBC_ORDER_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

fn load_group(path: &Path) -> Result<GroupTable, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut spec = parse_group_file(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    spec.label = path
        .file_stem()
        .map_or_else(|| "input".to_string(), |s| s.to_string_lossy().into_owned());
    build_group(&spec, order_cap()).map_err(|e| format!("{}: {e}", path.display()))
}

fn selected_checks(args: &[CheckArg]) -> Vec<Check> {
    let all = [
        Check::ClassBreadth,
        Check::Theorem2,
        Check::Theorem3,
        Check::Lemmas,
        Check::Prop1,
    ];
    if args.contains(&CheckArg::All) {
        return all.to_vec();
    }
    all.into_iter()
        .filter(|c| {
            args.contains(&match c {
                Check::ClassBreadth => CheckArg::ClassBreadth,
                Check::Theorem2 => CheckArg::Theorem2,
                Check::Theorem3 => CheckArg::Theorem3,
                Check::Lemmas => CheckArg::Lemmas,
                Check::Prop1 => CheckArg::Prop1,
            })
        })
        .collect()
}

fn verify(args: VerifyArgs) -> ExitCode {
    let group = match load_group(&args.input) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    println!("group {} (p = {}, order {})", group.label(), group.prime(), group.order());
    let mut failed = false;
    let mut rows: Vec<CheckOutcome> = Vec::new();
    for check in selected_checks(&args.checks) {
        let outcome = checks::run(check, &group, args.max_normals);
        failed |= !outcome.passed;
        rows.push(outcome);
    }
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &rows {
        println!(
            "{:width$}  {}  {}",
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.detail
        );
    }
    if let Some(path) = &args.json {
        match rows.iter().find_map(|r| r.certificate.as_ref()) {
            Some(json) => {
                if let Err(e) = std::fs::write(path, json) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(EXIT_INPUT);
                }
            }
            None => eprintln!("note: no certificate produced; select theorem2 to write one"),
        }
    }
    if failed {
        ExitCode::from(EXIT_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn survey_row(spec: &cbc_core::corpus::GroupSpec, cap: usize) -> SurveyRow {
    match build_group(spec, cap).and_then(|g| class_breadth_check(&g)) {
        Ok(row) => row,
        Err(e @ Error::OrderCapExceeded { .. }) => {
            SurveyRow::skipped(&spec.label, spec.prime, spec.expected_order, e.to_string())
        }
        Err(e) => SurveyRow::skipped(&spec.label, spec.prime, spec.expected_order, format!("error: {e}")),
    }
}

fn survey(args: SurveyArgs) -> ExitCode {
    let specs = match survey_family(&args.family, &args.p, args.max_order) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let cap = order_cap();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(args.parallel.max(1))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let rows: Vec<SurveyRow> = pool.install(|| specs.par_iter().map(|s| survey_row(s, cap)).collect());

    println!("{}", SURVEY_CSV_HEADER.replace(',', "\t"));
    for r in &rows {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}{}",
            r.label,
            r.p,
            opt(r.order.map(|v| v.to_string())),
            opt(r.breadth.map(|v| v.to_string())),
            opt(r.class.map(|v| v.to_string())),
            r.status,
            opt(r.t2_index.map(|v| v.to_string())),
            opt(r.t2_class.map(|v| v.to_string())),
            r.ms,
            r.note.as_ref().map(|n| format!("\t({n})")).unwrap_or_default()
        );
    }
    if let Some(path) = &args.csv {
        if let Err(e) = std::fs::write(path, survey_csv(&rows)) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT);
        }
    }
    let violations = rows
        .iter()
        .filter(|r| r.status == cbc_core::theorems::RowStatus::Fails)
        .count();
    if violations > 0 {
        eprintln!("{violations} row(s) with cl(G) > b(G) + 1");
        ExitCode::from(EXIT_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn explore(args: ExploreArgs) -> ExitCode {
    let group = match load_group(&args.input) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let f = FFunction::lower_central(&group);
    let report = conjecture_report(&f, args.max_normals, args.subset_cap);
    for line in report.lines() {
        println!("{line}");
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(a) => verify(a),
        Command::Survey(a) => survey(a),
        Command::Explore(a) => explore(a),
    }
}
