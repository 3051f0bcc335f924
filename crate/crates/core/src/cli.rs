//! The `qtruth` command line.
//!
//! ```text
//! qtruth eval       --scenario FILE --formula TEXT [--policy NAME]
//! qtruth lattice    --scenario FILE [--checks LIST]
//! qtruth experiment --scenario FILE [--trials N] [--seed S] [--out FILE]
//! qtruth limit      --dims 2,4,8 [--family clock-shift|diagonal]
//! qtruth tables     [--system bivalent|kleene3|lukasiewicz]
//! ```
//!
//! Every subcommand accepts `--json`. Numbers are printed with 12 significant
//! digits in both output modes. Exit status is 0 on success, 2 when the input
//! is rejected and 1 when a computation fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::experiment::{commutator_sweep, run_patterns, simulate_which_way, OperatorFamily};
use crate::formula::{bind_and_evaluate, parse_formula, print_formula, ScenarioDocument};
use crate::lattice::{LatticeContext, Subspace};
use crate::mvl::{truth_tables, LogicSystem, TruthValue};
use crate::numeric::Tolerance;

#[derive(Debug, Parser)]
#[command(
    name = "qtruth",
    version,
    about = "Truth values of quantum propositions"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula against a scenario.
    Eval {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        formula: String,
        /// Overrides the scenario's policy.
        #[arg(long, value_enum)]
        policy: Option<PolicyArg>,
    },
    /// Check lattice laws on the scenario's atoms.
    Lattice {
        #[arg(long)]
        scenario: PathBuf,
        /// Comma-separated subset of checks; all by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
    },
    /// Interference patterns and which-way detection for the scenario's experiment.
    Experiment {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Overrides the experiment's seed; decimal or 0x-prefixed hex.
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate operator and spectral-projector commutator norms by dimension.
    Limit {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, value_enum, default_value_t = FamilyArg::ClockShift)]
        family: FamilyArg,
    },
    /// Print the connective tables of a logic system.
    Tables {
        #[arg(long, value_enum, default_value_t = SystemArg::Kleene3)]
        system: SystemArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Bivalent,
    Born,
    Super,
    Kleene3,
    Lukasiewicz,
}

impl PolicyArg {
    fn tag(self) -> &'static str {
        match self {
            PolicyArg::Bivalent => "bivalent",
            PolicyArg::Born => "born",
            PolicyArg::Super => "super",
            PolicyArg::Kleene3 => "kleene3",
            PolicyArg::Lukasiewicz => "lukasiewicz",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Compatibility,
    Complement,
    Absorption,
    DeMorgan,
    Orthomodularity,
    Distributivity,
}

impl Check {
    const ALL: [Check; 6] = [
        Check::Compatibility,
        Check::Complement,
        Check::Absorption,
        Check::DeMorgan,
        Check::Orthomodularity,
        Check::Distributivity,
    ];

    fn name(self) -> &'static str {
        match self {
            Check::Compatibility => "compatibility",
            Check::Complement => "complement",
            Check::Absorption => "absorption",
            Check::DeMorgan => "de-morgan",
            Check::Orthomodularity => "orthomodularity",
            Check::Distributivity => "distributivity",
        }
    }

    /// Laws every subspace lattice satisfies; the others are reported, not required.
    fn is_law(self) -> bool {
        !matches!(self, Check::Compatibility | Check::Distributivity)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    ClockShift,
    Diagonal,
}

impl From<FamilyArg> for OperatorFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::ClockShift => OperatorFamily::ClockShift,
            FamilyArg::Diagonal => OperatorFamily::Diagonal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    Bivalent,
    Kleene3,
    Lukasiewicz,
}

impl From<SystemArg> for LogicSystem {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::Bivalent => LogicSystem::Bivalent,
            SystemArg::Kleene3 => LogicSystem::Kleene3,
            SystemArg::Lukasiewicz => LogicSystem::LukasiewiczFuzzy,
        }
    }
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim().replace('_', "");
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

/// Failure of a subcommand, split by exit status.
#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    /// Unreadable or unwritable input, rejected before any computation.
    Input(String),
    /// I/O failure after the computation ran.
    Output(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) if e.is_validation() => 2,
            CliError::Input(_) => 2,
            CliError::Lib(_) | CliError::Output(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Input(m) | CliError::Output(m) => f.write_str(m),
        }
    }
}

/// `%.12g`: twelve significant digits, trailing zeros trimmed.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        trim_fraction(format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!(
            "{}e{sign}{:02}",
            trim_fraction(mantissa.to_string()),
            exp.abs()
        )
    }
}

fn trim_fraction(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `x` rounded to twelve significant digits.
fn round12(x: f64) -> f64 {
    if x.is_finite() {
        format_number(x).parse().expect("formatted float parses")
    } else {
        x
    }
}

fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round12(n.as_f64().expect("f64 number"));
            *v = json!(x);
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

fn truth_text(t: TruthValue) -> String {
    match t {
        TruthValue::Undefined => "undefined".into(),
        TruthValue::Degree(x) => format_number(x),
    }
}

/// Renders rows as aligned columns; the first column is left-aligned, the rest right-aligned.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut text = String::new();
        for (k, (cell, &w)) in cells.zip(&widths).enumerate() {
            if k > 0 {
                text.push_str("  ");
            }
            let pad = w - cell.chars().count();
            if k == 0 {
                text.push_str(cell);
                text.extend(std::iter::repeat_n(' ', pad));
            } else {
                text.extend(std::iter::repeat_n(' ', pad));
                text.push_str(cell);
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(&mut headers.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn load(path: &Path) -> Result<ScenarioDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("scenario {}: {e}", path.display())))?;
    ScenarioDocument::from_json(&text).map_err(|e| match e {
        Error::Scenario(m) => CliError::Input(format!("scenario {}: {m}", path.display())),
        other => other.into(),
    })
}

/// Output of a subcommand in both renderings.
struct Report {
    text: String,
    json: Value,
}

fn eval(path: &Path, formula: &str, policy: Option<PolicyArg>) -> Result<Report, CliError> {
    let doc = load(path)?;
    let f = parse_formula(formula).map_err(|e| CliError::Lib(e.into()))?;
    let sc = doc.scenario(policy.map(PolicyArg::tag), Tolerance::default())?;
    let ev = bind_and_evaluate(&f, &sc)?;
    let printed = print_formula(&f);
    let policy = sc.policy.name();
    let rank = ev.lattice_element.as_ref().map(Subspace::rank);

    let mut text = format!(
        "formula={printed}\npolicy={policy}\ntruth={}\n",
        truth_text(ev.truth)
    );
    if let Some(p) = ev.probability {
        writeln!(text, "probability={}", format_number(p)).unwrap();
    }
    if let Some(r) = rank {
        writeln!(text, "rank={r}").unwrap();
    }
    Ok(Report {
        text,
        json: json!({
            "command": "eval",
            "formula": printed,
            "policy": policy,
            "truth": ev.truth.as_degree(),
            "defined": ev.truth.is_defined(),
            "probability": ev.probability,
            "rank": rank,
        }),
    })
}

struct CheckRow {
    check: Check,
    atoms: Vec<String>,
    value: f64,
    holds: bool,
}

fn lattice(path: &Path, checks: &[Check]) -> Result<Report, CliError> {
    let doc = load(path)?;
    // Lattice checks never consult the state or policy.
    let sc = doc.scenario(Some("super"), Tolerance::default())?;
    if sc.atoms.is_empty() {
        return Err(Error::config("atoms", "lattice checks need at least one atom").into());
    }
    let l = LatticeContext::new(sc.dimension, sc.tol)?;
    let eps = sc.tol.proj;
    let checks: Vec<Check> = if checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        Check::ALL
            .into_iter()
            .filter(|c| checks.contains(c))
            .collect()
    };
    let atoms: Vec<(&String, &Subspace)> = sc.atoms.iter().collect();
    let mut pairs = Vec::new();
    for i in 0..atoms.len() {
        for j in (i + 1)..atoms.len() {
            pairs.push((atoms[i], atoms[j]));
        }
    }

    let mut rows = Vec::new();
    for &check in &checks {
        let mut push = |names: &[&String], value: f64, holds: bool| {
            rows.push(CheckRow {
                check,
                atoms: names.iter().map(|s| s.to_string()).collect(),
                value,
                holds,
            })
        };
        match check {
            Check::Compatibility => {
                for &((na, a), (nb, b)) in &pairs {
                    let c = l.commutator_norm(a, b)?;
                    push(&[na, nb], c, c <= sc.tol.eq);
                }
            }
            Check::Complement => {
                for &(na, a) in &atoms {
                    let ac = l.orthocomplement(a)?;
                    let r = l
                        .meet(a, &ac)?
                        .distance(l.bottom())?
                        .max(l.join(a, &ac)?.distance(l.top())?);
                    push(&[na], r, r <= eps);
                }
            }
            Check::Absorption => {
                for &((na, a), (nb, b)) in &pairs {
                    let r = l
                        .meet(a, &l.join(a, b)?)?
                        .distance(a)?
                        .max(l.join(a, &l.meet(a, b)?)?.distance(a)?);
                    push(&[na, nb], r, r <= eps);
                }
            }
            Check::DeMorgan => {
                for &((na, a), (nb, b)) in &pairs {
                    let lhs = l.orthocomplement(&l.meet(a, b)?)?;
                    let rhs = l.join(&l.orthocomplement(a)?, &l.orthocomplement(b)?)?;
                    let r = lhs.distance(&rhs)?;
                    push(&[na, nb], r, r <= eps);
                }
            }
            Check::Orthomodularity => {
                // a ≤ a ⊔ b always, so every pair yields a nested instance.
                for &((na, a), (nb, b)) in &pairs {
                    let r = l.orthomodular_residual(a, &l.join(a, b)?)?;
                    push(&[na, nb], r, r <= eps);
                }
            }
            Check::Distributivity => {
                for &(na, a) in &atoms {
                    for &((nb, b), (nc, c)) in &pairs {
                        if na == nb || na == nc {
                            continue;
                        }
                        let r = l.distributivity_defect(a, b, c)?;
                        push(&[na, nb, nc], r, r <= eps);
                    }
                }
            }
        }
    }
    let violations = rows.iter().filter(|r| r.check.is_law() && !r.holds).count();

    let mut text = format!("dimension={}\n", sc.dimension);
    let atom_rows: Vec<Vec<String>> = atoms
        .iter()
        .map(|(n, s)| vec![n.to_string(), s.rank().to_string()])
        .collect();
    text.push_str(&table(&["atom", "rank"], &atom_rows));
    let check_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.check.name().to_string(),
                r.atoms.join(","),
                format_number(r.value),
                r.holds.to_string(),
            ]
        })
        .collect();
    text.push('\n');
    text.push_str(&table(&["check", "atoms", "value", "holds"], &check_rows));
    writeln!(text, "\nchecks={} law_violations={violations}", rows.len()).unwrap();

    Ok(Report {
        text,
        json: json!({
            "command": "lattice",
            "dimension": sc.dimension,
            "atoms": atoms.iter().map(|(n, s)| json!({"name": n, "rank": s.rank()})).collect::<Vec<_>>(),
            "checks": rows.iter().map(|r| json!({
                "check": r.check.name(),
                "atoms": r.atoms,
                "value": r.value,
                "holds": r.holds,
            })).collect::<Vec<_>>(),
            "law_violations": violations,
        }),
    })
}

fn experiment(
    path: &Path,
    trials: u64,
    seed: Option<u64>,
    out: Option<&Path>,
) -> Result<Report, CliError> {
    let doc = load(path)?;
    let mut cfg = doc.experiment(&Tolerance::default())?;
    if let Some(seed) = seed {
        cfg = cfg.with_seed(seed);
    }
    let patterns = run_patterns(&cfg)?;
    let which_way = simulate_which_way(&cfg, trials)?;

    let mut json = json!({
        "command": "experiment",
        "n_paths": cfg.n_paths(),
        "screen_cells": cfg.screen_cells(),
        "patterns": patterns,
        "which_way": which_way,
    });
    round_json(&mut json);

    let mut text = format!(
        "paths={} cells={} seed={}\n\n",
        cfg.n_paths(),
        cfg.screen_cells(),
        cfg.seed()
    );
    let cell_rows: Vec<Vec<String>> = (0..cfg.screen_cells())
        .map(|k| {
            vec![
                k.to_string(),
                format_number(patterns.coherent[k]),
                format_number(patterns.mixture[k]),
                format_number(patterns.interference_term[k]),
            ]
        })
        .collect();
    text.push_str(&table(
        &["cell", "coherent", "mixture", "interference"],
        &cell_rows,
    ));
    if !patterns.region_probs.is_empty() {
        let region_rows: Vec<Vec<String>> = patterns
            .region_probs
            .iter()
            .map(|r| {
                let conditional: Vec<String> =
                    r.conditional.iter().map(|&p| format_number(p)).collect();
                vec![
                    r.name.clone(),
                    format_number(r.coherent),
                    format_number(r.mixture),
                    conditional.join(","),
                ]
            })
            .collect();
        text.push('\n');
        text.push_str(&table(
            &["region", "coherent", "mixture", "conditional"],
            &region_rows,
        ));
    }
    let path_rows: Vec<Vec<String>> = (0..cfg.n_paths())
        .map(|i| {
            vec![
                i.to_string(),
                which_way.clicks[i].to_string(),
                format_number(which_way.frequencies[i]),
                format_number(which_way.expected[i]),
            ]
        })
        .collect();
    writeln!(text, "\ntrials={}", which_way.trials).unwrap();
    text.push_str(&table(
        &["path", "clicks", "frequency", "expected"],
        &path_rows,
    ));
    writeln!(
        text,
        "xor_always_true={}\npost_click_bivalent={}",
        which_way.xor_always_true, which_way.post_click_bivalent
    )
    .unwrap();

    if let Some(out) = out {
        let mut body = serde_json::to_string_pretty(&json).expect("report serializes");
        body.push('\n');
        std::fs::write(out, body)
            .map_err(|e| CliError::Output(format!("--out {}: {e}", out.display())))?;
    }
    Ok(Report { text, json })
}

fn limit(dims: &[usize], family: FamilyArg) -> Result<Report, CliError> {
    let family = OperatorFamily::from(family);
    let rows = commutator_sweep(family, dims)?;
    let text_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.dim.to_string(),
                format_number(r.max_projector_commutator_norm),
                format_number(r.operator_commutator_norm),
            ]
        })
        .collect();
    let mut text = format!("family={}\n", family.name());
    text.push_str(&table(
        &[
            "dim",
            "max_projector_commutator_norm",
            "operator_commutator_norm",
        ],
        &text_rows,
    ));
    Ok(Report {
        text,
        json: json!({
            "command": "limit",
            "family": family.name(),
            "rows": rows,
        }),
    })
}

fn tables(system: SystemArg) -> Report {
    let t = truth_tables(system.into());
    let labels: Vec<String> = t.values.iter().map(|&v| format_number(v)).collect();
    let mut text = format!("system={}\n\n", t.system);
    let neg_rows: Vec<Vec<String>> = labels
        .iter()
        .zip(&t.neg)
        .map(|(a, &n)| vec![a.clone(), format_number(n)])
        .collect();
    text.push_str(&table(&["t", "!t"], &neg_rows));
    for (op, grid) in [("&", &t.conj), ("|", &t.disj), ("^", &t.xor)] {
        let mut headers = vec![op];
        headers.extend(labels.iter().map(String::as_str));
        let rows: Vec<Vec<String>> = labels
            .iter()
            .zip(grid)
            .map(|(a, row)| {
                std::iter::once(a.clone())
                    .chain(row.iter().map(|&x| format_number(x)))
                    .collect()
            })
            .collect();
        text.push('\n');
        text.push_str(&table(&headers, &rows));
    }
    Report {
        text,
        json: json!({
            "command": "tables",
            "system": t.system.name(),
            "values": t.values,
            "neg": t.neg,
            "conj": t.conj,
            "disj": t.disj,
            "xor": t.xor,
        }),
    }
}

/// Runs a parsed command and writes its report to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let report = match &cli.command {
        Command::Eval {
            scenario,
            formula,
            policy,
        } => eval(scenario, formula, *policy)?,
        Command::Lattice { scenario, checks } => lattice(scenario, checks)?,
        Command::Experiment {
            scenario,
            trials,
            seed,
            out,
        } => experiment(scenario, *trials, *seed, out.as_deref())?,
        Command::Limit { dims, family } => limit(dims, *family)?,
        Command::Tables { system } => tables(*system),
    };
    let written = if cli.json {
        let mut json = report.json;
        round_json(&mut json);
        writeln!(
            stdout,
            "{}",
            serde_json::to_string_pretty(&json).expect("report serializes")
        )
    } else {
        stdout.write_all(report.text.as_bytes())
    };
    written.map_err(|e| CliError::Output(format!("stdout: {e}")))
}

/// Parses `args` (including the program name), runs, and returns the exit status.
pub fn run_from<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match run(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run_from(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
