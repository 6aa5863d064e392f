//! `minrep`: run the verification suite, print the classification tables and
//! query Weyl groups.
//!
//! Exit codes: 0 success, 1 a check failed or a table cell is unverified,
//! 2 usage or configuration error.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minrep_core::registry::notation::format_word;
use minrep_core::registry::FAMILIES;
use minrep_core::tables::{build_table, TableId};
use minrep_core::weyl::{group_order, word_matrix, DEFAULT_BUDGET};
use minrep_core::{
    instantiate_family, longest_element, make_root_system, orthogonal_subsystem, run_all, CartanType, CheckId,
    RealFormRecord, Rational, Registry, Status, Strategy, Vector, VerifyConfig,
};
use render::{ReportFormat, TableFormat};

#[derive(Parser)]
#[command(name = "minrep", version, about = "Exact verification of K-type ladder data of minimal representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks on registry records.
    Verify(VerifyArgs),
    /// Print one of the classification tables.
    Table(TableArgs),
    /// Weyl-group utilities.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
    /// Inspect the record registry.
    Registry {
        #[command(subcommand)]
        command: RegistryCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Brute,
    Reduced,
}

#[derive(Args)]
struct RunArgs {
    /// Load records from a registry file instead of the built-in registry.
    #[arg(long, value_name = "FILE")]
    registry: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Enumeration budget for line-preserver searches.
    #[arg(long, env = "MINREP_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, value_enum, default_value_t = StrategyArg::Reduced)]
    strategy: StrategyArg,
    /// Ladder rungs examined by the finite disjointness sweep.
    #[arg(long, default_value_t = minrep_core::verify::DEFAULT_RUNGS)]
    rungs: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Record name (repeatable).
    #[arg(long = "record", value_name = "NAME")]
    records: Vec<String>,
    /// Family id; with --params a single instance, otherwise its registry instances.
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated family parameters.
    #[arg(long, value_delimiter = ',', requires = "family", allow_hyphen_values = true)]
    params: Option<Vec<i64>>,
    /// Check name (repeatable); all checks when absent.
    #[arg(long = "check", value_name = "NAME")]
    checks: Vec<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Include per-check wall-clock durations (output is then not reproducible).
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct TableArgs {
    /// numbers, infchar, hermitian, nonhermitian, data1 or data2.
    id: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
    format: TableFormat,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand)]
enum WeylCommand {
    /// Order of the Weyl group, cross-checked by enumeration when within budget.
    Order {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long, env = "MINREP_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// A reduced word for the longest element and its action.
    Longest {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// The root subsystem orthogonal to a vector.
    Subsystem {
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Comma-separated rational coordinates, e.g. 0,0,1/2,1.
        #[arg(long, value_name = "VEC", allow_hyphen_values = true)]
        orthogonal_to: String,
    },
}

#[derive(Subcommand)]
enum RegistryCommand {
    /// Record names, one per line.
    List {
        #[arg(long, value_name = "FILE")]
        registry: Option<PathBuf>,
    },
    /// The registry as a JSON document.
    Dump {
        #[arg(long, value_name = "FILE")]
        registry: Option<PathBuf>,
    },
}

enum Failure {
    /// Exit 1: the command ran and something did not verify.
    Unverified,
    /// Exit 2.
    Usage(String),
}

type CliResult = Result<String, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn load_registry(path: &Option<PathBuf>) -> Result<Registry, Failure> {
    match path {
        Some(p) => Registry::load(p).map_err(usage),
        None => Ok(Registry::builtin()),
    }
}

fn config(run: &RunArgs) -> VerifyConfig {
    VerifyConfig {
        strategy: match run.strategy {
            StrategyArg::Brute => Strategy::Brute,
            StrategyArg::Reduced => Strategy::Reduced,
        },
        rungs: run.rungs,
        budget: run.budget,
        jobs: run.jobs,
    }
}

fn select_records(args: &VerifyArgs, reg: &Registry) -> Result<Vec<RealFormRecord>, Failure> {
    let mut out: Vec<RealFormRecord> = Vec::new();
    for name in &args.records {
        match reg.get(name) {
            Some(r) => out.push(r.clone()),
            None => {
                let known: Vec<&str> = reg.records.iter().map(|r| r.name.as_str()).collect();
                return Err(usage(format!("unknown record {name:?} (known: {})", known.join(", "))));
            }
        }
    }
    if let Some(id) = &args.family {
        match &args.params {
            Some(p) => out.push(instantiate_family(id, p).map_err(usage)?),
            None => {
                let members = reg.family(id);
                if members.is_empty() {
                    let known: Vec<&str> = FAMILIES.iter().map(|f| f.id).collect();
                    return Err(usage(format!(
                        "no records of family {id:?} in the registry (families: {})",
                        known.join(", ")
                    )));
                }
                out.extend(members.into_iter().cloned());
            }
        }
    }
    if args.records.is_empty() && args.family.is_none() {
        out = reg.records.clone();
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|r| seen.insert(r.name.clone()));
    Ok(out)
}

fn verify(args: VerifyArgs) -> CliResult {
    let reg = load_registry(&args.run.registry)?;
    let records = select_records(&args, &reg)?;
    let checks: Vec<CheckId> = if args.checks.is_empty() {
        CheckId::ALL.to_vec()
    } else {
        args.checks.iter().map(|c| c.parse()).collect::<Result<_, _>>().map_err(usage)?
    };
    let mut reports = run_all(&records, &checks, &config(&args.run)).map_err(usage)?;
    if !args.timings {
        for r in &mut reports {
            r.duration_ms = None;
        }
    }
    let text = render::reports(&reports, args.format).map_err(usage)?;
    if reports.iter().any(|r| r.status == Status::Fail) {
        emit(&text);
        return Err(Failure::Unverified);
    }
    Ok(text)
}

fn table(args: TableArgs) -> CliResult {
    let id: TableId = args.id.parse().map_err(usage)?;
    let reg = load_registry(&args.run.registry)?;
    let t = build_table(id, &reg, &config(&args.run)).map_err(usage)?;
    let text = render::table(&t, args.format).map_err(usage)?;
    if !t.verified() {
        emit(&text);
        for row in &t.rows {
            for f in &row.failures {
                eprintln!("{f}");
            }
        }
        return Err(Failure::Unverified);
    }
    Ok(text)
}

fn parse_vector(s: &str) -> Result<Vector, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<Rational>().map_err(|e| usage(format!("malformed vector {s:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()
        .map(Vector)
}

fn weyl(cmd: WeylCommand) -> CliResult {
    match cmd {
        WeylCommand::Order { ty, budget } => {
            let ty: CartanType = ty.parse().map_err(usage)?;
            let closed = ty.weyl_order();
            if closed <= budget {
                let rs = make_root_system(ty).map_err(usage)?;
                let counted = group_order(&rs, budget).map_err(usage)?;
                if counted != closed {
                    eprintln!("{ty}: enumeration found {counted} elements, closed form gives {closed}");
                    return Err(Failure::Unverified);
                }
                eprintln!("{ty}: enumeration agrees with the closed form");
            } else {
                eprintln!("{ty}: closed form only ({closed} exceeds the budget {budget})");
            }
            Ok(format!("{closed}\n"))
        }
        WeylCommand::Longest { ty } => {
            let ty: CartanType = ty.parse().map_err(usage)?;
            let rs = make_root_system(ty).map_err(usage)?;
            let word = longest_element(&rs);
            let m = word_matrix(&rs, &word);
            let minus_identity = (0..m.rows())
                .all(|i| (0..m.cols()).all(|j| m[(i, j)] == Rational::from_int(if i == j { -1 } else { 0 })));
            let mut out = format!("word: {}\nlength: {}\n", format_word(&word), word.len());
            if minus_identity {
                out.push_str("element: -identity\n");
            } else {
                out.push_str("element:\n");
                for i in 0..m.rows() {
                    out.push_str(&format!("  {}\n", m.row(i)));
                }
            }
            Ok(out)
        }
        WeylCommand::Subsystem { ty, orthogonal_to } => {
            let ty: CartanType = ty.parse().map_err(usage)?;
            let rs = make_root_system(ty).map_err(usage)?;
            let v = parse_vector(&orthogonal_to)?;
            let sub = orthogonal_subsystem(&rs, &v).map_err(usage)?;
            let mut out = format!(
                "type: {}\nroots: {}\npositive roots: {}\nweyl order: {}\nsimple roots:\n",
                sub.type_label(),
                sub.roots().len(),
                sub.positive_roots().len(),
                sub.order()
            );
            for a in sub.simple_roots() {
                out.push_str(&format!("  {a}\n"));
            }
            Ok(out)
        }
    }
}

fn registry(cmd: RegistryCommand) -> CliResult {
    match cmd {
        RegistryCommand::List { registry } => {
            let reg = load_registry(&registry)?;
            Ok(reg.records.iter().map(|r| format!("{}\n", r.name)).collect())
        }
        RegistryCommand::Dump { registry } => {
            let reg = load_registry(&registry)?;
            reg.to_json().map(|s| s + "\n").map_err(usage)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
        Command::Weyl { command } => weyl(command),
        Command::Registry { command } => registry(command),
    };
    match result {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(Failure::Unverified) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
