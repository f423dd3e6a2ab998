use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use idealgraph::certificate::{certify, CertificateFile};
use idealgraph::export::{export, Format};
use idealgraph::oracles::OracleBudget;
use idealgraph::report::{analyze, AnalyzeOptions, Instance, Status};
use idealgraph::sweep::{run_sweep, Check, SweepConfig, SweepInstances};
use idealgraph::{Error, Signature};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;

#[derive(Parser)]
#[command(
    name = "idealgraph",
    version,
    about = "Intersection graphs of ideals of Z_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the analysis report for one instance as JSON.
    Analyze {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Check the constructed values against exact search.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a clique and coloring certificate, plus an edge coloring when
    /// the exact edge search fits the budget.
    Certify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the graph as DOT or a JSON adjacency list.
    Export {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a whole range of instances against exact search.
    Sweep {
        /// Every n from 2 to this bound.
        #[arg(
            long,
            value_name = "N",
            conflicts_with = "signatures",
            required_unless_present = "signatures"
        )]
        max: Option<u64>,
        /// Signature grid, e.g. `m<=4,exp<=3`.
        #[arg(long, value_name = "SPEC")]
        signatures: Option<SweepInstances>,
        #[arg(long)]
        check: Check,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// The modulus n.
    #[arg(required_unless_present = "signature", conflicts_with = "signature")]
    n: Option<u64>,
    /// Exponent signature instead of n, e.g. `2,1,1`.
    #[arg(long, value_name = "a,b,c")]
    signature: Option<Signature>,
}

impl InstanceArgs {
    fn instance(&self) -> Instance {
        match (&self.n, &self.signature) {
            (Some(n), _) => Instance::N(*n),
            (None, Some(s)) => Instance::Signature(s.clone()),
            (None, None) => unreachable!("clap requires one of n or --signature"),
        }
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Vertex limit for the clique and coloring searches.
    #[arg(long, value_name = "K", default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    budget_vertices: u64,
    /// Vertex limit for the edge-coloring search.
    #[arg(long, value_name = "K", default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..))]
    budget_edge_vertices: u64,
    /// Edge limit for the edge-coloring search.
    #[arg(long, value_name = "E", default_value_t = 80, value_parser = clap::value_parser!(u64).range(1..))]
    budget_edges: u64,
    /// Time limit per search.
    #[arg(long, value_name = "S", default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    budget_seconds: u64,
}

impl BudgetArgs {
    fn clique(&self) -> OracleBudget {
        OracleBudget {
            max_vertices: self.budget_vertices as usize,
            max_edges: usize::MAX,
            time_limit: Duration::from_secs(self.budget_seconds),
        }
    }

    fn edge(&self) -> OracleBudget {
        OracleBudget {
            max_vertices: self.budget_edge_vertices as usize,
            max_edges: self.budget_edges as usize,
            time_limit: Duration::from_secs(self.budget_seconds),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    let text = if text.ends_with('\n') {
        text.to_owned()
    } else {
        format!("{text}\n")
    };
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::Certificate(_) => Failure::Verify(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Analyze {
            instance,
            oracle,
            budget,
            out,
        } => {
            let opts = AnalyzeOptions {
                oracle,
                clique_budget: budget.clique(),
                edge_budget: budget.edge(),
            };
            let report = analyze(&instance.instance(), &opts)?;
            emit(&report.to_json(), out.as_ref()).map_err(Failure::Usage)?;
            Ok(report.status == Status::Ok)
        }
        Command::Certify {
            instance,
            budget,
            out,
        } => {
            let cert = certify(&instance.instance(), &budget.edge())?;
            let text = cert.to_json();
            CertificateFile::from_json(&text)?.verify()?;
            emit(&text, out.as_ref()).map_err(Failure::Usage)?;
            Ok(true)
        }
        Command::Export {
            instance,
            format,
            out,
        } => {
            let format = match format {
                ExportFormat::Dot => Format::Dot,
                ExportFormat::Json => Format::Json,
            };
            emit(&export(&instance.instance(), format)?, out.as_ref()).map_err(Failure::Usage)?;
            Ok(true)
        }
        Command::Sweep {
            max,
            signatures,
            check,
            budget,
            jobs,
            out,
        } => {
            let instances = match (max, signatures) {
                (Some(n), _) => SweepInstances::UpTo(n),
                (None, Some(s)) => s,
                (None, None) => unreachable!("clap requires one of --max or --signatures"),
            };
            let config = SweepConfig {
                instances,
                check,
                clique_budget: budget.clique(),
                edge_budget: budget.edge(),
                jobs,
            };
            let summary = run_sweep(&config)?;
            emit(&summary.to_json(), out.as_ref()).map_err(Failure::Usage)?;
            eprintln!(
                "{}: {} instances, {} verified, {} undecided, {} FAILED",
                summary.check, summary.total, summary.verified, summary.undecided, summary.failed
            );
            Ok(summary.failed == 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
