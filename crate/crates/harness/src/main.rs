use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use finchu_harness::claims::{document_checks, Claims};
use finchu_harness::document::{load, Registry};
use finchu_harness::enumerate::{enumerate, Kind};
use finchu_harness::report::Report;
use finchu_harness::suites::{run_suite, Ctx};

#[derive(Parser)]
#[command(name = "finchu", version, about = "Exhaustive checks of finite Chu constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Transform,
    Apartness,
    Topology,
    Infosystem,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite, plus the claims of an optional document.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        /// Report zero elapsed time so output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
    },
    /// List hom-sets, ideals or Chu transforms of named structures.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
    },
    /// Check one kind of claim made by a document.
    Check {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
    },
}

fn emit(report: &Report, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load_or_exit(path: Option<&PathBuf>) -> Result<Registry, ExitCode> {
    match path {
        None => Ok(Registry::default()),
        Some(p) => load(p).map_err(|e| {
            eprintln!("error: {}: {e}", p.display());
            ExitCode::from(2)
        }),
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Verify {
            suite,
            input,
            max_size,
            seed,
            report,
            no_timing,
        } => {
            let registry = load_or_exit(input.as_ref())?;
            let ctx = Ctx {
                cap: max_size,
                seed,
                registry: &registry,
            };
            let r = run_suite(&suite, &ctx, !no_timing).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            Ok(emit(&r, report))
        }
        Command::Enumerate {
            kind,
            input,
            from,
            to,
            report,
        } => {
            let registry = load_or_exit(Some(&input))?;
            let listing = enumerate(&registry, kind, from.as_deref(), to.as_deref()).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            match report {
                Format::Text => print!("{}", listing.to_text()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&listing).expect("listings serialize")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { what, input, report } => {
            let registry = load_or_exit(Some(&input))?;
            let (name, claims) = match what {
                What::Transform => ("check-transform", Claims::Transforms),
                What::Apartness => ("check-apartness", Claims::Apartness),
                What::Topology => ("check-topology", Claims::Topologies),
                What::Infosystem => ("check-infosystem", Claims::InfoSystems),
            };
            let checks = document_checks(&registry, &[claims]);
            Ok(emit(&Report::new(name, 0, 0, checks, 0), report))
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
