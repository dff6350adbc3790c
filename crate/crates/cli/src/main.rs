use clap::{Parser, Subcommand};
use qmon_cli::parser::parse;
use qmon_cli::resolver::{resolve, Env, ResolveError};
use qmon_cli::runner::{
    exit_code, run_check, run_criteria, run_demo_n_ndot, run_demo_projection, run_enumerate,
    run_roundtrip, Report,
};
use qmon_core::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qmon", about = "Checks and enumerations for quantale-enriched monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Candidate cap for enumerations.
    #[arg(long, global = true, default_value_t = 1 << 22)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a definition from a .qmon file.
    Check { file: PathBuf, name: String },
    /// List every enrichment of the semidirect product that forms a
    /// split extension.
    Enumerate {
        file: PathBuf,
        x: String,
        y: String,
        action: String,
    },
    /// Run the classification round-trip on an enriched_action or
    /// extension definition.
    Roundtrip { file: PathBuf, name: String },
    /// Evaluate every closed-form criterion against its direct check.
    Criteria {
        file: PathBuf,
        x: String,
        y: String,
        action: String,
    },
    /// Built-in worked examples.
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Truncated naturals with the usual and the dot preorder.
    #[command(name = "n-ndot")]
    NNdot {
        /// Truncation bound (at least 3).
        #[arg(long)]
        k: usize,
    },
    /// Projection preorder on a product of preordered groups.
    Projection,
}

fn load(file: &PathBuf) -> Result<Env, ResolveError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| ResolveError::Core(Error::Domain(format!("cannot read {}: {e}", file.display()))))?;
    let doc = parse(&text)?;
    resolve(&doc)
}

fn dispatch(cli: &Cli) -> Result<Report, ResolveError> {
    match &cli.command {
        Command::Check { file, name } => run_check(&load(file)?, name),
        Command::Enumerate { file, x, y, action } => {
            run_enumerate(&load(file)?, x, y, action, cli.budget)
        }
        Command::Roundtrip { file, name } => run_roundtrip(&load(file)?, name),
        Command::Criteria { file, x, y, action } => run_criteria(&load(file)?, x, y, action),
        Command::Demo { which } => match which {
            DemoCommand::NNdot { k } => run_demo_n_ndot(*k),
            DemoCommand::Projection => run_demo_projection(),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(&cli);
    let code = exit_code(&result);
    match &result {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                print!("{report}");
            }
        }
        Err(ResolveError::Diag(d)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "error": "diagnostic",
                        "class": d.class.to_string(),
                        "line": d.line,
                        "col": d.col,
                        "message": d.message,
                    })
                );
            } else {
                eprintln!("error: {d}");
            }
        }
        Err(ResolveError::Core(e)) => {
            if cli.json {
                let payload = match e {
                    Error::Invalid(report) => serde_json::json!({
                        "error": "invalid",
                        "violations": report.violations.iter().map(|v| serde_json::json!({
                            "law": v.law,
                            "witness": v.witness,
                            "detail": v.detail,
                        })).collect::<Vec<_>>(),
                    }),
                    other => serde_json::json!({ "error": other.to_string() }),
                };
                println!("{payload}");
            } else {
                eprintln!("error: {e}");
            }
        }
    }
    ExitCode::from(code as u8)
}
