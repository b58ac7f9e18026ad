use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hlad::commands::{self, Report};
use hlad::text::{parse_int_weight, parse_multisegment, parse_skew, parse_weight};
use hlad::{capacity, json, CliError};
use hlad_core::forms::StarOp;
use hlad_core::{standard, ModuleRep};

#[derive(Parser)]
#[command(name = "hlad", version, about = "Ladder representations of the type-A graded affine Hecke algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the ladder module on standard tableaux and print it as JSON.
    Cherednik {
        #[arg(long)]
        multisegment: String,
    },
    /// List the standard skew tableaux of a ladder with their weights.
    Tableaux {
        #[arg(long)]
        multisegment: String,
    },
    /// Determinantal character formula.
    Char {
        #[command(subcommand)]
        action: CharAction,
    },
    /// Invariant symmetric forms of a module.
    Form {
        #[command(flatten)]
        source: ModuleSource,
        #[arg(long, value_enum, default_value = "bullet")]
        op: Op,
    },
    /// Check module relations, a full ladder audit, or the star identity.
    Verify {
        #[arg(long, conflicts_with_all = ["module", "star"])]
        multisegment: Option<String>,
        /// Module JSON file.
        #[arg(long, conflicts_with = "star")]
        module: Option<PathBuf>,
        /// Rank at which to check the star identity symbolically.
        #[arg(long)]
        star: Option<usize>,
    },
    /// Commuting nilpotent pair of a sheared skew shape.
    Nilpair {
        /// Rows offset:length from the top, e.g. "2:3,1:3,0:2".
        #[arg(long)]
        skew: String,
        /// Content of the top-left box.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a: i64,
    },
    /// Arakawa–Suzuki functor.
    As {
        #[command(subcommand)]
        action: AsAction,
    },
    /// Audit every ladder and shape in a bounded panel.
    Panel {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        content_window: i64,
        /// Largest connected skew shape checked; 0 skips shapes.
        #[arg(long, default_value_t = 0)]
        max_boxes: usize,
    },
}

#[derive(Subcommand)]
enum CharAction {
    Determinantal {
        #[arg(long)]
        multisegment: String,
    },
    /// Compare with the formal character of the ladder module.
    Verify {
        #[arg(long)]
        multisegment: String,
    },
}

#[derive(Subcommand)]
enum AsAction {
    /// Compare the functor image of L(μ) with the ladder module.
    Verify {
        #[arg(long)]
        multisegment: String,
    },
    /// Print the coinvariant weight space of L(μ) ⊗ V^{⊗ℓ}.
    Functor {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ModuleSource {
    /// Ladder module of this multisegment.
    #[arg(long)]
    multisegment: Option<String>,
    /// Standard module of this multisegment.
    #[arg(long)]
    standard: Option<String>,
    /// Module JSON file.
    #[arg(long)]
    module: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Bullet,
    Star,
}

fn read_module(path: &PathBuf) -> Result<ModuleRep, CliError> {
    let text = std::fs::read_to_string(path)?;
    json::parse_module(&serde_json::from_str(&text)?)
}

fn load(source: &ModuleSource) -> Result<ModuleRep, CliError> {
    if let Some(s) = &source.multisegment {
        Ok(hlad_core::cherednik::build(&parse_multisegment(s)?)?)
    } else if let Some(s) = &source.standard {
        Ok(standard::build_standard(&parse_multisegment(s)?)?)
    } else {
        let path = source.module.as_ref().expect("clap requires one source");
        read_module(path)
    }
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Cherednik { multisegment } => commands::cherednik(&parse_multisegment(&multisegment)?),
        Command::Tableaux { multisegment } => commands::tableaux(&parse_multisegment(&multisegment)?),
        Command::Char { action } => match action {
            CharAction::Determinantal { multisegment } => commands::char_determinantal(&parse_multisegment(&multisegment)?),
            CharAction::Verify { multisegment } => commands::char_verify(&parse_multisegment(&multisegment)?),
        },
        Command::Form { source, op } => {
            let op = match op {
                Op::Bullet => StarOp::Bullet,
                Op::Star => StarOp::Star,
            };
            commands::form(&load(&source)?, op)
        }
        Command::Verify { multisegment, module, star } => match (multisegment, module, star) {
            (Some(m), _, _) => commands::verify_ladder(&parse_multisegment(&m)?),
            (_, Some(path), _) => commands::verify_module(&read_module(&path)?),
            (_, _, Some(n)) => commands::verify_star(n),
            _ => Err(CliError::Input("verify needs --multisegment, --module or --star".into())),
        },
        Command::Nilpair { skew, a } => commands::nilpair(&parse_skew(&skew)?, a),
        Command::As { action } => match action {
            AsAction::Verify { multisegment } => commands::as_verify(&parse_multisegment(&multisegment)?, capacity()?),
            AsAction::Functor { n, mu, ell, lambda } => {
                commands::as_functor(n, &parse_int_weight(&mu)?, ell, &parse_weight(&lambda)?, capacity()?)
            }
        },
        Command::Panel {
            max_n,
            content_window,
            max_boxes,
        } => commands::panel(max_n, content_window, max_boxes),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", json::to_text(&report.value));
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
