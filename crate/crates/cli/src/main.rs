mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "homyd", version, about = "Exact checks and constructions for Hom-Hopf algebras and Hom-Yetter-Drinfeld modules")]
struct Cli {
    /// Print counterexample tuples for failed checks.
    #[arg(long, global = true)]
    witness: bool,
    /// Append timing information after the report.
    #[arg(long, global = true)]
    verbose: bool,
    /// Run checks on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every applicable axiom checker on every block of a file.
    Check { file: PathBuf },
    /// Build a smash product, smash coproduct, T-smash coproduct or biproduct.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Print and verify the antipode of a Hopf block, or solve for one on a bialgebra block.
    Antipode {
        file: PathBuf,
        #[arg(long)]
        block: Option<String>,
    },
    /// Braiding colinearity, inverse and hexagons for the Yetter-Drinfeld modules in a file.
    BraidingTest { file: PathBuf },
    /// Hom-Yang-Baxter equation on triples of Yetter-Drinfeld modules.
    YbeTest { file: PathBuf },
    /// R-matrix and bilinear-form correspondences.
    QuasitriangularCheck { file: PathBuf },
    /// Built-in instances.
    Catalog {
        #[command(subcommand)]
        what: Catalog,
    },
}

#[derive(Args, Debug, Clone)]
struct Emit {
    /// Write the constructed structure to this file.
    #[arg(long)]
    emit: Option<PathBuf>,
    /// Name of the emitted block.
    #[arg(long, default_value = "B")]
    name: String,
}

#[derive(Subcommand, Debug)]
enum Construct {
    Smash {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        action: String,
        #[command(flatten)]
        emit: Emit,
    },
    Cosmash {
        file: PathBuf,
        #[arg(long)]
        coalgebra: String,
        #[arg(long)]
        coaction: String,
        #[command(flatten)]
        emit: Emit,
    },
    Tsmash {
        file: PathBuf,
        #[arg(long)]
        coalgebra: String,
        /// Coaction defining T(c⊗h) = c₋₁h⊗c₀.
        #[arg(long)]
        coaction: String,
        #[command(flatten)]
        emit: Emit,
    },
    Biproduct {
        file: PathBuf,
        /// Carrier block; defaults to the first CARRIER tag naming a block.
        #[arg(long)]
        carrier: Option<String>,
        #[command(flatten)]
        emit: Emit,
    },
}

#[derive(Subcommand, Debug)]
enum Catalog {
    List,
    Show {
        id: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        param: Option<String>,
    },
    Check {
        id: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        param: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.sequential {
        hom_yd::par::set_parallel(false);
    }
    let start = std::time::Instant::now();
    let opts = commands::Options { witness: cli.witness };
    let outcome = commands::run(&cli.command, &opts);
    match outcome {
        Ok(out) => {
            print!("{}", out.text);
            if cli.verbose {
                println!("-- elapsed {:.3} ms", start.elapsed().as_secs_f64() * 1000.0);
            }
            ExitCode::from(if out.passed { 0 } else { 2 })
        }
        Err(commands::Failure::Math(text)) => {
            print!("{text}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("homyd: {msg}");
            ExitCode::from(1)
        }
    }
}
