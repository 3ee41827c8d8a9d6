mod commands;
mod report;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bdtorus::Execution;
use commands::Common;
use report::{Format, Report};

#[derive(Parser)]
#[command(name = "bdtorus", version, about = "Packet groups of covers of tori from lattice and Galois data")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Compute a single level instead of stabilizing (packet-group, oracle-check).
    #[arg(long, global = true)]
    level: Option<u64>,
    #[arg(long, global = true)]
    max_level: Option<u64>,
    #[arg(long, global = true, default_value_t = 3)]
    stable_repeats: usize,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on oracle enumeration and on group closure.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Disable the parallel code paths.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a datum config and print its basic invariants.
    Validate { config: Option<PathBuf> },
    /// Fixed and annihilator lattices with their quotients.
    Sharp { config: Option<PathBuf> },
    /// The packet group S with its level trace.
    PacketGroup { config: Option<PathBuf> },
    /// Tame cohomology of a module presentation, or of a seeded random batch.
    Cohomology {
        config: Option<PathBuf>,
        #[arg(long)]
        n: Option<u64>,
        /// Generate this many random modules from --seed instead of reading a config.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Tame Hilbert symbol of two elements given as v,u.
    Hilbert {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Commutator pairing and center image for a split torus.
    Commutator { config: Option<PathBuf> },
    /// Main path against the enumeration oracle.
    OracleCheck { config: Option<PathBuf> },
}

fn read_input(path: Option<&PathBuf>) -> io::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => text = std::fs::read_to_string(p)?,
        _ => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn run(cli: &Cli) -> Result<Report, String> {
    let common = Common {
        level: cli.level,
        max_level: cli.max_level,
        stable_repeats: cli.stable_repeats,
        seed: cli.seed,
        cap: cli.cap,
        exec: if cli.sequential { Execution::Sequential } else { Execution::default() },
    };
    let input = |p: &Option<PathBuf>| read_input(p.as_ref()).map_err(|e| format!("cannot read input: {e}"));
    Ok(match &cli.command {
        Command::Validate { config } => commands::validate(&input(config)?, &common),
        Command::Sharp { config } => commands::sharp(&input(config)?, &common),
        Command::PacketGroup { config } => commands::packet(&input(config)?, &common),
        Command::Cohomology { config, n, random } => {
            let text = if random.is_some() { None } else { Some(input(config)?) };
            commands::cohomology(text.as_deref(), *n, *random, &common)
        }
        Command::Hilbert { q, n, a, b } => commands::hilbert_cmd(*q, *n, a, b),
        Command::Commutator { config } => commands::commutator_cmd(&input(config)?),
        Command::OracleCheck { config } => commands::oracle_check(&input(config)?, &common),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            let _ = out.write_all(report.render(cli.format).as_bytes());
            if let Some(err) = report.diagnostics.get("error") {
                eprintln!("error: {}", err["message"].as_str().unwrap_or_default());
            }
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
