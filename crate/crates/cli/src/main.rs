use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitposet::commands::{self, Format, ModelSource, Outcome, RunConfig, EXIT_USAGE};
use orbitposet_core::Bounds;

/// B x B-orbit posets of toroidal group embeddings.
#[derive(Parser)]
#[command(name = "orbitposet", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every orbit `[K; v; w]` with per-stratum counts.
    Enum(Common),
    /// Decide whether LOWER lies in the closure of UPPER by both criteria.
    Leq {
        #[command(flatten)]
        common: Common,
        upper: String,
        lower: String,
    },
    /// Covering relations of the closure order.
    Hasse(Common),
    /// Run the exhaustive verification suite; exit 1 if any check fails.
    Verify(Common),
    /// Check the parabolic factorization step for every nested pair of subsets.
    He(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    /// Cartan type such as A2, B3, G2, or a matrix `[[2,-1],[-2,2]]`.
    #[arg(long)]
    cartan: Option<String>,
    /// `wonderful`, `group`, or a model file path.
    #[arg(long, default_value = "wonderful")]
    model: String,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_orbits: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_group: Option<u64>,
}

impl Common {
    fn config(&self) -> RunConfig {
        let mut bounds = Bounds::default();
        if let Some(n) = self.max_orbits {
            bounds.max_orbits = n as usize;
        }
        if let Some(n) = self.max_group {
            bounds.max_group = n as usize;
        }
        RunConfig {
            cartan: self.cartan.clone(),
            model: ModelSource::from_arg(&self.model),
            format: match self.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
                FormatArg::Dot => Format::Dot,
            },
            bounds,
        }
    }
}

fn init_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("ORBITPOSET_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("ORBITPOSET_THREADS must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = init_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    let result = match &cli.command {
        Command::Enum(c) => commands::cmd_enum(&c.config()),
        Command::Leq { common, upper, lower } => commands::cmd_leq(&common.config(), upper, lower),
        Command::Hasse(c) => commands::cmd_hasse(&c.config()),
        Command::Verify(c) => commands::cmd_verify(&c.config()),
        Command::He(c) => commands::cmd_he(&c.config()),
    };
    match result {
        Ok(Outcome { output, code }) => {
            print!("{output}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
