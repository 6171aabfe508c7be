use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use preproj_cli::suites::run_suite;
use preproj_cli::{cmd_classify, cmd_ideal, AlgebraSpec, CliError, CliResult, Config, Format};

#[derive(Parser)]
#[command(name = "preproj", version, about = "Weakly homological embeddings of preprojective algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one classification record per Weyl group element.
    Classify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// table44, theoremA, theoremB, tachikawa, stratifying, nakayama, cy2 or ideals
        #[arg(long)]
        suite: String,
        /// Largest Ext degree and syzygy period searched by the tachikawa suite.
        #[arg(long)]
        ext_bound: Option<usize>,
    },
    /// Describe the ideal I_w of a word in the simple reflections.
    Ideal {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Comma-separated 1-based reflection indices, e.g. "3,2,3"; empty or "e" for the identity.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Args)]
struct AlgebraArgs {
    /// Dynkin kind (A, D, E), or a full type such as A3.
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Self-injective Nakayama algebra with N vertices and Loewy length H, as N:H.
    #[arg(long)]
    nakayama: Option<String>,
    #[arg(long, default_value_t = 1009)]
    field_char: u32,
    /// Abort the module enumeration beyond this many indecomposables.
    #[arg(long)]
    max_registry: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

impl AlgebraArgs {
    fn config(&self) -> CliResult<Config> {
        let mut cfg = Config::new(self.field_char)?;
        cfg.algebra = AlgebraSpec::from_flags(self.ty.as_deref(), self.rank, self.nakayama.as_deref())?;
        if let Some(m) = self.max_registry {
            cfg.registry.max_modules = m;
        }
        Ok(cfg)
    }
}

fn run(cli: Cli) -> CliResult<(String, bool)> {
    match cli.command {
        Command::Classify { algebra, format } => {
            let format = match format {
                FormatArg::Tsv => Format::Tsv,
                FormatArg::Json => Format::Json,
            };
            Ok((cmd_classify(&algebra.config()?, format)?, true))
        }
        Command::Verify { algebra, suite, ext_bound } => {
            let mut cfg = algebra.config()?;
            cfg.ext_bound = ext_bound;
            let report = run_suite(&suite, &cfg)?;
            Ok((report.render(), report.passed()))
        }
        Command::Ideal { algebra, word } => Ok((cmd_ideal(&algebra.config()?, &word)?, true)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CliError::exit_code(&e) as u8)
        }
    }
}
