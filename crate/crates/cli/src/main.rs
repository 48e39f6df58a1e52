use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hilden_cli::commands::{self, CliError, Format, Output, SnfInput, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "hilden",
    version,
    about = "Mapping class computations for the Hilden and liftable Hilden groups"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the identity catalog and the three-element generation for 2n+2 points
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=5))]
        n: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
        k: u16,
    },
    /// Rewrite a standard generator (SS<i>, RR<i>, T<j>, s<i>, R) over the three generators
    Rewrite {
        target: String,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=5))]
        n: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
        k: u16,
    },
    /// Parity class and liftability of a braid word on 2n+2 strands
    Lift {
        word: String,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
        k: u16,
    },
    /// Decide whether two braid words give the same mapping class
    Wp {
        word1: String,
        word2: String,
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
        m: u16,
    },
    /// Smith normal form of a presentation's relation matrix, or of a plain matrix
    Snf {
        /// Presentation file
        #[arg(required_unless_present = "matrix", conflicts_with = "matrix")]
        presentation: Option<PathBuf>,
        /// Whitespace-separated integer matrix, one row per line
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Draw a braid word as SVG
    Render {
        word: String,
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
        m: u16,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    match cli.command {
        Command::Verify { n, k } => commands::verify(n.into(), k.into(), format),
        Command::Rewrite { target, n, k } => {
            commands::rewrite_cmd(&target, n.into(), k.into(), format)
        }
        Command::Lift { word, n, k } => commands::lift(&word, n.into(), k.into(), format),
        Command::Wp { word1, word2, m } => commands::wp(&word1, &word2, m.into(), format),
        Command::Snf {
            presentation,
            matrix,
        } => match (presentation, matrix) {
            (Some(p), _) => commands::snf(
                SnfInput::Presentation(read(&p)?),
                &p.display().to_string(),
                format,
            ),
            (None, Some(p)) => commands::snf(
                SnfInput::Matrix(read(&p)?),
                &p.display().to_string(),
                format,
            ),
            (None, None) => unreachable!("clap requires one input"),
        },
        Command::Render { word, m } => commands::render(&word, m.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    let output = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    match out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &output.body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{}", output.body),
    }
    ExitCode::from(output.code)
}
