use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use metacover::pipeline::{run_gm, run_gq3, run_search, run_verify};
use metacover::render::render_text;
use metacover::Certificate;
use metacover_core::Error;

#[derive(Parser)]
#[command(name = "metacover", version, about = "Certificates for metacyclic coverings of the line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long)]
    json: bool,
    /// Write the certificate to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Record the generation time (outside the hashed payload).
    #[arg(long)]
    timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// The G_{q,3} family: genus, characters, CM-types, primitivity, curve.
    Gq3 {
        #[arg(long)]
        q: u64,
        /// Twist exponent; must be the canonical one.
        #[arg(long)]
        k: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// The G_m family: genus, characters, CM-types, simplicity, curves.
    Gm {
        #[arg(long)]
        m: u32,
        /// Compare the genus-2 quotient with the reference models (m = 4).
        #[arg(long)]
        igusa: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate covering signatures.
    Search {
        #[arg(long, default_value_t = 15)]
        n_max: u64,
        #[arg(long, default_value_t = 10)]
        points_max: usize,
        /// Only consider n dividing q - 1.
        #[arg(long)]
        q: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Run many instances concurrently and summarize.
    Verify {
        #[arg(long = "q-list", alias = "q", value_delimiter = ',', num_args = 0..)]
        q_list: Vec<u64>,
        #[arg(long = "m-list", alias = "m", value_delimiter = ',', num_args = 0..)]
        m_list: Vec<u32>,
        #[command(flatten)]
        output: Output,
    },
}

fn emit(cert: Certificate, output: &Output) -> ExitCode {
    let mut cert = cert;
    if output.timestamp {
        cert.generated_at = Some(chrono::Utc::now().to_rfc3339());
    }
    let json = output.json || output.format == Format::Json;
    let mut text = if json { cert.to_json() } else { render_text(&cert) };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &output.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(cert.exit_code() as u8)
}

fn bad(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Gq3 { q, k, output } => match run_gq3(q, k) {
            Ok(c) => emit(c, &output),
            Err(e) => bad(e),
        },
        Command::Gm { m, igusa, output } => match run_gm(m, igusa) {
            Ok(c) => emit(c, &output),
            Err(e) => bad(e),
        },
        Command::Search {
            n_max,
            points_max,
            q,
            output,
        } => {
            if n_max < 3 || points_max < 3 {
                return bad(Error::BadParameter(
                    "search needs --n-max >= 3 and --points-max >= 3".to_string(),
                ));
            }
            emit(run_search(n_max, points_max, q), &output)
        }
        Command::Verify {
            q_list,
            m_list,
            output,
        } => emit(run_verify(&q_list, &m_list), &output),
    }
}
