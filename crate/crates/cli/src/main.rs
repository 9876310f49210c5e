use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use leafpower_cli::{self as cli, Outcome};

#[derive(Parser)]
#[command(name = "leafpower", version, about = "Recognize linear leaf powers and star NeS graphs, and check their certificates")]
struct Args {
    /// Print machine-readable JSON instead of a summary.
    #[arg(long, global = true)]
    json: bool,
    /// Write certificates and other artifacts into this directory.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether each graph is a star NeS graph.
    RecognizeStar {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        /// Worker threads for batches.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Decide whether each graph is a linear leaf power.
    RecognizeLinear {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        /// Largest graph handed to the exhaustive search.
        #[arg(long, default_value_t = 8)]
        max_oracle_n: usize,
        /// A bluered or linear-leafroot certificate to verify and convert instead of searching.
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a certificate against a graph.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
        /// Fail with status 2 unless the certificate has this kind.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Convert a certificate into another representation.
    Convert {
        certificate: PathBuf,
        #[arg(long)]
        to: String,
        /// The graph, needed for good-partition → star-nes.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Generate a random graph together with a certificate.
    Gen {
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        size: usize,
        /// Rays of generated star models.
        #[arg(long, default_value_t = 3)]
        rays: usize,
    },
    /// Graphviz DOT for a graph or certificate file.
    ExportDot { input: PathBuf },
}

fn run(command: Command) -> Outcome {
    match command {
        Command::RecognizeStar { graphs, jobs } => cli::batch(&graphs, jobs, cli::recognize_star),
        Command::RecognizeLinear { graphs, max_oracle_n, model, jobs } => {
            let model = match model.as_deref().map(cli::read_certificate).transpose() {
                Ok(m) => m,
                Err(o) => return o,
            };
            cli::batch(&graphs, jobs, |g, stem| cli::recognize_linear(g, stem, max_oracle_n, model.as_ref()))
        }
        Command::Verify { graph, certificate, kind } => {
            let g = match cli::read_graph(&graph) {
                Ok(g) => g,
                Err(o) => return o,
            };
            match cli::read_certificate(&certificate) {
                Ok(c) => cli::verify(&g, &c, kind.as_deref()),
                Err(o) => o,
            }
        }
        Command::Convert { certificate, to, graph } => {
            let g = match graph.as_deref().map(cli::read_graph).transpose() {
                Ok(g) => g,
                Err(o) => return o,
            };
            match cli::read_certificate(&certificate) {
                Ok(c) => cli::convert(&c, &to, g.as_ref()),
                Err(o) => o,
            }
        }
        Command::Gen { kind, seed, size, rays } => cli::generate(&kind, seed, size, rays),
        Command::ExportDot { input } => cli::export_dot(&input),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = run(args.command);
    if let Some(dir) = &args.out_dir {
        if let Err(e) = outcome.write_files(dir) {
            eprintln!("error: {}: {e}", dir.display());
            return ExitCode::from(cli::INPUT_ERROR);
        }
    }
    print!("{}", outcome.render(args.json));
    ExitCode::from(outcome.code)
}
