use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tilt_cli::commands::{self, PolygonAction, QuiverFormat};
use tilt_cli::CliError;

/// Explore coloured quiver mutation and m-angulations of polygons.
#[derive(Parser)]
#[command(name = "tilt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mutate a coloured quiver at a vertex
    Mutate {
        /// Coloured quiver JSON file
        input: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: QuiverFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the coloured mutation class of a seed
    Enumerate {
        /// Dynkin type (A4, D5, E6, ...) or a quiver JSON file
        seed: String,
        /// Number of colours minus one; plain seeds default to 1
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 100_000)]
        limit: u64,
        /// Write the class file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Work with the polygon with m*n + 2 vertices
    Polygon {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(value_enum)]
        action: PolygonAction,
        /// Angulation JSON file (svg; defaults to the fan at vertex 1)
        #[arg(long)]
        angulation: Option<PathBuf>,
        /// Diagonal to highlight together with its flips (svg)
        #[arg(long)]
        highlight: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Serve the session API on localhost
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn emit(text: &[u8], out: Option<&Path>) -> Result<(), CliError> {
    use std::io::Write;
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text)?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Mutate { input, vertex, count, format, out } => {
            let text = commands::mutate(&read(&input)?, &vertex, count, format)?;
            emit(text.as_bytes(), out.as_deref())
        }
        Command::Enumerate { seed, m, limit, out } => {
            let path = Path::new(&seed);
            let file_text = if path.is_file() { Some(read(path)?) } else { None };
            let seed = commands::resolve_seed(&seed, file_text.as_deref(), m)?;
            let class = commands::enumerate(&seed, limit)?;
            if let Some(out) = out {
                emit(&commands::class_file(&class)?, Some(&out))?;
            }
            println!("size={} complete={}", class.len(), class.complete());
            Ok(())
        }
        Command::Polygon { m, n, action, angulation, highlight, out } => {
            let angulation = angulation.as_deref().map(read).transpose()?;
            let text = commands::polygon(m, n, action, angulation.as_deref(), highlight.as_deref())?;
            emit(text.as_bytes(), out.as_deref())
        }
        Command::Serve { port } => {
            let runtime = tokio::runtime::Builder::new_multi_thread().enable_all().build()?;
            runtime.block_on(tilt_cli::server::serve(port))?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
