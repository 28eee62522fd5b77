use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use delprox::commands::{self, CommandError, Format, Options, Output, EXIT_OK, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "delprox",
    version,
    about = "Delaunay triangulations, Voronoi diagrams and proximity checks"
)]
struct Cli {
    /// Voronoi clipping frame as x0,y0,x1,y1.
    #[arg(long, global = true)]
    frame: Option<String>,
    /// Seed for `gen`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output encoding: document (indented) or json-like (one line).
    #[arg(long, global = true, default_value = "document")]
    format: String,
    /// Do not print results to stdout.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a site file.
    Gen {
        n: usize,
        /// uniform, clustered, cocircular or collinear-heavy.
        #[arg(long, short, default_value = "uniform")]
        distribution: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Triangulate a site file, optionally with constraint segments.
    Triangulate {
        input: PathBuf,
        #[arg(long, short)]
        constraints: Option<PathBuf>,
        /// Include the clipped Voronoi diagram.
        #[arg(long)]
        voronoi: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run property suites; exits 1 if any property fails.
    Check {
        input: PathBuf,
        /// Comma-separated suites, or `all`.
        #[arg(long, short, default_value = "all")]
        suite: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Draw an SVG figure.
    Render {
        input: PathBuf,
        /// delaunay, voronoi, overlay or regions.
        #[arg(long, short, default_value = "overlay")]
        what: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Evaluate near, far or strong between two selectors (t:i, e:i-j, v:i, c:i).
    Query {
        input: PathBuf,
        relation: String,
        a: String,
        b: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CommandError> {
    fs::read_to_string(path).map_err(|e| CommandError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn write(out: Option<&Path>, text: &str, quiet: bool) -> Result<(), CommandError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CommandError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None if quiet => Ok(()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| CommandError::Io {
                path: "<stdout>".into(),
                message: e.to_string(),
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8, CommandError> {
    let format: Format = cli.format.parse().map_err(CommandError::Usage)?;
    let frame = cli.frame.as_deref().map(commands::parse_frame).transpose()?;
    let opts = Options {
        frame,
        seed: cli.seed,
        format,
    };
    let (out, result): (Option<PathBuf>, Output) = match cli.command {
        Command::Gen { n, distribution, out } => {
            let text = commands::gen(n, &distribution, &opts)?;
            (
                out,
                Output {
                    text,
                    exit_code: EXIT_OK,
                },
            )
        }
        Command::Triangulate {
            input,
            constraints,
            voronoi,
            out,
        } => {
            let sites = read(&input)?;
            let l = constraints.as_deref().map(read).transpose()?;
            (out, commands::triangulate_cmd(&sites, l.as_deref(), voronoi, &opts)?)
        }
        Command::Check { input, suite, out } => (out, commands::check_cmd(&read(&input)?, &suite, &opts)?),
        Command::Render { input, what, out } => {
            let text = commands::render_cmd(&read(&input)?, &what, &opts)?;
            (
                out,
                Output {
                    text,
                    exit_code: EXIT_OK,
                },
            )
        }
        Command::Query {
            input,
            relation,
            a,
            b,
            out,
        } => (out, commands::query_cmd(&read(&input)?, &relation, &a, &b, &opts)?),
    };
    write(out.as_deref(), &result.text, cli.quiet)?;
    Ok(result.exit_code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("delprox: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
