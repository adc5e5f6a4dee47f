use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use freeperm::Bounds;
use freeperm_cli::commands::{self, EXIT_ERROR};
use freeperm_cli::examples::builtin_documents;
use freeperm_cli::{to_json, CliError, Format, Options, Outcome};

/// Exhaustive checks for finite multicategories, permutative categories and
/// the free/endomorphism adjunction between them.
#[derive(Debug, Parser)]
#[command(name = "freeperm", version)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, env = "FREEPERM_FORMAT", default_value = "text")]
    format: Format,
    /// Longest profile enumerated in free permutative categories.
    #[arg(long, global = true, env = "FREEPERM_BOUND_PROFILE", default_value_t = 3)]
    bound_profile: usize,
    /// Largest arity enumerated in multicategories.
    #[arg(long, global = true, env = "FREEPERM_BOUND_ARITY", default_value_t = 3)]
    bound_arity: usize,
    /// Worker threads used by the validators.
    #[arg(long, global = true, env = "FREEPERM_PARALLEL", default_value_t = 1)]
    parallel: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document against the laws of its kind.
    Validate { path: PathBuf },
    /// Tabulate the free permutative category on a multicategory.
    Free { path: PathBuf },
    /// Tabulate the endomorphism multicategory of a permutative category.
    End { path: PathBuf },
    /// Check the unit, counit and triangle identities on a pair (M, C).
    CheckAdjunction {
        multicategory: PathBuf,
        permcat: PathBuf,
        #[arg(long, hide = true)]
        corrupt_counit: bool,
    },
    /// Write every builtin document, to a directory or as a JSON array.
    Examples {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn examples(out: Option<PathBuf>) -> Result<Outcome, CliError> {
    let docs = builtin_documents();
    let mut stdout = String::new();
    match out {
        Some(dir) => {
            let io = |source| CliError::Io {
                path: dir.clone(),
                source,
            };
            fs::create_dir_all(&dir).map_err(io)?;
            for (stem, doc) in &docs {
                let path = dir.join(format!("{stem}.json"));
                fs::write(&path, to_json(doc)).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                stdout.push_str(&format!("{}\n", path.display()));
            }
        }
        None => {
            let values: Vec<serde_json::Value> =
                docs.iter().map(|(_, d)| freeperm_cli::document::to_value(d)).collect();
            stdout = serde_json::to_string_pretty(&values).expect("documents serialize to JSON");
            stdout.push('\n');
        }
    }
    Ok(Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    })
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let opts = Options {
        format: cli.format,
        bounds: Bounds::new(cli.bound_arity, cli.bound_profile).with_parallel(cli.parallel.max(1)),
    };
    let with_path = |path: &Path, e: CliError| match e {
        CliError::Io { .. } => e,
        other => CliError::Usage(format!("{}: {other}", path.display())),
    };
    match cli.command {
        Command::Validate { path } => commands::validate(&read(&path)?, &opts).map_err(|e| with_path(&path, e)),
        Command::Free { path } => commands::free(&read(&path)?, &opts).map_err(|e| with_path(&path, e)),
        Command::End { path } => commands::end(&read(&path)?, &opts).map_err(|e| with_path(&path, e)),
        Command::CheckAdjunction {
            multicategory,
            permcat,
            corrupt_counit,
        } => {
            let m = read(&multicategory)?;
            let c = read(&permcat)?;
            commands::check_adjunction_cmd(&m, &c, &opts, corrupt_counit)
        }
        Command::Examples { out } => examples(out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            eprint!("{}", outcome.stderr);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
