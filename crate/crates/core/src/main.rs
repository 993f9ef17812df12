use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use dlacheck::frontend::{
    build, emit_report, parse_model, print_model, run_check, BuildTarget, CheckRequest, CheckTarget, DvbVerb, Format,
    ModelFile, Verb,
};
use dlacheck::{CheckOptions, Error};

#[derive(Parser)]
#[command(
    name = "dlacheck",
    version,
    about = "Check Lie algebroids, matched pairs and bialgebroids exactly"
)]
struct Cli {
    /// Emit the report as one line of JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the sampled section checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of sampled sections per randomized identity.
    #[arg(long, global = true, default_value_t = 50)]
    samples: usize,
    /// Maximum degree of sampled polynomial coefficients.
    #[arg(long = "max-degree", global = true, default_value_t = 2)]
    max_degree: u32,
    /// Record wall-clock time in `elapsed_ms` (otherwise 0).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite on a declaration.
    Check {
        target: Target,
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Write structures derived from a matched pair to a model file.
    Build {
        what: BuildWhat,
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Fiber identities of a decomposed double vector bundle.
    Dvb {
        verb: DvbWhat,
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print model files in canonical form.
    Fmt {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Algebroid,
    Rep,
    MatchedPair,
    Bialgebroid,
    Poisson,
    Manin,
    Vacant,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildWhat {
    Double,
    Vacant,
    Semidirect,
}

#[derive(Clone, Copy, ValueEnum)]
enum DvbWhat {
    Pair,
    Zmaps,
    Vue,
}

impl From<Target> for CheckTarget {
    fn from(t: Target) -> Self {
        match t {
            Target::Algebroid => CheckTarget::Algebroid,
            Target::Rep => CheckTarget::Rep,
            Target::MatchedPair => CheckTarget::MatchedPair,
            Target::Bialgebroid => CheckTarget::Bialgebroid,
            Target::Poisson => CheckTarget::Poisson,
            Target::Manin => CheckTarget::Manin,
            Target::Vacant => CheckTarget::Vacant,
        }
    }
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn load(files: &[PathBuf]) -> Result<ModelFile, String> {
    let mut m = ModelFile::default();
    for f in files {
        let text = std::fs::read_to_string(f).map_err(|e| format!("{}: {e}", f.display()))?;
        let part = parse_model(&text).map_err(|e| format!("{}:{e}", f.display()))?;
        m.extend(part).map_err(|e| format!("{}: {e}", f.display()))?;
    }
    Ok(m)
}

fn check(cli: &Cli, verb: Verb, name: &str, files: &[PathBuf]) -> Result<ExitCode, String> {
    let m = load(files)?;
    let req = CheckRequest {
        verb,
        name: name.to_string(),
        opts: CheckOptions {
            seed: cli.seed,
            samples: cli.samples,
            max_degree: cli.max_degree,
        },
    };
    let start = Instant::now();
    let mut report = run_check(&m, &req).map_err(|e| e.to_string())?;
    if cli.timing {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    let format = if cli.json { Format::Json } else { Format::Text };
    print!("{}", emit_report(&report, format));
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    })
}

fn write_build(cli: &Cli, what: BuildWhat, name: &str, files: &[PathBuf], out: &Path) -> Result<ExitCode, String> {
    let m = load(files)?;
    let what = match what {
        BuildWhat::Double => BuildTarget::Double,
        BuildWhat::Vacant => BuildTarget::Vacant,
        BuildWhat::Semidirect => BuildTarget::Semidirect,
    };
    let opts = CheckOptions {
        seed: cli.seed,
        samples: cli.samples,
        max_degree: cli.max_degree,
    };
    match build(&m, what, name, &opts) {
        Ok(built) => {
            std::fs::write(out, print_model(&built)).map_err(|e| format!("{}: {e}", out.display()))?;
            let names: Vec<&str> = built.decls.iter().map(|d| d.name.as_str()).collect();
            println!("wrote {} ({})", out.display(), names.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ Error::UncheckedPair(_)) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(EXIT_FAIL))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Check { target, name, files } => check(cli, Verb::Check((*target).into()), name, files),
        Command::Dvb { verb, name, files } => {
            let v = match verb {
                DvbWhat::Pair => DvbVerb::Pair,
                DvbWhat::Zmaps => DvbVerb::Zmaps,
                DvbWhat::Vue => DvbVerb::Vue,
            };
            check(cli, Verb::Dvb(v), name, files)
        }
        Command::Build {
            what,
            name,
            files,
            output,
        } => write_build(cli, *what, name, files, output),
        Command::Fmt { files } => {
            print!("{}", print_model(&load(files)?));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
