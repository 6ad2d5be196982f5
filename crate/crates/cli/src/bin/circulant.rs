use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use circulant_cli::selftest::{self, Scale};
use circulant_cli::{commands, CliError, CliResult, Flags, Output, SpecFile};
use clap::{Args, Parser, Subcommand};

/// Exact ranks, generator matrices and kernel vectors of circulant matrices
/// over finite fields.
#[derive(Parser)]
#[command(name = "circulant", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Spec file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Aligned text instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Add wall-clock timings to the report.
    #[arg(long)]
    timings: bool,
    /// Skip the elimination oracle.
    #[arg(long)]
    no_oracle: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form rank, checked against Gaussian elimination.
    Rank(Common),
    /// Generator matrix of a cyclic, index-1.5 or double cyclic code.
    Genmat(Common),
    /// Eigenvalue-0 eigenvectors of a square double circulant.
    Kernel(Common),
    /// Eigen-identity, diagonalization and kernel checks for one spec.
    Verify(Common),
    /// Run the bundled invariant sweeps.
    Selftest {
        #[arg(long, value_enum, default_value = "small")]
        scale: Scale,
    },
}

fn read_spec(path: &Option<PathBuf>) -> CliResult<SpecFile> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(serde_json::from_str(&text)?)
}

fn run_one(common: &Common, cmd: fn(&SpecFile, &Flags) -> CliResult<Output>) -> CliResult<i32> {
    let spec = read_spec(&common.input)?;
    let flags = Flags {
        pretty: common.pretty,
        timings: common.timings,
        no_oracle: common.no_oracle,
    };
    let out = cmd(&spec, &flags)?;
    print!("{}", out.render(flags.pretty));
    Ok(out.exit_code)
}

fn run_selftest(scale: Scale) -> i32 {
    let start = Instant::now();
    let outcomes = selftest::run_all(scale);
    let mut failed = 0;
    for o in &outcomes {
        println!("{}", selftest::summary_line(o));
        for f in &o.failures {
            eprintln!("{}: {}\n  {}", o.name, f.reason, f.spec.to_json());
        }
        failed += usize::from(!o.ok());
    }
    println!(
        "{} of {} sweeps passed in {:.1} s",
        outcomes.len() - failed,
        outcomes.len(),
        start.elapsed().as_secs_f64()
    );
    i32::from(failed > 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Rank(c) => run_one(c, commands::rank),
        Command::Genmat(c) => run_one(c, commands::genmat),
        Command::Kernel(c) => run_one(c, commands::kernel),
        Command::Verify(c) => run_one(c, commands::verify),
        Command::Selftest { scale } => Ok(run_selftest(*scale)),
    };
    let code = result.unwrap_or_else(|e: CliError| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
