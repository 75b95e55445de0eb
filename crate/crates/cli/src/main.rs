use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nodal_kit::{emit, run, Command, Format, RunConfig};

#[derive(Parser)]
#[command(
    name = "nodal-kit",
    version,
    about = "Exact verification pipelines for the versal node"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Normal-form iteration for a series with non-degenerate quadratic part.
    NormalForm(Opts),
    /// Canonical forms in R and the power recursion.
    Division(Opts),
    /// The 2x2 matrix factorization and its companion identities.
    Factorize(Opts),
    /// Homomorphisms J -> R and the quotient by R.
    Dual(Opts),
    /// Degreewise exactness of the periodic complex.
    Exactness(Opts),
    /// Blow-up charts, rewriting, flatness, covering and det4.
    Charts(Opts),
    /// Fiber of the blow-up over the origin.
    Fiber(Opts),
    /// Every check above.
    CheckAll(Opts),
}

#[derive(Args)]
struct Opts {
    /// Coefficient ring: q, fp:<p>, dual:<ring>, loc:<ring>:<vars>:<order>.
    #[arg(long, default_value = "q")]
    ring: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    gamma: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    delta: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    s: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    t: String,
    /// Number of normal-form steps N; also the series precision for square-zero checks.
    #[arg(long, default_value_t = 6)]
    precision: usize,
    /// Degree bound D for truncated linear algebra.
    #[arg(long, default_value_t = 6)]
    degree: usize,
    /// Extra preimage degree for exactness checks.
    #[arg(long, default_value_t = 2)]
    cushion: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Series literal `[[i,j,"coef"],...]` for normal-form.
    #[arg(long)]
    series: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Record per-check wall time (makes reports nondeterministic).
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, o) = match cli.command {
        Sub::NormalForm(o) => (Command::NormalForm, o),
        Sub::Division(o) => (Command::Division, o),
        Sub::Factorize(o) => (Command::Factorize, o),
        Sub::Dual(o) => (Command::Dual, o),
        Sub::Exactness(o) => (Command::Exactness, o),
        Sub::Charts(o) => (Command::Charts, o),
        Sub::Fiber(o) => (Command::Fiber, o),
        Sub::CheckAll(o) => (Command::CheckAll, o),
    };
    let config = RunConfig {
        command,
        ring: o.ring,
        gamma: o.gamma,
        delta: o.delta,
        s: o.s,
        t: o.t,
        precision: o.precision,
        degree: o.degree,
        cushion: o.cushion,
        seed: o.seed,
        series: o.series,
        timings: o.timings,
    };
    match run(&config) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(emit(&report, o.format).as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
