use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;
mod selftest;

#[derive(Parser, Debug)]
#[command(
    name = "boundseq",
    version,
    about = "Exact algebra for bounded sequences over Z[2^(1/n)]"
)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessChoice {
    Shift,
    Interleave,
    Split,
    Absorb,
    Corner,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Least k with |(2^(1/n) - 1)^k| < epsilon.
    Small {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Rational `p/q`.
        #[arg(long)]
        epsilon: String,
    },
    /// Decide whether a group endomorphism of the ring is module-linear.
    ModuleCheck {
        /// Group homomorphism JSON file.
        #[arg(long)]
        theta: PathBuf,
    },
    /// Find x with |x| < epsilon and |θ(x)| > N.
    WitnessEpsilon {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        epsilon: String,
        #[arg(long = "N")]
        big_n: String,
    },
    /// Bounded input with unbounded row sums for a witness instance.
    WitnessUnbounded {
        /// Witness instance JSON file.
        #[arg(long, conflicts_with = "stages")]
        instance: Option<PathBuf>,
        /// Use the built-in instance with this many stages and targets 1..=k.
        #[arg(long)]
        stages: Option<usize>,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// θ_a(b) = (b0 a0, (b0 + b1) a1, ...).
    Theta {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Round-trip and additivity trials for an isomorphism witness.
    IsoRoundtrip {
        #[arg(long, value_enum)]
        witness: WitnessChoice,
        /// Copies parameter for the corner witness.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Move-by-move isomorphisms between sums of copies of B = A ⊕ Z.
    CornerDemo {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Largest copies parameter shown (defaults to the degree).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Smith normal form of an integer matrix JSON file.
    Snf { file: PathBuf },
    /// Cokernel of an integer matrix JSON file.
    Coker { file: PathBuf },
    /// Cokernel rank parity of a module matrix JSON file.
    Obstruction { file: PathBuf },
    /// Required cokernel rank versus module-linear parity for truncations.
    TheoremDemo {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long)]
        trunc: usize,
        /// Extra free rank m, 0 < m < degree.
        #[arg(long, default_value_t = 1)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Run every invariant suite.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> anyhow::Result<report::Report> {
    use commands as c;
    match cli.command {
        Command::Small { degree, epsilon } => c::small(degree, &epsilon),
        Command::ModuleCheck { theta } => c::module_check(&theta),
        Command::WitnessEpsilon {
            theta,
            epsilon,
            big_n,
        } => c::witness_epsilon(&theta, &epsilon, &big_n),
        Command::WitnessUnbounded {
            instance,
            stages,
            degree,
        } => c::witness_unbounded(instance.as_deref(), stages, degree),
        Command::Theta { a, b } => c::theta(&a, &b),
        Command::IsoRoundtrip {
            witness,
            n,
            degree,
            trials,
            seed,
        } => c::iso_roundtrip(witness, n, degree, trials, seed),
        Command::CornerDemo {
            degree,
            n,
            trials,
            seed,
        } => c::corner_demo(degree, n, trials, seed),
        Command::Snf { file } => c::snf(&file),
        Command::Coker { file } => c::coker(&file),
        Command::Obstruction { file } => c::obstruction(&file),
        Command::TheoremDemo {
            degree,
            trunc,
            extra,
            seed,
            samples,
        } => c::theorem_demo(degree, trunc, extra, seed, samples),
        Command::Selftest { seed } => Ok(selftest::run(seed)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            let report = report.finish();
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_status as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
