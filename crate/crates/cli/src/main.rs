use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Exit codes: 0 pass, 1 check failed, 2 usage or parse error, 3 budget or
/// theorem anomaly.
pub mod exit {
    pub const PASS: u8 = 0;
    pub const FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const ANOMALY: u8 = 3;
}

#[derive(Parser, Debug)]
#[command(name = "imocheck", version, about = "Executable checks for three olympiad problem models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TilingKind {
    Guillotine,
    Pinwheel,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a_0..a_n of the rational recurrence as exact fractions.
    A2 {
        #[arg(long)]
        n: u64,
        /// Also check positivity, zero residuals and the closed form.
        #[arg(long)]
        verify: bool,
    },
    /// Validate a tiling file and print its parity witness tile.
    #[command(name = "c1-check")]
    C1Check {
        path: PathBuf,
        /// Dump the board as ASCII art on stderr.
        #[arg(long)]
        ascii: bool,
    },
    /// Generate a tiling file on stdout.
    #[command(name = "c1-gen")]
    C1Gen {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = TilingKind::Guillotine)]
        kind: TilingKind,
    },
    /// Print an orbit prefix, a classification, or per-claim records.
    N1 {
        #[arg(long)]
        a0: u64,
        /// Number of steps to print after a0.
        #[arg(long, conflicts_with_all = ["classify", "claims"])]
        steps: Option<u64>,
        #[arg(long)]
        classify: bool,
        /// Run the claims and lemmas that apply to this starting value.
        #[arg(long, conflicts_with = "classify")]
        claims: bool,
        /// Step budget; defaults to 4 * a0 + 1000.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the whole claim battery.
    Suite(SuiteArgs),
}

#[derive(clap::Args, Debug)]
struct SuiteArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[arg(long, default_value_t = 2017)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    a2_max: u64,
    #[arg(long, default_value_t = 500)]
    sum_instances: u64,
    #[arg(long, default_value_t = 12)]
    c1_rect_max: u32,
    #[arg(long, default_value_t = 9)]
    c1_parity_max: u32,
    /// Largest board area for exhaustive tiling enumeration (at most 16).
    #[arg(long, default_value_t = 16)]
    c1_area_cap: u32,
    #[arg(long, default_value_t = 1000)]
    c1_guillotines: u64,
    #[arg(long, default_value_t = 50)]
    c1_pinwheels: u64,
    #[arg(long, default_value_t = 10_000)]
    n1_max: u64,
    #[arg(long, default_value_t = 4)]
    n1_budget_mul: u64,
    #[arg(long, default_value_t = 1000)]
    n1_budget_add: u64,
    /// Fixed classification budget; overrides the mul/add formula.
    #[arg(long)]
    n1_budget: Option<u64>,
    #[arg(long, default_value_t = 100_000)]
    n1_step_max: u64,
    #[arg(long, default_value_t = 1000)]
    n1_lemma_budget: u64,
    #[arg(long, default_value_t = 1_000_000)]
    n1_isqrt_samples: u64,
    /// Run every sweep on the calling thread.
    #[arg(long)]
    sequential: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::A2 { n, verify } => commands::a2(n, verify),
        Command::C1Check { path, ascii } => commands::c1_check(&path, ascii),
        Command::C1Gen { a, b, seed, kind } => {
            commands::c1_gen(a, b, seed, matches!(kind, TilingKind::Pinwheel))
        }
        Command::N1 {
            a0,
            steps,
            classify,
            claims,
            budget,
        } => commands::n1(a0, steps, classify, claims, budget),
        Command::Suite(args) => commands::suite(args.into()),
    };
    ExitCode::from(code)
}

impl From<SuiteArgs> for imocheck::suite::SuiteConfig {
    fn from(a: SuiteArgs) -> Self {
        use imocheck::suite::{OutputFormat, SuiteConfig};
        SuiteConfig {
            seed: a.seed,
            a2_max: a.a2_max,
            sum_instances: a.sum_instances,
            c1_rect_max: a.c1_rect_max,
            c1_parity_max: a.c1_parity_max,
            c1_area_cap: a.c1_area_cap,
            c1_guillotines: a.c1_guillotines,
            c1_pinwheels: a.c1_pinwheels,
            n1_max: a.n1_max,
            n1_budget_mul: if a.n1_budget.is_some() { 0 } else { a.n1_budget_mul },
            n1_budget_add: a.n1_budget.unwrap_or(a.n1_budget_add),
            n1_step_max: a.n1_step_max,
            n1_lemma_budget: a.n1_lemma_budget,
            n1_isqrt_samples: a.n1_isqrt_samples,
            format: match a.format {
                Format::Human => OutputFormat::Human,
                Format::Records => OutputFormat::Records,
            },
            exec: if a.sequential {
                imocheck::Exec::Sequential
            } else {
                imocheck::Exec::Parallel
            },
            ..SuiteConfig::default()
        }
    }
}
