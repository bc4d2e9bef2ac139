use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cycinv::classify::{classify, classify_action, sweep_points, ClassLabel};
use cycinv::modarith::{mod_inverse, Action};
use cycinv::{Error, Result};
use rayon::prelude::*;

mod commands;
mod render;

#[derive(Parser)]
#[command(name = "cycinv", version, about = "Invariants, presentations and resolutions of Z/p actions on C[x1, x2]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generating invariants of the action.
    Invariants(ActionArgs),
    /// Toric presentation ideal of the invariant ring.
    Kernel {
        #[command(flatten)]
        action: ActionArgs,
        /// Also print the reduced Groebner basis.
        #[arg(long)]
        reduced: bool,
    },
    /// Minimal graded free resolution and Betti table.
    Resolution {
        #[command(flatten)]
        action: ActionArgs,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Print the differential matrices.
        #[arg(long)]
        matrices: bool,
    },
    /// Classification label with its evidence.
    Classify(ActionArgs),
    /// Classify every prime p <= p-max and 1 <= b <= b^-1.
    Sweep {
        #[arg(long)]
        p_max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Upper bound accepted for --p-max.
        #[arg(long, env = "CYCINV_PMAX_LIMIT", default_value_t = 2000, hide = true)]
        limit: u64,
    },
}

#[derive(Args)]
struct ActionArgs {
    #[arg(long)]
    p: i64,
    #[arg(long, default_value_t = 1)]
    a: i64,
    #[arg(long)]
    b: i64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Method {
    General,
    HilbertBurch,
    EagonNorthcott,
    Auto,
}

/// The action together with its weight `a^{-1} b mod p`; commands work in the
/// action's own coordinates, classification in the canonical ones.
pub(crate) struct Target {
    pub action: Action,
    pub weight: u64,
}

impl ActionArgs {
    fn target(&self) -> Result<Target> {
        let action = Action::new(self.p, self.a, self.b)?;
        let a_inv = mod_inverse(self.a, self.p)?;
        let weight = (a_inv * self.b).rem_euclid(self.p) as u64;
        Ok(Target { action, weight })
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parameter(_) | Error::Domain(_) | Error::Classification(_) | Error::Parse(_) => 1,
        Error::TheoremViolation(_) => 3,
        _ => 2,
    }
}

fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Error::Internal(e.to_string()))
}

fn sweep(p_max: u64, jobs: usize, format: Format, limit: u64) -> Result<String> {
    if p_max > limit {
        return Err(Error::Parameter(format!("--p-max {p_max} exceeds CYCINV_PMAX_LIMIT = {limit}")));
    }
    let points = sweep_points(p_max);
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| Error::Internal(e.to_string()))?;
    let rows: Vec<Result<ClassLabel>> = pool.install(|| points.par_iter().map(|&(p, b)| classify(p, b)).collect());
    let mut labels = Vec::with_capacity(rows.len());
    let mut violations = Vec::new();
    for r in rows {
        match r {
            Ok(l) => labels.push(l),
            Err(e @ Error::TheoremViolation(_)) => violations.push(e.to_string()),
            Err(e) => return Err(e),
        }
    }
    if !violations.is_empty() {
        return Err(Error::TheoremViolation(violations.join("\n")));
    }
    Ok(match format {
        Format::Json => render::json(&serde_json::to_value(&labels).map_err(|e| Error::Internal(e.to_string()))?),
        Format::Csv | Format::Human => {
            let mut s = format!("{}\n", ClassLabel::CSV_HEADER);
            for l in &labels {
                s.push_str(&l.csv_row());
                s.push('\n');
            }
            s
        }
    })
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Invariants(a) => commands::invariants(&a.target()?, a.format),
        Command::Kernel { action, reduced } => commands::kernel(&action.target()?, reduced, action.format),
        Command::Resolution { action, method, matrices } => {
            commands::resolution(&action.target()?, method, matrices, action.format)
        }
        Command::Classify(a) => {
            let label = classify_action(&a.target()?.action)?;
            Ok(render::classification(&label, a.format))
        }
        Command::Sweep { p_max, jobs, format, limit } => sweep(p_max, jobs, format, limit),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli).and_then(|s| emit(&s)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_separate_usage_computation_and_falsification() {
        assert_eq!(exit_code(&Error::Parameter("p".into())), 1);
        assert_eq!(exit_code(&Error::Classification("c".into())), 1);
        assert_eq!(exit_code(&Error::Internal("i".into())), 2);
        assert_eq!(exit_code(&Error::TheoremViolation("t".into())), 3);
    }

    #[test]
    fn weight_is_a_inverse_times_b() {
        let args = ActionArgs { p: 13, a: 7, b: 9, format: Format::Human };
        assert_eq!(args.target().unwrap().weight, 5);
    }

    #[test]
    fn sweep_rejects_oversized_runs() {
        assert!(matches!(sweep(50, 1, Format::Csv, 20), Err(Error::Parameter(_))));
        let csv = sweep(7, 2, Format::Csv, 20).unwrap();
        assert!(csv.starts_with(ClassLabel::CSV_HEADER));
    }
}
