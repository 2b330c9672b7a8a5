use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use weierstrass::report::{run_job, JobSpec};
use weierstrass::SizeGuard;

/// Weierstrass semigroups of curves in positive characteristic.
#[derive(Parser, Debug)]
#[command(name = "weierstrass", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A comma-separated list parsed as one argument value.
type List = Vec<u64>;

#[derive(Args, Debug)]
struct Output {
    /// Emit a JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gaps, genus, Frobenius number and generators of ⟨gens⟩.
    Semigroup {
        #[arg(long, value_parser = parse_list)]
        gens: List,
        #[command(flatten)]
        out: Output,
    },
    /// Gap set of y^(p^h) - y = G with a pole of order m.
    ArtinSchreier {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        h: u32,
        #[arg(long)]
        m: u64,
        /// Gaps of the base field at the pole of G.
        #[arg(long, value_parser = parse_list_or_empty, default_value = "")]
        base_gaps: List,
        #[command(flatten)]
        out: Output,
    },
    /// Boseck table and gap sequence of a cyclic p^n cover of the line.
    Cyclic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        /// Jumps of one ramified place; repeat for several places.
        #[arg(long = "place", value_parser = parse_list, required = true)]
        places: Vec<List>,
        #[arg(long, default_value_t = 0)]
        at: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Generator events along a pole-number sequence starting at 0.
    Filtration {
        #[arg(long, value_parser = parse_list)]
        poles: List,
        #[command(flatten)]
        out: Output,
    },
    /// Hasse-Witt and maximal-curve consistency checks.
    Check {
        #[arg(long, value_parser = parse_list)]
        gens: List,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        nilpotency: Option<u32>,
        #[arg(long)]
        points: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
}

fn parse_list_or_empty(s: &str) -> Result<List, String> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    parse_list(s)
}

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(|item| {
            item.parse::<u64>().map_err(|_| {
                format!("`{item}` is not a nonnegative integer (use a,b,c without spaces)")
            })
        })
        .collect()
}

fn size_guard() -> Result<SizeGuard, String> {
    match std::env::var("SIZE_GUARD") {
        Ok(v) => v
            .parse::<u64>()
            .map(SizeGuard)
            .map_err(|_| format!("SIZE_GUARD must be a positive integer, got `{v}`")),
        Err(_) => Ok(SizeGuard::default()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (spec, json) = match cli.command {
        Command::Semigroup { gens, out } => (JobSpec::Semigroup { gens }, out.json),
        Command::ArtinSchreier {
            p,
            h,
            m,
            base_gaps,
            out,
        } => (JobSpec::ArtinSchreier { p, h, m, base_gaps }, out.json),
        Command::Cyclic {
            p,
            n,
            places,
            at,
            out,
        } => (JobSpec::Cyclic { p, n, places, at }, out.json),
        Command::Filtration { poles, out } => (JobSpec::Filtration { poles }, out.json),
        Command::Check {
            gens,
            p,
            q,
            nilpotency,
            points,
            out,
        } => (
            JobSpec::Check {
                gens,
                p,
                q,
                nilpotency,
                points,
            },
            out.json,
        ),
    };
    let guard = match size_guard() {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run_job(&spec, guard) {
        Ok(report) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_table());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
