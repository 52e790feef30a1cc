use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symplane::combinat::{
    for_each_column_strict_odd, for_each_symmetric_plane_partition, partitions_in_box,
    weights_to_poly,
};
use symplane::identity::CheckResult;
use symplane::verify::{parse_checks, parse_range, run_verification, RunConfig};

#[derive(Parser)]
#[command(
    name = "symplane",
    version,
    about = "Exact checks of symmetric plane partition identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named identity checks over an (m, n) grid.
    Verify {
        /// Comma-separated checks: theorem, weyl, lemma, eq4, eq5, eq6,
        /// vanishing, macmahon, gordon, bijection, schur-agree, dn, or all.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Inclusive range `a..b` (or a single value) for the box height m.
        #[arg(long, default_value = "1..3")]
        m: String,
        /// Inclusive range for the number of variables n.
        #[arg(long, default_value = "1..3")]
        n: String,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
        /// Worker threads.
        #[arg(long, env = "SYMPLANE_WORKERS", default_value_t = 1)]
        parallel: usize,
    },
    /// Print every object of a class as JSON lines, then its generating function.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    SymmetricPp,
    ColumnStrict,
    Partitions,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            checks,
            m,
            n,
            output,
            parallel,
        } => verify(&checks, &m, &n, output, parallel),
        Command::Enumerate { kind, n, m } => enumerate(kind, n, m).map(|_| ExitCode::SUCCESS),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn verify(
    checks: &str,
    m: &str,
    n: &str,
    output: Output,
    parallel: usize,
) -> Result<ExitCode, symplane::Error> {
    let config = RunConfig {
        checks: parse_checks(checks)?,
        m_range: parse_range(m)?,
        n_range: parse_range(n)?,
        parallel,
    };
    let results = run_verification(&config)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match output {
        Output::Text => write_text(&mut out, &results),
        Output::Json => serde_json::to_writer_pretty(&mut out, &results)
            .map_err(io::Error::from)
            .and_then(|_| writeln!(out)),
    }
    .and_then(|_| out.flush())
    .expect("write report");
    if results.iter().all(|r| r.pass) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_FAIL))
    }
}

fn write_text(out: &mut impl Write, results: &[CheckResult]) -> io::Result<()> {
    writeln!(
        out,
        "{:<12} {:>3} {:>3}  {:<6} {:>10}",
        "identity", "m", "n", "result", "ms"
    )?;
    for r in results {
        let m = r.m.map_or_else(|| "-".to_string(), |m| m.to_string());
        let status = if r.pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{:<12} {:>3} {:>3}  {:<6} {:>10.2}",
            r.identity,
            m,
            r.n,
            status,
            r.elapsed_ms()
        )?;
        if !r.pass {
            for f in &r.failures {
                writeln!(out, "    {f}")?;
            }
            writeln!(out, "    lhs: {}", r.lhs)?;
            writeln!(out, "    rhs: {}", r.rhs)?;
        }
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    writeln!(out, "{} checks, {} failed", results.len(), failed)
}

fn enumerate(kind: Kind, n: usize, m: u32) -> Result<(), symplane::Error> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut counts = std::collections::BTreeMap::new();
    let mut emit = |json: String, weight: u64| {
        writeln!(out, "{json}").expect("write object");
        *counts.entry(weight).or_insert(0u64) += 1;
    };
    match kind {
        Kind::SymmetricPp => for_each_symmetric_plane_partition(n, m, |pp| {
            emit(serde_json::to_string(pp).unwrap(), pp.weight())
        }),
        Kind::ColumnStrict => for_each_column_strict_odd(n, m as usize, |cs| {
            emit(
                serde_json::to_string(&cs.to_json_map()).unwrap(),
                cs.weight(),
            )
        }),
        Kind::Partitions => {
            for p in partitions_in_box(m, n) {
                emit(serde_json::to_string(&p).unwrap(), p.size());
            }
        }
    }
    writeln!(out, "{}", weights_to_poly(counts)).expect("write generating function");
    out.flush().expect("flush");
    Ok(())
}
