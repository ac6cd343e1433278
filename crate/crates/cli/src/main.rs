use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use serendipity_core::coeffsolver;
use serendipity_core::serendipity::{serendipity_basis, to_unit, Style};
use serendipity_core::verify::{run_suites, BasisSet};
use serendipity_femlab::{run_convergence, BasisKind, CgOptions};

#[derive(Parser)]
#[command(name = "serendipity", version, about = "Cubic serendipity bases: exact checks and convergence studies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Bernstein,
    Hermite,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Sym,
    Unit,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    #[value(name = "B")]
    B,
    #[value(name = "H")]
    H,
    #[value(name = "U")]
    U,
    #[value(name = "W")]
    W,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    S3b,
    S3h,
    Q3,
}

#[derive(Subcommand)]
enum Command {
    /// Print a serendipity basis, one entry per line.
    PrintBasis {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: u8,
        #[arg(long, value_enum)]
        style: StyleArg,
        #[arg(long, value_enum, default_value = "sym")]
        domain: DomainArg,
    },
    /// Print a serendipity-to-tensor coefficient matrix as exact fractions.
    PrintMatrix {
        #[arg(long, value_enum)]
        which: MatrixArg,
    },
    /// Run every exact identity suite.
    Verify,
    /// Run an h-refinement study for the Poisson problem and write a CSV report.
    Converge {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: u8,
        #[arg(long, value_enum)]
        basis: BasisArg,
        /// Ascending cells-per-side values, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn print_basis(dim: usize, style: StyleArg, domain: DomainArg) -> Result<()> {
    let style = match style {
        StyleArg::Bernstein => Style::Bernstein,
        StyleArg::Hermite => Style::Hermite,
    };
    let mut basis = serendipity_basis(dim, style);
    if let DomainArg::Unit = domain {
        basis = to_unit(&basis);
    }
    let mut out = io::stdout().lock();
    for (idx, p) in &basis.entries {
        writeln!(out, "{idx} {p}")?;
    }
    Ok(())
}

fn print_matrix(which: MatrixArg) -> Result<()> {
    let m = match which {
        MatrixArg::B => coeffsolver::build_b(),
        MatrixArg::H => coeffsolver::build_h(),
        MatrixArg::U => coeffsolver::build_u(),
        MatrixArg::W => coeffsolver::build_w(),
    }
    .context("building the coefficient matrix")?;
    io::stdout().lock().write_all(m.to_text().as_bytes())?;
    Ok(())
}

fn verify() -> ExitCode {
    let outcomes = run_suites(&BasisSet::default());
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} suites, {} failed", outcomes.len(), failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn converge(dim: usize, basis: BasisArg, levels: &[usize], out: &PathBuf) -> Result<()> {
    let kind = match basis {
        BasisArg::S3b => BasisKind::S3Bernstein,
        BasisArg::S3h => BasisKind::S3Hermite,
        BasisArg::Q3 => BasisKind::Q3,
    };
    let report = run_convergence(dim, kind, levels, CgOptions::default())?;
    std::fs::write(out, report.to_csv()).with_context(|| format!("writing {}", out.display()))?;
    match report.final_h1_rate() {
        Some(rate) => println!("final H1 rate: {rate:.4}"),
        None => println!("final H1 rate: n/a (single level)"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::PrintBasis { dim, style, domain } => print_basis(dim as usize, style, domain),
        Command::PrintMatrix { which } => print_matrix(which),
        Command::Verify => return verify(),
        Command::Converge { dim, basis, levels, out } => converge(dim as usize, basis, &levels, &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
