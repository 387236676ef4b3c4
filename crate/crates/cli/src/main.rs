//! Batch command-line front end: build the minimal basis of a defining
//! ideal, verify it, enumerate the monomial basis, print dimensions, or
//! list Dyck paths — in deterministic text or JSON.
//!
//! Exit codes: 0 on success or a PASS verdict, 1 on a FAIL verdict or
//! I/O failure, 2 on usage errors, 3 on resource limits.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fflv_groebner::export;
use fflv_groebner::{
    build_groebner_basis, enumerate_dyck_paths, fflv_points, run_full_verify, Algebra,
    DominantWeight, Error, LieKind, OracleMode, Result, RootSystem,
};

#[derive(Parser)]
#[command(
    name = "fflv-gb",
    version,
    about = "Monomial bases and defining ideals of simple highest-weight modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the minimal basis of the defining ideal
    Compute(Job),
    /// Check the basis against the polytope and the explicit module
    Verify(Job),
    /// Enumerate the monomial basis as polytope lattice points
    Basis(Job),
    /// Print the Weyl dimension
    Dim(Job),
    /// List the Dyck paths of the root system
    Paths(PathsJob),
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct Job {
    /// Algebra type (A or C)
    #[arg(long = "type", value_name = "TYPE")]
    kind: String,
    /// Rank of the algebra
    #[arg(long)]
    rank: usize,
    /// Comma-separated fundamental-weight coefficients m_1,...,m_n
    #[arg(long)]
    weight: String,
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Also write the output to this file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the explicit-module oracle when verifying
    #[arg(long)]
    no_oracle: bool,
    /// Emit the unpruned variant with every Cartan generator
    #[arg(long)]
    full_basis: bool,
}

#[derive(Args)]
struct PathsJob {
    /// Algebra type (A or C)
    #[arg(long = "type", value_name = "TYPE")]
    kind: String,
    /// Rank of the algebra
    #[arg(long)]
    rank: usize,
    /// Optional weight; adds the bound to every path
    #[arg(long)]
    weight: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Also write the output to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<LieKind> {
    match s {
        "A" | "a" => Ok(LieKind::A),
        "C" | "c" => Ok(LieKind::C),
        other => Err(Error::UnsupportedType(other.to_string())),
    }
}

fn parse_weight(s: &str, rank: usize) -> Result<DominantWeight> {
    let mut m = Vec::new();
    for part in s.split(',') {
        let v: u32 = part
            .trim()
            .parse()
            .map_err(|_| Error::WeightParse(s.to_string()))?;
        m.push(v);
    }
    if m.len() != rank {
        return Err(Error::WeightLength {
            got: m.len(),
            expected: rank,
        });
    }
    Ok(DominantWeight::new(m))
}

fn algebra_and_weight(job: &Job) -> Result<(Algebra, DominantWeight)> {
    let kind = parse_kind(&job.kind)?;
    let alg = Algebra::new(kind, job.rank)?;
    let lambda = parse_weight(&job.weight, job.rank)?;
    Ok((alg, lambda))
}

fn compute(job: &Job) -> Result<(String, u8)> {
    let (alg, lambda) = algebra_and_weight(job)?;
    let basis = build_groebner_basis(&alg, &lambda)?;
    let output = match job.format {
        Format::Text => export::basis_text(&alg, &basis, job.full_basis),
        Format::Json => export::to_json(&export::basis_document(&alg, &basis, job.full_basis)),
    };
    Ok((output, 0))
}

fn verify(job: &Job) -> Result<(String, u8)> {
    let (alg, lambda) = algebra_and_weight(job)?;
    let mode = if job.no_oracle {
        OracleMode::Skip
    } else {
        OracleMode::Auto
    };
    let report = run_full_verify(&alg, &lambda, mode)?;
    let output = match job.format {
        Format::Text => export::verify_text(&report),
        Format::Json => export::to_json(&export::verify_document(&alg.rs, &lambda, &report)),
    };
    Ok((output, if report.pass { 0 } else { 1 }))
}

fn basis_points(job: &Job) -> Result<(String, u8)> {
    let (alg, lambda) = algebra_and_weight(job)?;
    let points = fflv_points(&alg.rs, &lambda);
    let output = match job.format {
        Format::Text => export::points_text(&alg, &points),
        Format::Json => export::to_json(&export::points_document(&alg, &lambda, &points)),
    };
    Ok((output, 0))
}

fn dim(job: &Job) -> Result<(String, u8)> {
    let kind = parse_kind(&job.kind)?;
    let rs = RootSystem::new(kind, job.rank)?;
    let lambda = parse_weight(&job.weight, job.rank)?;
    let output = match job.format {
        Format::Text => export::dim_text(rs.weyl_dim(&lambda)),
        Format::Json => export::to_json(&export::dim_document(&rs, &lambda)),
    };
    Ok((output, 0))
}

fn paths(job: &PathsJob) -> Result<(String, u8)> {
    let kind = parse_kind(&job.kind)?;
    let rs = RootSystem::new(kind, job.rank)?;
    let lambda = job
        .weight
        .as_deref()
        .map(|w| parse_weight(w, job.rank))
        .transpose()?;
    let all = enumerate_dyck_paths(&rs);
    let output = match job.format {
        Format::Text => export::paths_text(&rs, lambda.as_ref(), &all),
        Format::Json => export::to_json(&export::paths_document(&rs, lambda.as_ref(), &all)),
    };
    Ok((output, 0))
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::UnsupportedType(_)
        | Error::InvalidRank { .. }
        | Error::WeightLength { .. }
        | Error::WeightParse(_) => 2,
        Error::SearchExhausted { .. }
        | Error::ResourceBudget { .. }
        | Error::EnumerationGuard { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match &cli.command {
        Command::Compute(j) => (compute(j), j.out.as_ref()),
        Command::Verify(j) => (verify(j), j.out.as_ref()),
        Command::Basis(j) => (basis_points(j), j.out.as_ref()),
        Command::Dim(j) => (dim(j), j.out.as_ref()),
        Command::Paths(j) => (paths(j), j.out.as_ref()),
    };
    match result {
        Ok((output, code)) => {
            print!("{output}");
            if let Some(path) = out {
                if let Err(e) = fs::write(path, output.as_bytes()) {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
