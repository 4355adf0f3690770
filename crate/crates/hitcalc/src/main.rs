use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hitcalc::algebra::text::parse_polynomial;
use hitcalc::invariants::{invariant_subspace_of, GroupSpec};
use hitcalc::suite::run_full_suite;
use hitcalc::{CohitSpace, HitCertificate, Polynomial};

#[derive(Parser)]
#[command(
    name = "hitcalc",
    version,
    about = "Hit problem and cohit computations over F2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the cohit quotient for (vars, degree) and print its basis.
    Cohit(CohitArgs),
    /// Compute the invariant subspace of a group action on the quotient.
    Invariants(InvariantsArgs),
    /// Decide hit membership of a polynomial; optionally write a certificate.
    HitTest(HitTestArgs),
    /// Work with certificate files.
    Certificate(CertificateArgs),
    /// Run the verification suite (full battery at vars=5, degree=11).
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct CohitArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
    vars: u64,
    #[arg(long)]
    degree: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct InvariantsArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
    vars: u64,
    #[arg(long)]
    degree: u32,
    #[arg(long, value_parser = ["gl", "sym"])]
    group: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HitTestArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
    vars: u64,
    /// Polynomial in the text syntax, e.g. "(11,0,0,0,0)" or a "+"-joined sum.
    #[arg(long)]
    poly: String,
    /// Write a certificate of the decomposition to this file.
    #[arg(long)]
    certificate: Option<std::path::PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CertificateArgs {
    #[command(subcommand)]
    action: CertificateAction,
}

#[derive(Subcommand)]
enum CertificateAction {
    /// Re-check a certificate file with pure polynomial arithmetic.
    Verify { file: std::path::PathBuf },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..=12))]
    vars: u64,
    #[arg(long, default_value_t = 11)]
    degree: u32,
    #[arg(long)]
    json: bool,
}

/// Refuses configurations whose degree-d monomial basis is too large to
/// eliminate interactively.
fn check_size(k: usize, d: u32) -> hitcalc::Result<()> {
    const LIMIT: u128 = 2_000_000;
    // C(d + k - 1, k - 1) by the multiplicative formula; every partial
    // product is itself a binomial coefficient, so division is exact.
    let mut count: u128 = 1;
    for i in 1..k as u128 {
        count = count * (d as u128 + i) / i;
        if count > LIMIT {
            return Err(hitcalc::Error::Unsupported(format!(
                "vars={k} degree={d} spans more than {LIMIT} monomials; pick a smaller configuration"
            )));
        }
    }
    Ok(())
}

fn configure_threads() {
    if let Ok(value) = std::env::var("HITCALC_THREADS") {
        if let Ok(n) = value.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> hitcalc::Result<ExitCode> {
    match cli.command {
        Command::Cohit(args) => {
            check_size(args.vars as usize, args.degree)?;
            let space = CohitSpace::new(args.vars as usize, args.degree);
            if args.json {
                let value = serde_json::json!({
                    "k": space.k(),
                    "degree": space.d(),
                    "monomials": space.monomial_count(),
                    "hit_rank": space.hit_rank(),
                    "dim": space.dim(),
                    "basis": space.basis().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!(
                    "cohit space: k={} d={} monomials={} hit rank={} dim={}",
                    space.k(),
                    space.d(),
                    space.monomial_count(),
                    space.hit_rank(),
                    space.dim()
                );
                for m in space.basis() {
                    println!("  {m}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants(args) => {
            let k = args.vars as usize;
            let group = match args.group.as_str() {
                "gl" => GroupSpec::general_linear(k),
                _ => GroupSpec::symmetric(k),
            };
            check_size(k, args.degree)?;
            let space = CohitSpace::new(k, args.degree);
            let report = invariant_subspace_of(&space, &group);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json_value())?);
            } else {
                println!(
                    "invariants: k={} d={} group={} cohit_dim={} invariant_dim={}",
                    report.k, report.d, report.group, report.cohit_dim, report.invariant_dim
                );
                println!(
                    "per-generator fixed dims: {:?}",
                    report.per_generator_fixed_dims
                );
                for p in &report.basis {
                    println!("  {p}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::HitTest(args) => {
            let k = args.vars as usize;
            let p = parse_polynomial(&args.poly, k)?;
            if !p.is_homogeneous() {
                return Err(hitcalc::Error::NotHomogeneous);
            }
            let degree = p.degree().unwrap_or(0);
            check_size(k, degree)?;
            let space = CohitSpace::new(k, degree);
            let cert = space.certificate(&p);
            let hit = cert.residue.is_zero();
            if args.json {
                let value = serde_json::json!({
                    "k": k,
                    "degree": degree,
                    "poly": p.to_string(),
                    "hit": hit,
                    "residue": cert.residue.to_string(),
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("polynomial: {p}");
                println!("degree: {degree}");
                println!("hit: {}", if hit { "yes" } else { "no" });
                if !hit {
                    println!("canonical residue: {}", cert.residue);
                }
            }
            if let Some(path) = args.certificate {
                std::fs::write(&path, cert.to_json())?;
                if !args.json {
                    println!("certificate written to {}", path.display());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certificate(args) => match args.action {
            CertificateAction::Verify { file } => {
                let text = std::fs::read_to_string(&file)?;
                let cert = HitCertificate::from_json(&text)?;
                let valid = cert.verify()?;
                let zero = Polynomial::zero(cert.k);
                println!(
                    "certificate: k={} d={} summands={} residue={}",
                    cert.k,
                    cert.d,
                    cert.summands.len(),
                    if cert.residue == zero { "0" } else { "nonzero" }
                );
                if valid {
                    println!("VALID: target + sum of squares equals the residue");
                    Ok(ExitCode::SUCCESS)
                } else {
                    println!("INVALID: recomputed sum does not match the residue");
                    Ok(ExitCode::FAILURE)
                }
            }
        },
        Command::VerifyPaper(args) => {
            check_size(args.vars as usize, args.degree)?;
            let report = run_full_suite(args.vars as usize, args.degree)?;
            if args.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}
