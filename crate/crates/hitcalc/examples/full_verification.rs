//! Run the complete verification: the identity ledger, the family
//! spanning and decomposition checks, the GL_5 invariant computation,
//! and the concluding statement about the fifth algebraic transfer.
//!
//! Run with: cargo run --example full_verification

use hitcalc::suite::run_full_suite;

fn main() -> hitcalc::Result<()> {
    let report = run_full_suite(5, 11)?;
    print!("{}", report.render_text());

    // The same report as machine-readable JSON:
    //     println!("{}", report.to_json());

    std::process::exit(if report.passed() { 0 } else { 1 });
}
