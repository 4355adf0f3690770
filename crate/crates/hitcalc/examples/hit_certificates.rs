//! Decide hit membership and produce certificates that an independent
//! checker re-verifies with nothing but polynomial arithmetic.
//!
//! Run with: cargo run --example hit_certificates

use hitcalc::algebra::text::parse_polynomial;
use hitcalc::{CohitSpace, HitCertificate};

fn main() -> hitcalc::Result<()> {
    let space = CohitSpace::new(5, 11);

    for input in [
        "(11,0,0,0,0)",                                    // hit: a single square does it
        "(6,3,1,1,0)",                                     // not hit, nontrivial residue
        "(7,3,1,0,0)",                                     // a spike: its own residue
        "(5,5,1,0,0)+(6,4,1,0,0)+(6,3,2,0,0)+(5,4,2,0,0)", // hit combination
    ] {
        let p = parse_polynomial(input, 5)?;
        let cert = space.certificate(&p);
        println!("target   {p}");
        println!("  hit:     {}", cert.residue.is_zero());
        println!("  residue: {}", cert.residue);
        for (i, source) in &cert.summands {
            println!("  Sq^{i} applied to {source}");
        }
        assert!(cert.verify()?, "certificate must re-verify");
        println!();
    }

    // Certificates survive a trip through their JSON file format.
    let p = parse_polynomial("(9,2,0,0,0)", 5)?;
    let cert = space.certificate(&p);
    let path = std::env::temp_dir().join("hitcalc_example_certificate.json");
    std::fs::write(&path, cert.to_json())?;
    let reloaded = HitCertificate::from_json(&std::fs::read_to_string(&path)?)?;
    println!(
        "reloaded certificate from {} verifies: {}",
        path.display(),
        reloaded.verify()?
    );
    Ok(())
}
