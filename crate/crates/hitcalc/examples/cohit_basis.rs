//! Compute cohit quotients (F2 (x)_A P_k)_d and print their bases.
//!
//! Run with: cargo run --example cohit_basis

use hitcalc::CohitSpace;

fn main() {
    // Small spaces first: the whole quotient fits on a screen.
    for (k, d) in [(2usize, 2u32), (3, 7), (4, 9)] {
        let space = CohitSpace::new(k, d);
        println!(
            "k={k} d={d}: {} monomials, hit rank {}, quotient dim {}",
            space.monomial_count(),
            space.hit_rank(),
            space.dim()
        );
        let shown = space.basis().iter().take(8).map(|m| m.to_string());
        println!(
            "  basis: {}{}",
            shown.collect::<Vec<_>>().join(", "),
            if space.dim() > 8 { ", ..." } else { "" }
        );
    }

    // The headline computation: degree 11 in five variables.
    let space = CohitSpace::new(5, 11);
    println!(
        "\nk=5 d=11: {} monomials, hit rank {}, quotient dim {}",
        space.monomial_count(),
        space.hit_rank(),
        space.dim()
    );
    println!("  first ten representatives:");
    for m in space.basis().iter().take(10) {
        println!("    {m}");
    }
}
