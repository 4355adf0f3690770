//! Fixed points of group actions on cohit quotients: the symmetric
//! group versus the full general linear group, ending with the
//! vanishing GL_5 invariants in degree 11.
//!
//! Run with: cargo run --example gl_invariants

use hitcalc::invariants::invariant_subspace_of;
use hitcalc::{CohitSpace, GroupSpec};

fn main() {
    for (k, d) in [(2usize, 2u32), (3, 7), (4, 9)] {
        let space = CohitSpace::new(k, d);
        let gl = invariant_subspace_of(&space, &GroupSpec::general_linear(k));
        let sym = invariant_subspace_of(&space, &GroupSpec::symmetric(k));
        println!(
            "k={k} d={d}: cohit dim {:3}   sym-invariants {:2}   gl-invariants {:2}",
            gl.cohit_dim, sym.invariant_dim, gl.invariant_dim
        );
        for p in &gl.basis {
            println!("    gl-invariant class: {p}");
        }
    }

    let space = CohitSpace::new(5, 11);
    let gl = invariant_subspace_of(&space, &GroupSpec::general_linear(5));
    println!(
        "\nk=5 d=11: cohit dim {}, per-generator fixed dims {:?}",
        gl.cohit_dim, gl.per_generator_fixed_dims
    );
    println!(
        "GL_5 invariant dimension: {} — every simultaneous fixed class is zero",
        gl.invariant_dim
    );
    println!(
        "{}",
        serde_json::to_string_pretty(&gl.to_json_value()).unwrap()
    );
}
