//! The Steenrod squares acting on F2[x,y,z,...]: Cartan expansion,
//! instability, and the Frobenius top square.
//!
//! Run with: cargo run --example steenrod_action

use hitcalc::steenrod::{sq, sq_monomial};
use hitcalc::{Monomial, Polynomial};

fn main() {
    let m = Monomial::from([7, 1, 1, 1]);
    for i in 0..=3 {
        println!("Sq^{i} (7,1,1,1) = {}", sq_monomial(i, &m));
    }

    // i above the degree dies; i equal to the degree squares.
    let m = Monomial::from([2, 1]);
    println!("\nSq^4 (2,1) = {}", sq_monomial(4, &m));
    println!(
        "Sq^3 (2,1) = {}  (the Frobenius square)",
        sq_monomial(3, &m)
    );

    // The Cartan formula distributes a square over a product.
    let p = Polynomial::from(Monomial::from([1, 2]));
    let q = Polynomial::from(Monomial::from([2, 1]));
    let product = &p * &q;
    let n = 2;
    let direct = sq(n, &product);
    let mut cartan = Polynomial::zero(2);
    for i in 0..=n {
        cartan += &(&sq(i, &p) * &sq(n - i, &q));
    }
    println!("\nSq^{n}((1,2)*(2,1))          = {direct}");
    println!("sum_i Sq^i (1,2) * Sq^(n-i) (2,1) = {cartan}");
    assert_eq!(direct, cartan);
}
