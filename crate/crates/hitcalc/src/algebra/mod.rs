//! Monomials, polynomials and linear substitutions over `F2`.
//!
//! Everything here is immutable after construction and purely
//! functional, so values can be shared freely across threads.

mod monomial;
mod polynomial;
mod substitution;
pub mod text;

pub use monomial::{monomial_basis, Monomial};
pub use polynomial::Polynomial;
pub use substitution::LinearSubstitution;
