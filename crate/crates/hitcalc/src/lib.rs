//! Mod-2 hit problem calculator for polynomial algebras under the
//! Steenrod algebra action.
//!
//! The library computes, for `F2[x_1,...,x_k]` in a fixed degree:
//!
//! * the action of the Steenrod squares ([`steenrod`]);
//! * the hit subspace and the cohit quotient with a canonical
//!   representative basis ([`hit`]), plus explicit, independently
//!   re-checkable hit certificates;
//! * the induced `GL_k(F2)` (and subgroup) action on the quotient and
//!   its invariant subspace ([`invariants`]);
//! * a full verification suite ([`suite`]) reproducing the degree-11,
//!   five-variable computation: the quotient has dimension 315, its
//!   `GL_5` invariants vanish, and consequently the fifth algebraic
//!   transfer misses the nonzero element `P(h_2)` of
//!   `Ext_A^{5,16}(F2,F2)`.
//!
//! The `examples/` directory shows one runnable program per
//! capability; the `hitcalc` binary exposes the same entry points as
//! subcommands. Respecting the environment variable `HITCALC_THREADS`
//! is the caller's job (the binary does it); the library itself uses
//! whatever rayon pool is installed, and all results are deterministic
//! regardless of thread count.

pub mod algebra;
mod error;
pub mod f2linalg;
pub mod hit;
pub mod invariants;
pub mod steenrod;
pub mod suite;

pub use algebra::{monomial_basis, LinearSubstitution, Monomial, Polynomial};
pub use error::{Error, Result};
pub use hit::{CohitSpace, HitCertificate};
pub use invariants::{GroupKind, GroupSpec, InvariantReport};
pub use suite::SuiteReport;
