//! Group actions on the cohit quotient and their fixed subspaces.
//!
//! Invertible substitutions act on classes because the Steenrod action
//! commutes with linear maps, so each group element `g` induces a
//! square matrix `A_g` on cohit coordinates. The invariants of a group
//! are computed as the intersection over a generating set of the
//! kernels of `A_g + I` — there is no averaging over a group in
//! characteristic 2, so the kernel intersection is the whole story.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{LinearSubstitution, Polynomial};
use crate::f2linalg::{canonical_basis, intersect, F2Matrix, F2Vector};
use crate::hit::CohitSpace;

/// Generators of `GL_k(F2)`: the adjacent transpositions together with
/// the transvection `x_1 -> x_1 + x_2`. Empty for `k = 1`, where the
/// group is trivial.
pub fn gl_generators(k: usize) -> Vec<LinearSubstitution> {
    assert!(k >= 1);
    let mut gens = Vec::new();
    for i in 0..k.saturating_sub(1) {
        gens.push(LinearSubstitution::transposition(k, i, i + 1));
    }
    if k >= 2 {
        gens.push(LinearSubstitution::transvection(k, 0, 1));
    }
    gens
}

/// Generators of the symmetric group on the variables: the adjacent
/// transpositions.
pub fn symmetric_generators(k: usize) -> Vec<LinearSubstitution> {
    assert!(k >= 1);
    (0..k.saturating_sub(1))
        .map(|i| LinearSubstitution::transposition(k, i, i + 1))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupKind {
    GeneralLinear,
    Symmetric,
    Custom,
}

impl GroupKind {
    pub fn label(self) -> &'static str {
        match self {
            GroupKind::GeneralLinear => "gl",
            GroupKind::Symmetric => "sym",
            GroupKind::Custom => "custom",
        }
    }
}

/// A subgroup of `GL_k(F2)` given by a generating set of invertible
/// substitutions.
#[derive(Clone)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub generators: Vec<LinearSubstitution>,
}

impl GroupSpec {
    pub fn general_linear(k: usize) -> Self {
        GroupSpec {
            kind: GroupKind::GeneralLinear,
            generators: gl_generators(k),
        }
    }

    pub fn symmetric(k: usize) -> Self {
        GroupSpec {
            kind: GroupKind::Symmetric,
            generators: symmetric_generators(k),
        }
    }

    /// Panics unless every generator is invertible and of equal arity.
    pub fn custom(generators: Vec<LinearSubstitution>) -> Self {
        assert!(
            generators.iter().all(|g| g.is_invertible()),
            "group generators must be invertible"
        );
        if let Some(first) = generators.first() {
            assert!(
                generators.iter().all(|g| g.arity() == first.arity()),
                "group generators must share one arity"
            );
        }
        GroupSpec {
            kind: GroupKind::Custom,
            generators,
        }
    }
}

/// The matrix of the induced action of `g` on the quotient: column `j`
/// holds the class coordinates of `g` applied to the `j`-th basis
/// representative.
pub fn action_matrix(g: &LinearSubstitution, space: &CohitSpace) -> F2Matrix {
    assert_eq!(g.arity(), space.k(), "substitution arity mismatch");
    let dim = space.dim();
    let cols: Vec<F2Vector> = space
        .basis()
        .par_iter()
        .map(|m| space.reduce(&Polynomial::from(m.clone()).substitute(g)))
        .collect();
    let mut rows = F2Matrix::from_rows(dim, vec![F2Vector::zero(dim); dim]);
    for (j, col) in cols.iter().enumerate() {
        for r in col.ones() {
            rows.flip(r, j);
        }
    }
    rows
}

/// Basis of the fixed space of one substitution: the kernel of
/// `A_g + I` on cohit coordinates.
pub fn fixed_subspace(g: &LinearSubstitution, space: &CohitSpace) -> Vec<F2Vector> {
    let mut m = action_matrix(g, space);
    for i in 0..space.dim() {
        m.flip(i, i);
    }
    m.kernel()
}

/// The computed invariants of a group action on one cohit quotient.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub k: usize,
    pub d: u32,
    pub group: String,
    pub cohit_dim: usize,
    pub invariant_dim: usize,
    pub per_generator_fixed_dims: Vec<usize>,
    /// Canonical representative polynomials of an invariant basis.
    pub basis: Vec<Polynomial>,
}

impl InvariantReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(InvariantReportFile {
            k: self.k,
            d: self.d,
            group: &self.group,
            cohit_dim: self.cohit_dim,
            invariant_dim: self.invariant_dim,
            per_generator_fixed_dims: &self.per_generator_fixed_dims,
            basis: self.basis.iter().map(|p| p.to_string()).collect(),
        })
        .expect("report serialization")
    }
}

#[derive(Serialize)]
struct InvariantReportFile<'a> {
    k: usize,
    d: u32,
    group: &'a str,
    cohit_dim: usize,
    invariant_dim: usize,
    per_generator_fixed_dims: &'a [usize],
    basis: Vec<String>,
}

/// Invariants of `group` on the quotient held by `space`.
///
/// Fixed spaces are intersected in generator-list order; the result is
/// canonicalized, so it does not depend on that order.
pub fn invariant_subspace_of(space: &CohitSpace, group: &GroupSpec) -> InvariantReport {
    let dim = space.dim();
    let fixed: Vec<Vec<F2Vector>> = group
        .generators
        .par_iter()
        .map(|g| fixed_subspace(g, space))
        .collect();
    let per_generator_fixed_dims: Vec<usize> = fixed.iter().map(|b| b.len()).collect();

    let basis_matrix = if group.generators.is_empty() {
        // Trivial group: everything is invariant.
        F2Matrix::identity(dim)
    } else {
        let spaces: Vec<F2Matrix> = fixed
            .into_iter()
            .map(|b| F2Matrix::from_rows(dim, b))
            .collect();
        canonical_basis(intersect(&spaces))
    };

    let basis: Vec<Polynomial> = basis_matrix
        .rows()
        .iter()
        .map(|v| space.class_polynomial(v))
        .collect();

    InvariantReport {
        k: space.k(),
        d: space.d(),
        group: group.kind.label().to_string(),
        cohit_dim: dim,
        invariant_dim: basis.len(),
        per_generator_fixed_dims,
        basis,
    }
}

/// Convenience wrapper that builds the cohit space first.
pub fn invariant_subspace(k: usize, d: u32, group: &GroupSpec) -> InvariantReport {
    invariant_subspace_of(&CohitSpace::new(k, d), group)
}

/// One projected invariant representative: its image under the
/// variable-killing map and the class of that image downstairs.
#[derive(Clone, Debug)]
pub struct ReplayEntry {
    pub representative: Polynomial,
    pub image: Polynomial,
    pub image_class: Polynomial,
    pub image_class_is_zero: bool,
}

/// Result of pushing every invariant basis vector through a projection
/// `P_k -> P_(k - |kill|)` and re-reducing in the smaller quotient.
#[derive(Clone, Debug)]
pub struct ProjectionReplay {
    pub k: usize,
    pub d: u32,
    pub kill: Vec<usize>,
    pub group: String,
    pub invariant_dim: usize,
    /// True when the invariant basis upstairs is empty, so there was
    /// nothing to project.
    pub vacuous: bool,
    pub entries: Vec<ReplayEntry>,
}

impl ProjectionReplay {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "d": self.d,
            "kill": self.kill,
            "group": self.group,
            "invariant_dim": self.invariant_dim,
            "vacuous": self.vacuous,
            "entries": self.entries.iter().map(|e| serde_json::json!({
                "representative": e.representative.to_string(),
                "image": e.image.to_string(),
                "image_class": e.image_class.to_string(),
                "image_class_is_zero": e.image_class_is_zero,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Projects the invariant basis of `group` at `(k, d)` along `kill`
/// and reports the classes of the images in the smaller cohit space.
/// This mechanizes the hand arguments that pass from five variables to
/// four- and three-variable quotients.
pub fn replay_projection(k: usize, d: u32, kill: &[usize], group: &GroupSpec) -> ProjectionReplay {
    let mut kill: Vec<usize> = kill.to_vec();
    kill.sort_unstable();
    kill.dedup();
    assert!(kill.iter().all(|&i| i < k), "kill set out of range");
    assert!(kill.len() < k, "cannot kill every variable");

    let space = CohitSpace::new(k, d);
    let report = invariant_subspace_of(&space, group);
    let target = CohitSpace::new(k - kill.len(), d);

    let entries: Vec<ReplayEntry> = report
        .basis
        .iter()
        .map(|p| {
            let image = p.project(&kill);
            let class = target.class_polynomial(&target.reduce(&image));
            ReplayEntry {
                representative: p.clone(),
                image,
                image_class_is_zero: class.is_zero(),
                image_class: class,
            }
        })
        .collect();

    ProjectionReplay {
        k,
        d,
        kill,
        group: report.group.clone(),
        invariant_dim: report.invariant_dim,
        vacuous: report.basis.is_empty(),
        entries,
    }
}
