//! The hit subspace, the cohit quotient, and hit certificates.
//!
//! For fixed `(k, d)` the hit subspace is the span of all
//! `Sq^i(q)` with `i >= 1` and `q` of degree `d - i`. Because the
//! Steenrod algebra is generated by the squares of two-power index,
//! rows for `Sq^1, Sq^2, Sq^4, ...` already span it; the construction
//! using every positive square is kept alongside as a reference and
//! the equivalence of the two is part of the test suite.
//!
//! A [`CohitSpace`] holds the reduced echelon form of the hit rows
//! together with the log of which `(i, monomial)` pair generated each
//! row. Quotient classes are represented canonically on the non-pivot
//! monomials, and the row log turns any membership certificate from
//! the solver into an explicit decomposition `p = sum Sq^i(q_i) + r`
//! that [`HitCertificate::verify`] re-checks with nothing but
//! polynomial arithmetic.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::text::parse_polynomial;
use crate::algebra::{monomial_basis, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::f2linalg::{Echelon, F2Matrix, F2Vector};
use crate::steenrod::{sq, sq_monomial};

/// Hit rows for degree `d` from the two-power squares only: one row
/// per pair of `Sq^(2^j)` with `2^j <= d` and source monomial of
/// degree `d - 2^j`. Rows are ordered by square index ascending, then
/// by source monomial in the global order; the returned log records
/// the generating pair for each row, zero rows included.
pub fn hit_matrix(k: usize, d: u32) -> (F2Matrix, Vec<(u32, Monomial)>) {
    assert!(k >= 1, "the polynomial algebra needs at least one variable");
    let full = monomial_basis(k, d);
    let index: HashMap<&Monomial, usize> = full.iter().zip(0..).collect();

    let mut log = Vec::new();
    let mut j = 0u32;
    while (1u64 << j) <= d as u64 {
        let i = 1u32 << j;
        for m in monomial_basis(k, d - i) {
            log.push((i, m));
        }
        j += 1;
    }

    let rows: Vec<F2Vector> = log
        .par_iter()
        .map(|(i, m)| {
            let image = sq_monomial(*i, m);
            F2Vector::from_ones(full.len(), image.terms().map(|t| index[t]))
        })
        .collect();

    (F2Matrix::from_rows(full.len(), rows), log)
}

/// Reference construction of the hit rows using every `Sq^i` with
/// `1 <= i <= d`. Its row space must equal that of [`hit_matrix`].
pub fn hit_matrix_all_squares(k: usize, d: u32) -> F2Matrix {
    assert!(k >= 1);
    let full = monomial_basis(k, d);
    let index: HashMap<&Monomial, usize> = full.iter().zip(0..).collect();
    let mut pairs = Vec::new();
    for i in 1..=d {
        for m in monomial_basis(k, d - i) {
            pairs.push((i, m));
        }
    }
    let rows: Vec<F2Vector> = pairs
        .par_iter()
        .map(|(i, m)| {
            let image = sq_monomial(*i, m);
            F2Vector::from_ones(full.len(), image.terms().map(|t| index[t]))
        })
        .collect();
    F2Matrix::from_rows(full.len(), rows)
}

/// The degree-`d` cohit quotient of `F2[x_1,...,x_k]`: the full
/// monomial basis, the echelon form of the hit subspace, and the
/// ordered set of representative monomials spanning the quotient.
pub struct CohitSpace {
    k: usize,
    d: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon,
    generator_log: Vec<(u32, Monomial)>,
    basis_cols: Vec<usize>,
    basis: Vec<Monomial>,
}

impl CohitSpace {
    /// Builds the quotient for `(k, d)`. Panics when `k = 0`.
    pub fn new(k: usize, d: u32) -> Self {
        let (matrix, generator_log) = hit_matrix(k, d);
        let echelon = matrix.echelon();
        let monomials = monomial_basis(k, d);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().zip(0..).collect();

        // Quotient representatives are the non-pivot monomials, kept in
        // the global order.
        let mut pivot_iter = echelon.pivots().iter().peekable();
        let mut basis_cols = Vec::new();
        for col in 0..monomials.len() {
            if pivot_iter.peek() == Some(&&col) {
                pivot_iter.next();
            } else {
                basis_cols.push(col);
            }
        }
        let basis = basis_cols.iter().map(|&c| monomials[c].clone()).collect();

        CohitSpace {
            k,
            d,
            monomials,
            index,
            echelon,
            generator_log,
            basis_cols,
            basis,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of degree-`d` monomials (the ambient dimension).
    pub fn monomial_count(&self) -> usize {
        self.monomials.len()
    }

    /// Rank of the hit subspace.
    pub fn hit_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// The representative monomials, in the global order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn generator_log(&self) -> &[(u32, Monomial)] {
        &self.generator_log
    }

    /// Coordinates of a polynomial in the full degree-`d` monomial
    /// basis. Panics if the arity or the degree does not match.
    pub fn coordinates(&self, p: &Polynomial) -> F2Vector {
        assert_eq!(p.arity(), self.k, "arity mismatch");
        let ones = p.terms().map(|m| {
            *self
                .index
                .get(m)
                .unwrap_or_else(|| panic!("term {m} does not have degree {}", self.d))
        });
        F2Vector::from_ones(self.monomials.len(), ones)
    }

    /// The class of `p` in the quotient, as coordinates over the
    /// representative basis. Linear; zero exactly for hit polynomials.
    pub fn reduce(&self, p: &Polynomial) -> F2Vector {
        let remainder = self.echelon.reduce(&self.coordinates(p));
        F2Vector::from_ones(
            self.basis.len(),
            self.basis_cols
                .iter()
                .enumerate()
                .filter(|&(_, &c)| remainder.get(c))
                .map(|(slot, _)| slot),
        )
    }

    /// True when `p` lies in the hit subspace.
    pub fn is_hit(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Turns class coordinates back into the canonical representative
    /// polynomial (a sum of basis monomials).
    pub fn class_polynomial(&self, coords: &F2Vector) -> Polynomial {
        assert_eq!(coords.len(), self.basis.len(), "dimension mismatch");
        let mut p = Polynomial::zero(self.k);
        for slot in coords.ones() {
            p.toggle(self.basis[slot].clone());
        }
        p
    }

    /// Explicit decomposition `p = sum_i Sq^i(source_i) + residue`,
    /// where the residue is the canonical representative of the class
    /// of `p` (zero exactly when `p` is hit). The summands come from
    /// the solver applied to `p + residue` and the generator log, so
    /// they are deterministic.
    pub fn certificate(&self, p: &Polynomial) -> HitCertificate {
        let residue = self.class_polynomial(&self.reduce(p));
        let hit_part = p + &residue;
        let combo = self
            .echelon
            .solve(&self.coordinates(&hit_part))
            .expect("p + residue lies in the hit subspace");
        let mut by_index: Vec<(u32, Polynomial)> = Vec::new();
        for row in combo.ones() {
            let (i, m) = &self.generator_log[row];
            match by_index.iter_mut().find(|(j, _)| j == i) {
                Some((_, q)) => q.toggle(m.clone()),
                None => by_index.push((*i, Polynomial::from(m.clone()))),
            }
        }
        by_index.sort_by_key(|(i, _)| *i);
        by_index.retain(|(_, q)| !q.is_zero());
        HitCertificate {
            k: self.k,
            d: self.d,
            target: p.clone(),
            summands: by_index,
            residue,
        }
    }
}

/// A self-contained, re-checkable decomposition
/// `target = sum Sq^i(source_i) + residue`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HitCertificate {
    pub k: usize,
    pub d: u32,
    pub target: Polynomial,
    pub summands: Vec<(u32, Polynomial)>,
    pub residue: Polynomial,
}

impl HitCertificate {
    /// Re-checks the stated decomposition by recomputing
    /// `target + sum Sq^i(source_i)` and comparing with the residue
    /// term by term. No linear algebra is involved, so this is an
    /// independent check on anything the solver produced.
    ///
    /// Returns `Ok(false)` for a well-formed certificate whose
    /// equation fails, and an error for structural problems (arity or
    /// degree inconsistencies, zero square index).
    pub fn verify(&self) -> Result<bool> {
        self.validate()?;
        let mut acc = self.target.clone();
        for (i, source) in &self.summands {
            acc += &sq(*i, source);
        }
        Ok(acc == self.residue)
    }

    fn validate(&self) -> Result<()> {
        let check_poly = |p: &Polynomial, what: &str, degree: u32| -> Result<()> {
            if p.arity() != self.k {
                return Err(Error::Certificate(format!(
                    "{what} has arity {}, certificate declares {}",
                    p.arity(),
                    self.k
                )));
            }
            if !p.is_homogeneous() {
                return Err(Error::Certificate(format!("{what} is not homogeneous")));
            }
            if let Some(got) = p.degree() {
                if got != degree {
                    return Err(Error::Certificate(format!(
                        "{what} has degree {got}, expected {degree}"
                    )));
                }
            }
            Ok(())
        };
        check_poly(&self.target, "target", self.d)?;
        check_poly(&self.residue, "residue", self.d)?;
        for (i, source) in &self.summands {
            if *i == 0 {
                return Err(Error::Certificate(
                    "square index 0 is not allowed in a hit decomposition".into(),
                ));
            }
            if *i > self.d {
                return Err(Error::Certificate(format!(
                    "square index {i} exceeds the degree {}",
                    self.d
                )));
            }
            check_poly(source, &format!("Sq^{i} source"), self.d - i)?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let file = CertificateFile {
            vars: self.k,
            degree: self.d,
            target: self.target.to_string(),
            summands: self
                .summands
                .iter()
                .map(|(i, source)| SummandFile {
                    i: *i,
                    source: source.to_string(),
                })
                .collect(),
            residue: self.residue.to_string(),
        };
        serde_json::to_string_pretty(&file).expect("certificate serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CertificateFile = serde_json::from_str(text)?;
        let k = file.vars;
        if k == 0 {
            return Err(Error::Certificate("vars must be at least 1".into()));
        }
        let target = parse_polynomial(&file.target, k)?;
        let residue = parse_polynomial(&file.residue, k)?;
        let mut summands = Vec::new();
        for s in file.summands {
            summands.push((s.i, parse_polynomial(&s.source, k)?));
        }
        Ok(HitCertificate {
            k,
            d: file.degree,
            target,
            summands,
            residue,
        })
    }
}

/// On-disk shape of a certificate; polynomials in the shared text
/// syntax.
#[derive(Serialize, Deserialize)]
struct CertificateFile {
    vars: usize,
    degree: u32,
    target: String,
    summands: Vec<SummandFile>,
    residue: String,
}

#[derive(Serialize, Deserialize)]
struct SummandFile {
    i: u32,
    source: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LinearSubstitution;
    use crate::f2linalg::same_rowspace;

    fn poly(s: &str, k: usize) -> Polynomial {
        parse_polynomial(s, k).unwrap()
    }

    #[test]
    fn one_variable_degree_three() {
        // Sq^1 x^2 = 0 and Sq^2 x = 0, so x^3 survives to the quotient.
        let c = CohitSpace::new(1, 3);
        assert_eq!(c.hit_rank(), 0);
        assert_eq!(c.dim(), 1);
        assert!(!c.is_hit(&poly("(3)", 1)));
    }

    #[test]
    fn degree_zero_and_constant() {
        let c = CohitSpace::new(4, 0);
        assert_eq!(c.dim(), 1);
        assert_eq!(c.monomial_count(), 1);
        assert_eq!(c.hit_rank(), 0);
    }

    #[test]
    fn two_variables_degree_five_all_hit() {
        // alpha(5 + 2) = 3 > 2, so everything is hit.
        let c = CohitSpace::new(2, 5);
        assert_eq!(c.dim(), 0);
        for m in monomial_basis(2, 5) {
            assert!(c.is_hit(&Polynomial::from(m)));
        }
        // The two-power rows span the same space as all squares.
        let (m2, _) = hit_matrix(2, 5);
        assert!(same_rowspace(&m2, &hit_matrix_all_squares(2, 5)));
    }

    #[test]
    fn generator_rows_for_degree_eleven() {
        let (m, log) = hit_matrix(5, 11);
        // Squares 1, 2, 4, 8 from degrees 10, 9, 7, 3.
        assert_eq!(m.ncols(), 1365);
        assert_eq!(log.len(), 1001 + 715 + 330 + 35);
        assert_eq!(m.nrows(), log.len());
        let mut indices: Vec<u32> = log.iter().map(|(i, _)| *i).collect();
        indices.dedup();
        assert_eq!(indices, vec![1, 2, 4, 8]);
    }

    #[test]
    fn reduce_examples_degree_eleven() {
        let c = CohitSpace::new(5, 11);
        assert!(c.reduce(&poly("(11,0,0,0,0)", 5)).is_zero());
        assert!(c.reduce(&Polynomial::zero(5)).is_zero());

        // Two expressions of the same class agree coordinate-wise.
        let lhs = c.reduce(&poly("(6,3,1,1,0)", 5));
        let rhs = c.reduce(&poly("(5,3,2,1,0)+(5,3,1,2,0)+(5,4,1,1,0)", 5));
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn hit_membership_examples() {
        let c = CohitSpace::new(5, 11);
        assert!(c.is_hit(&poly("(5,5,1,0,0)+(6,4,1,0,0)+(6,3,2,0,0)+(5,4,2,0,0)", 5)));
        assert!(!c.is_hit(&poly("(7,3,1,0,0)", 5)));
        assert!(c.is_hit(&Polynomial::zero(5)));
    }

    #[test]
    fn certificates_round_trip() {
        let c = CohitSpace::new(5, 11);

        let hit = poly("(11,0,0,0,0)", 5);
        let cert = c.certificate(&hit);
        assert!(cert.residue.is_zero());
        assert!(cert.verify().unwrap());

        // A spike is its own canonical class.
        let spike = poly("(7,3,1,0,0)", 5);
        let cert = c.certificate(&spike);
        assert!(cert.summands.is_empty());
        assert_eq!(cert.residue, spike);
        assert!(cert.verify().unwrap());

        // Zero target, empty certificate.
        let cert = c.certificate(&Polynomial::zero(5));
        assert!(cert.summands.is_empty());
        assert!(cert.residue.is_zero());
        assert!(cert.verify().unwrap());
    }

    #[test]
    fn tampered_certificates_fail() {
        let c = CohitSpace::new(5, 11);
        let good = c.certificate(&poly("(10,1,0,0,0)", 5));
        assert!(good.verify().unwrap());

        // Dropping a summand with a nonzero image breaks the equation.
        let mut cert = good.clone();
        let victim = cert
            .summands
            .iter()
            .position(|(i, q)| !sq(*i, q).is_zero())
            .expect("a hit polynomial has at least one effective summand");
        cert.summands.remove(victim);
        assert!(!cert.verify().unwrap());

        // So does corrupting the residue.
        let mut cert = good.clone();
        cert.residue.toggle(Monomial::from([7, 3, 1, 0, 0]));
        assert!(!cert.verify().unwrap());
    }

    #[test]
    fn malformed_certificates_error() {
        // Source of the wrong degree.
        let cert = HitCertificate {
            k: 2,
            d: 3,
            target: poly("(3,0)", 2),
            summands: vec![(1, poly("(3,0)", 2))],
            residue: Polynomial::zero(2),
        };
        assert!(matches!(cert.verify(), Err(Error::Certificate(_))));

        // Arity clash between target and declaration.
        let cert = HitCertificate {
            k: 3,
            d: 3,
            target: poly("(3,0)", 2),
            summands: vec![],
            residue: Polynomial::zero(3),
        };
        assert!(cert.verify().is_err());

        // Square index 0 is rejected.
        let cert = HitCertificate {
            k: 2,
            d: 3,
            target: poly("(3,0)", 2),
            summands: vec![(0, poly("(3,0)", 2))],
            residue: Polynomial::zero(2),
        };
        assert!(cert.verify().is_err());
    }

    #[test]
    fn certificate_json_round_trip() {
        let c = CohitSpace::new(4, 9);
        let cert = c.certificate(&poly("(4,3,1,1)+(6,1,1,1)", 4));
        let parsed = HitCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(parsed, cert);
        assert!(parsed.verify().unwrap());
    }

    #[test]
    fn reduce_is_natural_for_permutations() {
        // Permuting variables then reducing matches permuting the
        // reduced representative's class.
        let c = CohitSpace::new(3, 7);
        let g = LinearSubstitution::transposition(3, 0, 2);
        for m in monomial_basis(3, 7) {
            let p = Polynomial::from(m);
            let lhs = c.reduce(&p.substitute(&g));
            let rep = c.class_polynomial(&c.reduce(&p));
            let rhs = c.reduce(&rep.substitute(&g));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    #[should_panic(expected = "does not have degree")]
    fn reduce_rejects_wrong_degree() {
        let c = CohitSpace::new(2, 4);
        c.reduce(&poly("(3,0)", 2));
    }
}
