use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use super::monomial::Monomial;
use super::substitution::LinearSubstitution;

/// A polynomial over `F2` in `k` variables: a finite set of monomials,
/// where membership means coefficient 1. Addition is symmetric
/// difference, so `p + p = 0` for every `p`.
///
/// The arity travels with the value (a zero polynomial still knows its
/// arity); combining polynomials of different arities panics.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeSet::new(),
        }
    }

    /// The constant polynomial 1 of the given arity.
    pub fn one(arity: usize) -> Self {
        Polynomial::from(Monomial::one(arity))
    }

    /// Builds a polynomial from exponent tuples, cancelling mod 2.
    pub fn from_exponents<const K: usize>(rows: &[[u32; K]]) -> Self {
        let mut p = Polynomial::zero(K);
        for &row in rows {
            p.toggle(row.into());
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the global (descending lexicographic) monomial order.
    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().rev()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Flips the coefficient of `m`: the mod-2 version of `+= m`.
    pub fn toggle(&mut self, m: Monomial) {
        assert_eq!(
            m.arity(),
            self.arity,
            "term arity {} does not match polynomial arity {}",
            m.arity(),
            self.arity
        );
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// True when all terms have the same total degree. The zero
    /// polynomial is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial, `None` when zero.
    ///
    /// Panics if the polynomial is not homogeneous.
    pub fn degree(&self) -> Option<u32> {
        assert!(self.is_homogeneous(), "polynomial is not homogeneous");
        self.terms.iter().next().map(|m| m.degree())
    }

    /// Applies the linear substitution `x_i -> sum_j g[i][j] x_j` to
    /// every variable, expanding and cancelling mod 2. Homogeneous
    /// inputs stay homogeneous of the same degree.
    pub fn substitute(&self, g: &LinearSubstitution) -> Polynomial {
        assert_eq!(
            g.arity(),
            self.arity,
            "substitution arity {} does not match polynomial arity {}",
            g.arity(),
            self.arity
        );
        let mut out = Polynomial::zero(self.arity);
        for m in &self.terms {
            out += &substitute_monomial(m, g);
        }
        out
    }

    /// Kills the variables in `kill`: terms with a positive exponent on
    /// a killed variable are deleted, the rest are re-indexed into
    /// arity `k - |kill|`. This is the quotient map onto
    /// `P_k / (x_i : i in kill)`.
    pub fn project(&self, kill: &[usize]) -> Polynomial {
        let mut kill: Vec<usize> = kill.to_vec();
        kill.sort_unstable();
        kill.dedup();
        assert!(
            kill.iter().all(|&i| i < self.arity),
            "kill set out of range for arity {}",
            self.arity
        );
        let mut out = Polynomial::zero(self.arity - kill.len());
        for m in &self.terms {
            if kill.iter().all(|&i| m.exponent(i) == 0) {
                out.toggle(m.drop_variables(&kill));
            }
        }
        out
    }
}

/// Image of a single monomial under a linear substitution: the product
/// over the variables of (image linear form)^exponent.
///
/// Each power is computed from its binary digits via the Frobenius:
/// over `F2`, `(sum_j c_j x_j)^(2^t) = sum_j c_j x_j^(2^t)`.
fn substitute_monomial(m: &Monomial, g: &LinearSubstitution) -> Polynomial {
    let k = m.arity();
    let mut acc = Polynomial::one(k);
    for (var, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let row = g.row(var);
        let mut rest = e;
        let mut bit = 0u32;
        while rest != 0 {
            if rest & 1 != 0 {
                let mut factor = Polynomial::zero(k);
                for j in 0..k {
                    if row & (1 << j) != 0 {
                        let mut exps = vec![0u32; k];
                        exps[j] = 1 << bit;
                        factor.toggle(Monomial::new(exps));
                    }
                }
                acc = &acc * &factor;
            }
            rest >>= 1;
            bit += 1;
        }
    }
    acc
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        let arity = m.arity();
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Polynomial { arity, terms }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(
            self.arity, rhs.arity,
            "polynomial arity mismatch: {} vs {}",
            self.arity, rhs.arity
        );
        for m in &rhs.terms {
            if !self.terms.remove(m) {
                self.terms.insert(m.clone());
            }
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(
            self.arity, rhs.arity,
            "polynomial arity mismatch: {} vs {}",
            self.arity, rhs.arity
        );
        let mut out = Polynomial::zero(self.arity);
        for a in &self.terms {
            for b in &rhs.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
