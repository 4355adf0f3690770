use std::fmt;

/// A monomial in `F2[x_1, ..., x_k]`, stored as its exponent tuple.
///
/// The arity `k` is the length of the tuple and is a value-level
/// property: operations never coerce between arities. Equality is
/// equality of exponent tuples.
///
/// The derived `Ord` is ascending lexicographic on the tuple. The
/// global monomial order used for bases, pivots and printing is
/// *descending* lexicographic, i.e. the reverse of `Ord`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: impl Into<Vec<u32>>) -> Self {
        Monomial { exps: exps.into() }
    }

    /// The constant monomial 1 of the given arity (all exponents zero).
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    /// Total degree, the sum of the exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// True when every exponent has the form `2^n - 1` (0 qualifies).
    ///
    /// Such monomials are called spikes; they never occur in the image
    /// of a positive-degree Steenrod square.
    pub fn is_spike(&self) -> bool {
        self.exps.iter().all(|&e| e & (e + 1) == 0)
    }

    /// Exponent-wise product with another monomial of the same arity.
    ///
    /// Panics on arity mismatch or exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(
            self.arity(),
            other.arity(),
            "monomial arity mismatch: {} vs {}",
            self.arity(),
            other.arity()
        );
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Drops the variables listed in `kill` (indices into the tuple),
    /// keeping the order of the survivors. Used by the quotient maps
    /// `P_k -> P_k / (x_i : i in kill)`.
    pub fn drop_variables(&self, kill: &[usize]) -> Monomial {
        let exps = self
            .exps
            .iter()
            .enumerate()
            .filter(|(i, _)| !kill.contains(i))
            .map(|(_, &e)| e)
            .collect();
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const K: usize> From<[u32; K]> for Monomial {
    fn from(exps: [u32; K]) -> Self {
        Monomial::new(exps.to_vec())
    }
}

impl From<&[u32]> for Monomial {
    fn from(exps: &[u32]) -> Self {
        Monomial::new(exps.to_vec())
    }
}

/// All monomials of arity `k` and total degree `d`, in descending
/// lexicographic order. The count is `C(d + k - 1, k - 1)`.
pub fn monomial_basis(k: usize, d: u32) -> Vec<Monomial> {
    assert!(k >= 1, "monomial_basis requires at least one variable");
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fill(&mut out, &mut cur, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, pos: usize, rest: u32) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(Monomial::new(cur.clone()));
        return;
    }
    // Highest exponent first keeps the output in descending lex order.
    for e in (0..=rest).rev() {
        cur[pos] = e;
        fill(out, cur, pos + 1, rest - e);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sums_exponents() {
        assert_eq!(Monomial::from([7, 3, 1, 0, 0]).degree(), 11);
        assert_eq!(Monomial::from([0, 0, 0, 0, 0]).degree(), 0);
        assert_eq!(Monomial::from([11, 0, 0, 0, 0]).degree(), 11);
    }

    #[test]
    fn spikes() {
        assert!(Monomial::from([7, 1, 1, 1, 1]).is_spike());
        assert!(!Monomial::from([4, 3, 2, 1, 1]).is_spike());
        assert!(Monomial::from([0, 0, 0, 0, 0]).is_spike());
        assert!(Monomial::from([3, 3, 3, 1, 1]).is_spike());
        assert!(!Monomial::from([5, 3, 3, 0, 0]).is_spike());
    }

    #[test]
    fn basis_small() {
        let b = monomial_basis(2, 2);
        let expected: Vec<Monomial> = [[2, 0], [1, 1], [0, 2]].iter().map(|&e| e.into()).collect();
        assert_eq!(b, expected);
    }

    #[test]
    fn basis_count_and_order() {
        let b = monomial_basis(5, 11);
        assert_eq!(b.len(), 1365); // C(15,4)
        for w in b.windows(2) {
            assert!(w[0] > w[1], "descending lex violated: {} {}", w[0], w[1]);
        }
        assert!(b.iter().all(|m| m.degree() == 11));
    }

    #[test]
    fn basis_one_variable() {
        assert_eq!(monomial_basis(1, 5), vec![Monomial::from([5])]);
    }

    #[test]
    fn basis_counts_match_binomials() {
        // C(d + k - 1, k - 1) entries, via a small Pascal triangle.
        let mut pascal = vec![vec![1u64]];
        for n in 1..20 {
            let prev: &Vec<u64> = &pascal[n - 1];
            let mut row = vec![1];
            for i in 1..n {
                row.push(prev[i - 1] + prev[i]);
            }
            row.push(1);
            pascal.push(row);
        }
        for k in 1..=5usize {
            for d in 0..=10u32 {
                let expected = pascal[d as usize + k - 1][k - 1] as usize;
                assert_eq!(monomial_basis(k, d).len(), expected, "k={k} d={d}");
            }
        }
    }

    #[test]
    fn drop_variables() {
        let m = Monomial::from([5, 3, 3, 0, 0]);
        assert_eq!(m.drop_variables(&[3, 4]), Monomial::from([5, 3, 3]));
        assert_eq!(m.drop_variables(&[]), m);
    }
}
