//! The action of the mod-2 Steenrod squares `Sq^i` on `F2[x_1,...,x_k]`.
//!
//! On a monomial the Cartan formula gives
//!
//! ```text
//! Sq^i(x_1^{a_1} ... x_k^{a_k})
//!     = sum over i_1 + ... + i_k = i of
//!       prod_j C(a_j, i_j) x_j^{a_j + i_j}      (mod 2)
//! ```
//!
//! and by Lucas' theorem `C(a, b)` is odd exactly when the binary
//! digits of `b` are a submask of those of `a`. The composition
//! enumeration below therefore only ever walks submasks of each
//! exponent, pruning whole branches that cannot reach the required
//! total; monomials of the hit-problem sizes expand in microseconds.
//!
//! Only the action is implemented. Admissible bases of the algebra and
//! the Adem relations are never needed: the hit subspace in a fixed
//! degree is generated by the `Sq^(2^j)` alone, and the constructions
//! downstream rely on exactly that.

use crate::algebra::{Monomial, Polynomial};

/// True when the binomial coefficient `C(n, k)` is odd (Lucas).
pub fn binomial_is_odd(n: u32, k: u32) -> bool {
    k <= n && k & !n == 0
}

/// `Sq^i` applied to a single monomial.
///
/// The result is homogeneous of degree `deg(m) + i`; it is zero when
/// `i > deg(m)` (instability) and the exponent-doubled square of `m`
/// when `i = deg(m)`. Distinct compositions produce distinct output
/// monomials, so no cancellation happens inside a single call.
pub fn sq_monomial(i: u32, m: &Monomial) -> Polynomial {
    let mut out = Polynomial::zero(m.arity());
    if i == 0 {
        out.toggle(m.clone());
        return out;
    }
    if i > m.degree() {
        return out;
    }
    // suffix[j] = a_j + a_{j+1} + ... bounds how much of `i` the
    // remaining variables can still absorb (since i_j <= a_j).
    let exps = m.exponents();
    let mut suffix = vec![0u32; exps.len() + 1];
    for j in (0..exps.len()).rev() {
        suffix[j] = suffix[j + 1] + exps[j];
    }
    let mut cur = vec![0u32; exps.len()];
    distribute(exps, &suffix, 0, i, &mut cur, &mut out);
    out
}

fn distribute(
    exps: &[u32],
    suffix: &[u32],
    pos: usize,
    rest: u32,
    cur: &mut Vec<u32>,
    out: &mut Polynomial,
) {
    if pos == exps.len() {
        if rest == 0 {
            out.toggle(Monomial::new(cur.clone()));
        }
        return;
    }
    if rest > suffix[pos] {
        return;
    }
    // Enumerate the submasks s of exps[pos]; C(a, s) is odd for
    // exactly these, including s = 0.
    let a = exps[pos];
    let mut s = a;
    loop {
        if s <= rest {
            cur[pos] = a + s;
            distribute(exps, suffix, pos + 1, rest - s, cur, out);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & a;
    }
    cur[pos] = a;
}

/// `Sq^i` extended linearly over a polynomial, with mod-2 cancellation
/// between the images of different terms.
pub fn sq(i: u32, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.arity());
    for m in p.terms() {
        out += &sq_monomial(i, m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_polynomial;
    use crate::algebra::LinearSubstitution;
    use proptest::prelude::*;

    fn poly(s: &str, k: usize) -> Polynomial {
        parse_polynomial(s, k).unwrap()
    }

    #[test]
    fn lucas() {
        assert!(binomial_is_odd(7, 3));
        assert!(!binomial_is_odd(4, 2));
        assert!(binomial_is_odd(4, 4));
        assert!(binomial_is_odd(5, 1));
        assert!(!binomial_is_odd(5, 2));
        assert!(binomial_is_odd(0, 0));
        assert!(!binomial_is_odd(2, 3));
        // Cross-check against Pascal's rule for a small triangle.
        let mut row = vec![1u64];
        for n in 0..32u32 {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(c % 2 == 1, binomial_is_odd(n, k as u32), "C({n},{k})");
            }
            let mut next = vec![1];
            for w in row.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            row = next;
        }
    }

    #[test]
    fn single_power_examples() {
        let m = Monomial::from([7, 0, 0, 0, 0]);
        assert_eq!(sq_monomial(4, &m), poly("(11,0,0,0,0)", 5));

        let m = Monomial::from([7, 1, 1, 1]);
        assert_eq!(
            sq_monomial(1, &m),
            poly("(8,1,1,1)+(7,2,1,1)+(7,1,2,1)+(7,1,1,2)", 4)
        );

        let m = Monomial::from([5, 3, 2, 1, 0]);
        assert_eq!(sq_monomial(0, &m), poly("(5,3,2,1,0)", 5));

        // Instability: i beyond the degree kills the monomial.
        assert!(sq_monomial(12, &Monomial::from([7, 3, 1, 0, 0])).is_zero());
    }

    #[test]
    fn top_square_doubles() {
        let m = Monomial::from([4, 2, 1, 0, 0]);
        assert_eq!(sq_monomial(7, &m), poly("(8,4,2,0,0)", 5));
        assert_eq!(sq(4, &poly("(4,2,1,0,0)", 5)), poly("(8,2,1,0,0)", 5));
    }

    #[test]
    fn linearity_cancels() {
        let p = &poly("(7,1,1,1)", 4) + &poly("(7,1,1,1)", 4);
        assert!(sq(1, &p).is_zero());
    }

    #[test]
    fn never_produces_spikes() {
        // No term of Sq^i(Y), i >= 1, is a spike.
        for m in crate::algebra::monomial_basis(3, 9) {
            for i in 1..=9 {
                assert!(
                    sq_monomial(i, &m).terms().all(|t| !t.is_spike()),
                    "Sq^{i} {m} produced a spike"
                );
            }
        }
    }

    #[test]
    fn one_variable_powers_miss_two_power_minus_one() {
        // x^(2^n - 1) never occurs in Sq^i(x^a) for i >= 1, n <= 6.
        for n in 1..=6u32 {
            let target = (1 << n) - 1;
            for a in 0..target {
                let i = target - a;
                let image = sq_monomial(i, &Monomial::from([a]));
                assert!(
                    !image.contains(&Monomial::from([target])),
                    "Sq^{i} x^{a} hit x^{target}"
                );
            }
        }
    }

    fn arb_poly(k: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(prop::collection::vec(0..=max_exp, k), 0..=max_terms).prop_map(
            move |rows| {
                let mut p = Polynomial::zero(k);
                for row in rows {
                    p.toggle(Monomial::new(row));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn cartan_formula(p in arb_poly(3, 4, 4), q in arb_poly(3, 4, 4), n in 0u32..7) {
            let lhs = sq(n, &(&p * &q));
            let mut rhs = Polynomial::zero(3);
            for i in 0..=n {
                rhs += &(&sq(i, &p) * &sq(n - i, &q));
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn natural_under_substitution(
            p in arb_poly(3, 5, 4),
            rows in prop::collection::vec(1u64..8, 3),
            i in 0u32..8,
        ) {
            // Naturality holds for arbitrary (not necessarily
            // invertible) linear substitutions.
            let g = LinearSubstitution::from_rows(rows);
            prop_assert_eq!(sq(i, &p).substitute(&g), sq(i, &p.substitute(&g)));
        }

        #[test]
        fn instability(exps in prop::collection::vec(0u32..6, 1..5), extra in 1u32..5) {
            let m = Monomial::new(exps);
            let d = m.degree();
            prop_assert!(sq_monomial(d + extra, &m).is_zero());
            // The top square is the Frobenius square.
            let doubled = Monomial::new(m.exponents().iter().map(|&e| 2 * e).collect::<Vec<_>>());
            prop_assert_eq!(sq_monomial(d, &m), Polynomial::from(doubled));
        }
    }
}
