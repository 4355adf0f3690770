//! The shared text syntax: a monomial is its exponent tuple
//! `"(a1,a2,...,ak)"` with decimal exponents, a polynomial is monomials
//! joined by `"+"` (or the single token `"0"`), and whitespace is
//! insignificant. The CLI, certificate files and the identity ledger
//! all use this syntax.

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Parses one exponent tuple, checking it has exactly `k` entries.
pub fn parse_monomial(s: &str, k: usize) -> Result<Monomial> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected `(a1,...,ak)`, got `{s}`")))?;
    let mut exps = Vec::new();
    for field in inner.split(',') {
        let e: u32 = field
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent `{}` in `{s}`", field.trim())))?;
        exps.push(e);
    }
    if exps.len() != k {
        return Err(Error::Arity {
            expected: k,
            got: exps.len(),
        });
    }
    Ok(Monomial::new(exps))
}

/// Parses a `+`-separated sum of monomials of arity `k`, cancelling
/// repeated terms mod 2. `"0"` denotes the zero polynomial.
pub fn parse_polynomial(s: &str, k: usize) -> Result<Polynomial> {
    let trimmed = s.trim();
    if trimmed == "0" {
        return Ok(Polynomial::zero(k));
    }
    if trimmed.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Polynomial::zero(k);
    for part in trimmed.split('+') {
        p.toggle(parse_monomial(part, k)?);
    }
    Ok(p)
}
