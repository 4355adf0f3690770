use std::fmt;

use crate::error::{Error, Result};

/// A linear change of variables over `F2`: a `k x k` matrix acting on
/// the polynomial algebra by `x_i -> sum_j m[i][j] x_j`.
///
/// Row `i` is stored as a bitmask over the variables (bit `j` set means
/// `x_j` occurs in the image of `x_i`), which caps the arity at 64 —
/// far beyond anything the hit problem can reach.
///
/// Invertibility over `F2` (determinant 1) is computed once at
/// construction and cached.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearSubstitution {
    rows: Vec<u64>,
    invertible: bool,
}

impl LinearSubstitution {
    pub fn from_rows(rows: Vec<u64>) -> Self {
        let k = rows.len();
        assert!((1..=64).contains(&k), "arity must be between 1 and 64");
        let mask = if k == 64 { !0 } else { (1u64 << k) - 1 };
        assert!(
            rows.iter().all(|&r| r & !mask == 0),
            "row uses variables beyond arity {k}"
        );
        let invertible = rank(&rows) == k;
        LinearSubstitution { rows, invertible }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_rows((0..k).map(|i| 1u64 << i).collect())
    }

    /// Swaps the variables `a` and `b`, fixing the rest.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        assert!(a < k && b < k);
        let mut rows: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
        rows.swap(a, b);
        Self::from_rows(rows)
    }

    /// Sends `x_a` to `x_a + x_b`, fixing the other variables.
    pub fn transvection(k: usize, a: usize, b: usize) -> Self {
        assert!(a < k && b < k && a != b);
        let mut rows: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
        rows[a] |= 1u64 << b;
        Self::from_rows(rows)
    }

    pub fn arity(&self) -> usize {
        self.rows.len()
    }

    /// Bitmask of the image of `x_i`.
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn is_invertible(&self) -> bool {
        self.invertible
    }

    /// The substitution "apply `self`, then apply `next`".
    ///
    /// Substituting by `g` and then by `h` replaces `x_i` first with
    /// `sum_j g[i][j] x_j` and then each `x_j` with its `h`-image, which
    /// is the single substitution with matrix `g * h`.
    pub fn then(&self, next: &LinearSubstitution) -> LinearSubstitution {
        assert_eq!(self.arity(), next.arity(), "substitution arity mismatch");
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0u64;
                for j in 0..self.arity() {
                    if r & (1 << j) != 0 {
                        acc ^= next.rows[j];
                    }
                }
                acc
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Parses the assignment syntax `"x1->x1+x2; x3->x2"`.
    ///
    /// Variables are named `x1..xk`; variables without an assignment
    /// map to themselves, and the empty string is the identity.
    pub fn parse(s: &str, k: usize) -> Result<Self> {
        assert!((1..=64).contains(&k));
        let mut rows: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (lhs, rhs) = part
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("missing '->' in `{part}`")))?;
            let target = parse_var(lhs.trim(), k)?;
            let mut mask = 0u64;
            for v in rhs.split('+') {
                mask ^= 1u64 << parse_var(v.trim(), k)?;
            }
            rows[target] = mask;
        }
        Ok(Self::from_rows(rows))
    }
}

fn parse_var(s: &str, k: usize) -> Result<usize> {
    let idx: usize = s
        .strip_prefix('x')
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected a variable like x1, got `{s}`")))?;
    if idx == 0 || idx > k {
        return Err(Error::Parse(format!(
            "variable {s} out of range for arity {k}"
        )));
    }
    Ok(idx - 1)
}

/// Rank of a small bitmask matrix, by elimination on the 64-bit rows.
fn rank(rows: &[u64]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for col in 0..64 {
        let Some(pos) = (rank..rows.len()).find(|&r| rows[r] & (1 << col) != 0) else {
            continue;
        };
        rows.swap(rank, pos);
        for r in 0..rows.len() {
            if r != rank && rows[r] & (1 << col) != 0 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

impl fmt::Display for LinearSubstitution {
    /// Prints only the rows that differ from the identity; the identity
    /// itself prints as `"id"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &r) in self.rows.iter().enumerate() {
            if r == 1 << i {
                continue;
            }
            if wrote {
                write!(f, "; ")?;
            }
            write!(f, "x{}->", i + 1)?;
            let mut first = true;
            for j in 0..self.arity() {
                if r & (1 << j) != 0 {
                    if !first {
                        write!(f, "+")?;
                    }
                    write!(f, "x{}", j + 1)?;
                    first = false;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearSubstitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
