//! Bit-packed linear algebra over `F2`.
//!
//! Vectors pack 64 coordinates per machine word and row operations are
//! word-wise XOR, so the eliminations behind the cohit computations
//! (a couple of thousand rows by ~1400 columns at the largest) run in
//! milliseconds. Everything is deterministic: pivots are chosen by
//! lowest column index, then lowest row index, which makes reduced
//! echelon forms, solutions and kernel bases reproducible across runs
//! and platforms.

use std::fmt;

/// A vector of `len` bits, packed little-endian into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zero(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = F2Vector::zero(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the first set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rem = w;
            std::iter::from_fn(move || {
                if rem == 0 {
                    return None;
                }
                let bit = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A matrix over `F2`, stored as a list of packed rows of equal length.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    ncols: usize,
    rows: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn new(ncols: usize) -> Self {
        F2Matrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<F2Vector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols));
        F2Matrix { ncols, rows }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| F2Vector::from_ones(n, [i])).collect();
        F2Matrix { ncols: n, rows }
    }

    pub fn push_row(&mut self, row: F2Vector) {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.rows[i].flip(j);
    }

    /// Matrix-vector product `M v` (rows dot `v`).
    pub fn mul_vector(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.ncols, "dimension mismatch");
        let mut out = F2Vector::zero(self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = 0u64;
            for (a, b) in row.words.iter().zip(&v.words) {
                acc ^= a & b;
            }
            if acc.count_ones() & 1 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// Reduced row echelon form with a row-operation log.
    pub fn echelon(&self) -> Echelon {
        let nrows = self.rows.len();
        let mut rows: Vec<F2Vector> = Vec::new();
        let mut transform: Vec<F2Vector> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();

        for (idx, orig) in self.rows.iter().enumerate() {
            let mut r = orig.clone();
            let mut t = F2Vector::from_ones(nrows, [idx]);
            // Forward-reduce against the rows already in echelon form.
            for i in 0..rows.len() {
                if r.get(pivots[i]) {
                    r.xor_assign(&rows[i]);
                    t.xor_assign(&transform[i]);
                }
            }
            let Some(p) = r.first_one() else { continue };
            // Back-substitute into the existing rows, keeping the form
            // fully reduced, then insert sorted by pivot column.
            for (e, te) in rows.iter_mut().zip(transform.iter_mut()) {
                if e.get(p) {
                    e.xor_assign(&r);
                    te.xor_assign(&t);
                }
            }
            let at = pivots.partition_point(|&q| q < p);
            pivots.insert(at, p);
            rows.insert(at, r);
            transform.insert(at, t);
        }

        Echelon {
            ncols: self.ncols,
            source_rows: nrows,
            pivots,
            rows,
            transform,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the column kernel `{v : M v = 0}`, one vector per
    /// non-pivot column, in ascending column order.
    pub fn kernel(&self) -> Vec<F2Vector> {
        let ech = self.echelon();
        let mut basis = Vec::new();
        let mut pivot_iter = ech.pivots.iter().peekable();
        let mut free_cols = Vec::new();
        for j in 0..self.ncols {
            if pivot_iter.peek() == Some(&&j) {
                pivot_iter.next();
            } else {
                free_cols.push(j);
            }
        }
        for &j in &free_cols {
            let mut v = F2Vector::zero(self.ncols);
            v.set(j, true);
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if row.get(j) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

/// A matrix in reduced row echelon form, remembering which original
/// rows combine into each echelon row.
///
/// Pivot columns strictly increase and each pivot is the only 1 in its
/// column; `transform[i]` records, as a bitmask over the source rows,
/// the combination producing `rows[i]`.
pub struct Echelon {
    ncols: usize,
    source_rows: usize,
    pivots: Vec<usize>,
    rows: Vec<F2Vector>,
    transform: Vec<F2Vector>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    /// Canonical remainder of `v` modulo the row space: XORs away every
    /// echelon row whose pivot is set in `v`, leaving a vector supported
    /// on the non-pivot columns.
    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Expresses `b` as a combination of the *original* matrix rows:
    /// returns `x` with `sum_{i in x} row_i = b`, or `None` when `b`
    /// is outside the row space. The solution is the deterministic one
    /// induced by the elimination order.
    pub fn solve(&self, b: &F2Vector) -> Option<F2Vector> {
        let mut r = b.clone();
        let mut x = F2Vector::zero(self.source_rows);
        for ((row, &p), t) in self.rows.iter().zip(&self.pivots).zip(&self.transform) {
            if r.get(p) {
                r.xor_assign(row);
                x.xor_assign(t);
            }
        }
        if r.is_zero() {
            Some(x)
        } else {
            None
        }
    }
}

/// Basis of the intersection of row spaces, via the Zassenhaus trick:
/// rref the block matrix `[U | U; W | 0]` and read the intersection off
/// the rows whose left half vanished. The result is canonicalized to
/// its own reduced echelon basis, so it is independent of input order.
pub fn intersect(spaces: &[F2Matrix]) -> F2Matrix {
    assert!(!spaces.is_empty(), "intersection of no spaces");
    let n = spaces[0].ncols();
    assert!(
        spaces.iter().all(|s| s.ncols() == n),
        "ambient dimension mismatch"
    );
    let mut acc = canonical_basis(spaces[0].clone());
    for s in &spaces[1..] {
        acc = intersect_pair(&acc, s);
    }
    acc
}

fn intersect_pair(u: &F2Matrix, w: &F2Matrix) -> F2Matrix {
    let n = u.ncols();
    let mut stacked = F2Matrix::new(2 * n);
    for row in u.rows() {
        let mut wide = F2Vector::zero(2 * n);
        for j in row.ones() {
            wide.set(j, true);
            wide.set(n + j, true);
        }
        stacked.push_row(wide);
    }
    for row in w.rows() {
        let mut wide = F2Vector::zero(2 * n);
        for j in row.ones() {
            wide.set(j, true);
        }
        stacked.push_row(wide);
    }
    let ech = stacked.echelon();
    let mut out = F2Matrix::new(n);
    for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
        if p >= n {
            let mut v = F2Vector::zero(n);
            for j in row.ones() {
                v.set(j - n, true);
            }
            out.push_row(v);
        }
    }
    canonical_basis(out)
}

/// Replaces a spanning set by the reduced echelon basis of its row
/// space (the unique canonical basis).
pub fn canonical_basis(m: F2Matrix) -> F2Matrix {
    let ech = m.echelon();
    F2Matrix::from_rows(m.ncols(), ech.rows().to_vec())
}

/// True when two row spaces are equal, by comparing canonical bases.
pub fn same_rowspace(a: &F2Matrix, b: &F2Matrix) -> bool {
    assert_eq!(a.ncols(), b.ncols());
    canonical_basis(a.clone()).rows() == canonical_basis(b.clone()).rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut impl Rng, nrows: usize, ncols: usize) -> F2Matrix {
        let mut m = F2Matrix::new(ncols);
        for _ in 0..nrows {
            m.push_row(F2Vector::from_ones(
                ncols,
                (0..ncols).filter(|_| rng.gen_bool(0.5)),
            ));
        }
        m
    }

    /// Plain dense boolean elimination, kept deliberately naive as an
    /// independent check on the packed implementation.
    fn dense_rank(m: &F2Matrix) -> usize {
        let mut a: Vec<Vec<bool>> = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m.get(i, j)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.ncols() {
            let Some(pos) = (rank..a.len()).find(|&r| a[r][col]) else {
                continue;
            };
            a.swap(rank, pos);
            let pivot_row = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != rank && row[col] {
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x ^= p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn echelon_of_identity() {
        let m = F2Matrix::identity(6);
        let ech = m.echelon();
        assert_eq!(ech.pivots(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(ech.rows(), m.rows());
    }

    #[test]
    fn duplicate_rows_collapse() {
        let row = F2Vector::from_ones(5, [1, 3]);
        let m = F2Matrix::from_rows(5, vec![row.clone(), row]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn echelon_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 20, 30);
            let e1 = canonical_basis(m);
            let e2 = canonical_basis(e1.clone());
            assert_eq!(e1.rows(), e2.rows());
        }
    }

    #[test]
    fn solve_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 15, 25);
            let ech = m.echelon();
            // Random combination of rows must be solvable, and the
            // returned coefficients must recombine to it exactly.
            let mut b = F2Vector::zero(25);
            for i in 0..m.nrows() {
                if rng.gen_bool(0.5) {
                    b.xor_assign(m.row(i));
                }
            }
            let x = ech.solve(&b).expect("b is in the row space");
            let mut recombined = F2Vector::zero(25);
            for i in x.ones() {
                recombined.xor_assign(m.row(i));
            }
            assert_eq!(recombined, b);
        }
    }

    #[test]
    fn solve_detects_outsiders() {
        let m = F2Matrix::from_rows(
            3,
            vec![F2Vector::from_ones(3, [0]), F2Vector::from_ones(3, [1])],
        );
        let ech = m.echelon();
        assert!(ech.solve(&F2Vector::from_ones(3, [2])).is_none());
        assert_eq!(
            ech.solve(&F2Vector::zero(3)),
            Some(F2Vector::zero(2)),
            "zero has the empty combination"
        );
        assert_eq!(
            ech.solve(&F2Vector::from_ones(3, [0])),
            Some(F2Vector::from_ones(2, [0]))
        );
    }

    #[test]
    fn kernel_extremes() {
        let zero = F2Matrix::from_rows(4, vec![F2Vector::zero(4); 3]);
        assert_eq!(zero.kernel().len(), 4);
        assert!(F2Matrix::identity(4).kernel().is_empty());
    }

    #[test]
    fn rank_plus_nullity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..30 {
            let nrows = rng.gen_range(1..=30);
            let ncols = rng.gen_range(1..=30);
            let m = random_matrix(&mut rng, nrows, ncols);
            let kernel = m.kernel();
            assert_eq!(m.rank() + kernel.len(), ncols);
            for v in &kernel {
                assert!(m.mul_vector(v).is_zero());
            }
        }
    }

    #[test]
    fn intersect_examples() {
        let v = F2Matrix::from_rows(
            4,
            vec![
                F2Vector::from_ones(4, [0, 1]),
                F2Vector::from_ones(4, [2, 3]),
            ],
        );
        assert!(same_rowspace(&intersect(std::slice::from_ref(&v)), &v));

        // Complementary coordinate subspaces meet in 0.
        let a = F2Matrix::from_rows(
            4,
            vec![F2Vector::from_ones(4, [0]), F2Vector::from_ones(4, [1])],
        );
        let b = F2Matrix::from_rows(
            4,
            vec![F2Vector::from_ones(4, [2]), F2Vector::from_ones(4, [3])],
        );
        assert_eq!(intersect(&[a.clone(), b]).nrows(), 0);

        // Overlapping pair.
        let c = F2Matrix::from_rows(
            4,
            vec![F2Vector::from_ones(4, [0]), F2Vector::from_ones(4, [2])],
        );
        let meet = intersect(&[a, c]);
        assert_eq!(meet.nrows(), 1);
        assert_eq!(meet.row(0), &F2Vector::from_ones(4, [0]));
    }

    #[test]
    fn ranks_match_dense_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xF2);
        for _ in 0..200 {
            let nrows = rng.gen_range(1..=256);
            let ncols = rng.gen_range(1..=256);
            let m = random_matrix(&mut rng, nrows, ncols);
            assert_eq!(m.rank(), dense_rank(&m));
        }
    }

    #[test]
    fn ones_iterator() {
        let v = F2Vector::from_ones(130, [0, 63, 64, 129]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(v.count_ones(), 4);
        assert_eq!(v.first_one(), Some(0));
        assert_eq!(F2Vector::zero(10).first_one(), None);
    }
}
