//! Dense exact matrices and Gauss–Jordan elimination.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Result of [`Mat::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Rref {
    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut free = Vec::with_capacity(self.reduced.cols - self.rank);
        let mut p = self.pivots.iter().peekable();
        for c in 0..self.reduced.cols {
            if p.peek() == Some(&&c) {
                p.next();
            } else {
                free.push(c);
            }
        }
        free
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::ONE);
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds from integer rows; `cols` disambiguates the empty case.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Mat {
        assert_eq!(entries.len(), rows * cols);
        Mat { field, rows, cols, data: entries.iter().map(|&v| field.from_i64(v)).collect() }
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Mat {
        let mut m = Mat::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "product shape mismatch");
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = f.mul_add(&out.data[idx], a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Scalar::ZERO, |acc, (a, b)| f.mul_add(&acc, a, b))
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "sum shape mismatch");
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    pub fn hstack(parts: &[&Mat], field: Field, rows: usize) -> Mat {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            out.put_block(0, off, m);
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Mat], field: Field, cols: usize) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            out.put_block(off, 0, m);
            off += m.rows;
        }
        out
    }

    pub fn block_diag(parts: &[&Mat], field: Field) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.put_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                out.set(i, c, self.get(r, c).clone());
            }
        }
        out
    }

    /// Gauss–Jordan reduction to the unique reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = f.inv(m.get(row, col)).expect("nonzero pivot");
            let nonzero: Vec<usize> = (col..m.cols).filter(|&c| !m.get(row, c).is_zero()).collect();
            for &c in &nonzero {
                let v = f.mul(m.get(row, c), &inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                let neg = f.neg(&factor);
                for &c in &nonzero {
                    let idx = r * m.cols + c;
                    let pv = m.data[row * m.cols + c].clone();
                    m.data[idx] = f.mul_add(&m.data[idx], &neg, &pv);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, rank: pivots.len(), pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space, one column per free variable.
    pub fn kernel_basis(&self) -> Mat {
        let rr = self.rref();
        kernel_from_rref(&rr, self.field)
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>, LinalgError> {
        if self.rows != b.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "system has {} rows, right-hand side {}",
                self.rows, b.rows
            )));
        }
        let aug = Mat::hstack(&[self, b], self.field, self.rows);
        let rr = aug.rref();
        if rr.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (r, &p) in rr.pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, rr.reduced.get(r, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// A maximal independent subset of the columns (the pivot columns).
    pub fn column_space(&self) -> Mat {
        let rr = self.rref();
        self.select_columns(&rr.pivots)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let id = Mat::identity(self.field, self.rows);
        let x = self.solve(&id).ok()??;
        (self.mul(&x) == id).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn trace(&self) -> Scalar {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(Scalar::ZERO, |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// Flattens column-major into a single column vector.
    pub fn to_column_vector(&self) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self.get(r, c).clone());
            }
        }
        v
    }
}

/// Reads coordinates with respect to a fixed full-column-rank basis through
/// an invertible set of rows.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    rows: Vec<usize>,
    inv: Mat,
}

impl Coordinatizer {
    pub fn new(basis: &Mat) -> Coordinatizer {
        let rows = basis.transpose().rref().pivots;
        assert_eq!(rows.len(), basis.cols(), "basis columns are dependent");
        let inv = basis.select_rows(&rows).inverse().expect("pivot rows are invertible");
        Coordinatizer { rows, inv }
    }

    pub fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let picked: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inv.mul_vec(&picked)
    }
}

/// Sparse row as sorted `(column, value)` pairs.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Null space of a sparse system, built row by row in echelon form.
/// Suited to large sparse systems with a small kernel.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: Field,
    cols: usize,
    /// pivot column -> normalized row whose smallest column is the pivot
    pivot_rows: Vec<Option<SparseRow>>,
}

impl SparseEchelon {
    pub fn new(field: Field, cols: usize) -> SparseEchelon {
        SparseEchelon { field, cols, pivot_rows: vec![None; cols] }
    }

    /// Adds one equation `row · x = 0`; returns whether the rank grew.
    pub fn push(&mut self, mut row: SparseRow) -> bool {
        let f = self.field;
        row.retain(|(_, v)| !v.is_zero());
        let mut i = 0;
        while i < row.len() {
            let (c, coef) = row[i].clone();
            let Some(p) = &self.pivot_rows[c] else {
                i += 1;
                continue;
            };
            let neg = f.neg(&coef);
            let mut merged = Vec::with_capacity(row.len() + p.len());
            merged.extend_from_slice(&row[..i]);
            let (mut a, mut b) = (i, 0);
            while a < row.len() || b < p.len() {
                let take_a = b == p.len() || (a < row.len() && row[a].0 < p[b].0);
                let take_b = a == row.len() || (b < p.len() && p[b].0 < row[a].0);
                if take_a {
                    merged.push(row[a].clone());
                    a += 1;
                } else if take_b {
                    merged.push((p[b].0, f.mul(&neg, &p[b].1)));
                    b += 1;
                } else {
                    let v = f.mul_add(&row[a].1, &neg, &p[b].1);
                    if !v.is_zero() {
                        merged.push((row[a].0, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
            row = merged;
        }
        let Some((lead, lv)) = row.first().cloned() else {
            return false;
        };
        let inv = f.inv(&lv).expect("nonzero leading entry");
        for e in &mut row {
            e.1 = f.mul(&e.1, &inv);
        }
        self.pivot_rows[lead] = Some(row);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.iter().filter(|r| r.is_some()).count()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_rows[c].is_none()).collect()
    }

    /// The solution taking the given values at the free columns.
    pub fn solution(&self, free_values: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut x = vec![Scalar::ZERO; self.cols];
        for (c, v) in self.free_columns().into_iter().zip(free_values) {
            x[c] = v.clone();
        }
        for p in (0..self.cols).rev() {
            if let Some(row) = &self.pivot_rows[p] {
                let s = row[1..].iter().fold(Scalar::ZERO, |acc, (c, v)| {
                    if x[*c].is_zero() { acc } else { f.mul_add(&acc, v, &x[*c]) }
                });
                x[p] = f.neg(&s);
            }
        }
        x
    }

    /// One kernel vector per free column, equal to 1 there and 0 at the
    /// other free columns.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let k = self.cols - self.rank();
        (0..k)
            .map(|i| {
                let mut unit = vec![Scalar::ZERO; k];
                unit[i] = Scalar::ONE;
                self.solution(&unit)
            })
            .collect()
    }
}

pub(crate) fn kernel_from_rref(rr: &Rref, field: Field) -> Mat {
    let cols = rr.reduced.cols;
    let free = rr.free_columns();
    let mut k = Mat::zeros(field, cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        k.set(fc, j, Scalar::ONE);
        for (r, &p) in rr.pivots.iter().enumerate() {
            let v = rr.reduced.get(r, fc);
            if !v.is_zero() {
                k.set(p, j, field.neg(v));
            }
        }
    }
    k
}

/// Rank by fraction-free Bareiss elimination over Z (forward elimination
/// on residues for prime fields). Test oracle, independent of [`Mat::rref`].
pub fn bareiss_rank(field: Field, rows: usize, cols: usize, entries: &[i64]) -> usize {
    use num_bigint::BigInt;
    use num_traits::Zero;
    if let Field::Prime(_) = field {
        // Over GF(p) use row reduction on residues without back-substitution.
        let m = Mat::from_i64(field, rows, cols, entries);
        let mut a: Vec<Vec<Scalar>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(p, rank);
            let inv = field.inv(&a[rank][c]).unwrap();
            for r in rank + 1..rows {
                let factor = field.mul(&a[r][c], &inv);
                let (top, rest) = a.split_at_mut(r);
                for (x, pivot) in rest[0][c..cols].iter_mut().zip(&top[rank][c..cols]) {
                    *x = field.sub(x, &field.mul(&factor, pivot));
                }
            }
            rank += 1;
        }
        return rank;
    }
    let mut a: Vec<Vec<BigInt>> =
        (0..rows).map(|r| (0..cols).map(|c| BigInt::from(entries[r * cols + c])).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(p, rank);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {

    #[test]
    fn sparse_echelon_matches_dense_kernel() {
        let f = Field::Rationals;
        let m = Mat::from_i64(f, 3, 5, &[1, 2, 0, -1, 0, 0, 0, 1, 3, 0, 2, 4, 1, 1, 0]);
        let mut s = SparseEchelon::new(f, 5);
        for r in 0..3 {
            let row = m.row(r).iter().cloned().enumerate().collect();
            s.push(row);
        }
        assert_eq!(s.rank(), m.rank());
        let k = s.kernel();
        assert_eq!(k.len(), 5 - m.rank());
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_identity() {
        let rr = Mat::identity(Q, 3).rref();
        assert!(rr.reduced.is_identity());
        assert_eq!(rr.rank, 3);
        assert_eq!(rr.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_proportional_rows() {
        let rr = Mat::from_i64(Q, 2, 2, &[2, 4, 1, 2]).rref();
        assert_eq!(rr.rank, 1);
        assert_eq!(rr.pivots, vec![0]);
        assert_eq!(rr.reduced, Mat::from_i64(Q, 2, 2, &[1, 2, 0, 0]));
    }

    #[test]
    fn empty_matrices() {
        let m = Mat::zeros(Q, 0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().cols(), 3);
        assert_eq!(Mat::zeros(Q, 2, 0).kernel_basis().shape(), (0, 0));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::identity(Q, 4).kernel_basis().cols(), 0);
        let k = Mat::zeros(Q, 2, 3).kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
        // null space of [[1,1,0],[0,0,1]] solved by hand: x3 = 0, x1 = -x2
        let m = Mat::from_i64(Q, 2, 3, &[1, 1, 0, 0, 0, 1]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert_eq!(Q.add(&v[0], &v[1]), Scalar::ZERO);
        assert!(v[2].is_zero() && !v[0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = Mat::from_i64(Q, 2, 2, &[3, -1, 7, 2]);
        assert_eq!(Mat::identity(Q, 2).solve(&b).unwrap().unwrap(), b);
        let a = Mat::from_i64(Q, 2, 1, &[1, 1]);
        let rhs = Mat::from_i64(Q, 2, 1, &[0, 1]);
        assert_eq!(a.solve(&rhs).unwrap(), None);
        assert!(a.solve(&Mat::zeros(Q, 3, 1)).is_err());
    }

    fn arb_entries(rows: usize, cols: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..=3, rows * cols)
    }

    proptest! {
        #[test]
        fn rank_matches_bareiss_q(e in arb_entries(5, 7)) {
            let m = Mat::from_i64(Q, 5, 7, &e);
            prop_assert_eq!(m.rank(), bareiss_rank(Q, 5, 7, &e));
        }

        #[test]
        fn rank_matches_oracle_gf101(e in proptest::collection::vec(0i64..101, 35)) {
            let f = Field::Prime(101);
            let m = Mat::from_i64(f, 5, 7, &e);
            prop_assert_eq!(m.rank(), bareiss_rank(f, 5, 7, &e));
        }

        #[test]
        fn rref_idempotent_and_rank_nullity(e in arb_entries(4, 6)) {
            let m = Mat::from_i64(Q, 4, 6, &e);
            let rr = m.rref();
            let again = rr.reduced.rref();
            prop_assert_eq!(&again.reduced, &rr.reduced);
            let k = m.kernel_basis();
            prop_assert_eq!(rr.rank + k.cols(), 6);
            prop_assert!(m.mul(&k).is_zero());
            prop_assert!(rr.pivots.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn solutions_are_exact(e in arb_entries(4, 3), x in arb_entries(3, 2)) {
            let a = Mat::from_i64(Q, 4, 3, &e);
            let x0 = Mat::from_i64(Q, 3, 2, &x);
            let b = a.mul(&x0);
            let sol = a.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(a.mul(&sol), b);
        }
    }
}
