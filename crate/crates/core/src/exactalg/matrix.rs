//! Sparse exact linear algebra: row reduction and traces on invariant
//! subspaces.

use std::collections::HashMap;

use super::{ExactAlgError, Scalar};

/// Sparse vector: `(index, value)` pairs sorted by index, no zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec<T> {
    entries: Vec<(usize, T)>,
}

impl<T: Scalar> SparseVec<T> {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, T::one())],
        }
    }

    /// Collects unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, T)>>(pairs: I) -> Self {
        let mut v: Vec<(usize, T)> = pairs.into_iter().collect();
        v.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, T)> = Vec::with_capacity(v.len());
        for (i, c) in v {
            match entries.last_mut() {
                Some((j, d)) if *j == i => *d += c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[T]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(usize, T)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> T {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn first_index(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn scale(&mut self, c: &T) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v *= c.clone();
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &T, other: &SparseVec<T>) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v.clone() * c.clone()));
                }
                (Some(_), Some(_)) => {
                    let (i, mut v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    v += w.clone() * c.clone();
                    if !v.is_zero() {
                        out.push((i, v));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v.clone() * c.clone()));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }
}

/// Row-major sparse matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<T>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec<T>>) -> Result<Self, ExactAlgError> {
        if rows
            .iter()
            .any(|r| r.entries.last().is_some_and(|(i, _)| *i >= cols))
        {
            return Err(ExactAlgError::DimensionMismatch);
        }
        Ok(SparseMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec<T>]) -> Result<Self, ExactAlgError> {
        SparseMatrix::from_rows(rows, columns.to_vec()).map(|m| m.transpose())
    }

    pub fn from_dense(values: &[Vec<T>]) -> Self {
        let cols = values.first().map_or(0, Vec::len);
        SparseMatrix {
            rows: values.len(),
            cols,
            data: values.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec<T> {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[SparseVec<T>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i].get(j)
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(usize, T)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, c) in &r.entries {
                cols[*j].push((i, c.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: cols.into_iter().map(|entries| SparseVec { entries }).collect(),
        }
    }

    pub fn column_vectors(&self) -> Vec<SparseVec<T>> {
        self.transpose().data
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }
}

/// Incremental Gaussian elimination. Pivots are the smallest column index of
/// each reduced row; rows are kept monic.
#[derive(Debug, Clone)]
pub struct EchelonBuilder<T> {
    cols: usize,
    rows: Vec<SparseVec<T>>,
    pivot_row: HashMap<usize, usize>,
}

impl<T: Scalar> EchelonBuilder<T> {
    pub fn new(cols: usize) -> Self {
        EchelonBuilder {
            cols,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    fn reduce(&self, mut v: SparseVec<T>) -> SparseVec<T> {
        let mut from = 0;
        loop {
            let hit = v.entries[from..]
                .iter()
                .position(|(j, _)| self.pivot_row.contains_key(j))
                .map(|k| k + from);
            let Some(k) = hit else { return v };
            let (j, c) = v.entries[k].clone();
            v.axpy(&(-c), &self.rows[self.pivot_row[&j]]);
            from = k;
        }
    }

    /// Adds a row; returns its new pivot column when it was independent.
    pub fn push(&mut self, v: SparseVec<T>) -> Option<usize> {
        let mut v = self.reduce(v);
        let (pivot, lead) = v.entries.first().cloned()?;
        v.scale(&(T::one() / lead));
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(v);
        Some(pivot)
    }

    /// Back-substitutes into reduced row echelon form, rows sorted by pivot.
    pub fn into_rref(self) -> ReducedEchelon<T> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.first_index());
        let pivots: Vec<usize> = rows.iter().map(|r| r.first_index().unwrap()).collect();
        let pivot_pos: HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        for k in (0..rows.len()).rev() {
            // clear entries of row k at later pivots; those rows are already reduced
            let hits: Vec<(usize, T)> = rows[k].entries[1..]
                .iter()
                .filter_map(|(j, c)| pivot_pos.get(j).map(|&r| (r, c.clone())))
                .collect();
            for (r, c) in hits {
                let other = rows[r].clone();
                rows[k].axpy(&(-c), &other);
            }
        }
        ReducedEchelon {
            cols: self.cols,
            pivots,
            pivot_pos,
            rows,
        }
    }
}

/// A matrix in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedEchelon<T> {
    cols: usize,
    pivots: Vec<usize>,
    pivot_pos: HashMap<usize, usize>,
    rows: Vec<SparseVec<T>>,
}

impl<T: Scalar> ReducedEchelon<T> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec<T>] {
        &self.rows
    }

    pub fn is_pivot(&self, j: usize) -> bool {
        self.pivot_pos.contains_key(&j)
    }

    pub fn row_for_pivot(&self, j: usize) -> Option<&SparseVec<T>> {
        self.pivot_pos.get(&j).map(|&k| &self.rows[k])
    }

    /// Reduces `v` modulo the row space; the result has no pivot entries.
    pub fn reduce(&self, v: &SparseVec<T>) -> SparseVec<T> {
        let mut out = v.clone();
        for (j, c) in v.entries() {
            if let Some(&k) = self.pivot_pos.get(j) {
                out.axpy(&(-c.clone()), &self.rows[k]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<T>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn to_matrix(&self) -> SparseMatrix<T> {
        SparseMatrix {
            rows: self.rows.len(),
            cols: self.cols,
            data: self.rows.clone(),
        }
    }
}

/// Result of [`rref`].
#[derive(Debug, Clone)]
pub struct Rref<T> {
    pub rank: usize,
    /// Rows of the input that were independent of the rows before them.
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
    /// Input columns at `pivot_cols`; they span the column space.
    pub basis: SparseMatrix<T>,
    pub reduced: ReducedEchelon<T>,
}

/// Exact row reduction with deterministic pivoting (rows in input order,
/// pivot at the first nonzero column).
pub fn rref<T: Scalar>(m: &SparseMatrix<T>) -> Rref<T> {
    let mut eb = EchelonBuilder::new(m.cols());
    let mut pivot_rows = Vec::new();
    for (i, r) in m.row_vectors().iter().enumerate() {
        if eb.push(r.clone()).is_some() {
            pivot_rows.push(i);
        }
    }
    let reduced = eb.into_rref();
    let pivot_cols = reduced.pivots().to_vec();
    let columns = m.column_vectors();
    let basis_cols: Vec<SparseVec<T>> = pivot_cols.iter().map(|&j| columns[j].clone()).collect();
    let basis = SparseMatrix::from_columns(m.rows(), &basis_cols).expect("column sizes agree");
    Rref {
        rank: reduced.rank(),
        pivot_rows,
        pivot_cols,
        basis,
        reduced,
    }
}

/// Trace of a linear operator restricted to the column space `W` of `basis`.
///
/// `apply` evaluates the operator on a vector. The columns of `basis` must
/// be independent, and `apply` must map `W` into itself; otherwise an error
/// is returned.
pub fn restricted_trace<T: Scalar>(
    basis: &SparseMatrix<T>,
    apply: impl Fn(&SparseVec<T>) -> SparseVec<T>,
) -> Result<T, ExactAlgError> {
    let r = basis.cols();
    // Echelonize the columns: an equivalent basis B' with B'[R] = I on the
    // pivot rows R, so the coordinates of A·b'_j are read off at R.
    let echelon = rref(&basis.transpose()).reduced;
    if echelon.rank() != r {
        return Err(ExactAlgError::NotFullRank);
    }
    let mut trace = T::zero();
    for (j, b) in echelon.rows().iter().enumerate() {
        let image = apply(b);
        let mut residual = image.clone();
        for (k, &p) in echelon.pivots().iter().enumerate() {
            let c = image.get(p);
            if k == j {
                trace += c.clone();
            }
            residual.axpy(&(-c), &echelon.rows()[k]);
        }
        if !residual.is_zero() {
            return Err(ExactAlgError::Inconsistent);
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Ratio};
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_int(v)
    }

    fn dense(rows: &[&[i64]]) -> SparseMatrix<Q> {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rref(&SparseMatrix::<Q>::identity(4)).rank, 4);
        assert_eq!(rref(&SparseMatrix::<Q>::zeros(3, 5)).rank, 0);
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_rows, vec![0, 2]);
        assert_eq!(r.pivot_cols, vec![0, 1]);
        assert_eq!(r.reduced.rows()[0], SparseVec::from_dense(&[q(1), q(0), q(1)]));
        assert_eq!(r.reduced.rows()[1], SparseVec::from_dense(&[q(0), q(1), q(1)]));
    }

    #[test]
    fn generic_over_small_ratio() {
        let m: SparseMatrix<Ratio<i64>> = SparseMatrix::from_dense(&[
            vec![Ratio::from_int(2), Ratio::from_int(1)],
            vec![Ratio::from_int(4), Ratio::from_int(2)],
        ]);
        assert_eq!(rref(&m).rank, 1);
    }

    #[test]
    fn restricted_trace_examples() {
        let b = SparseMatrix::from_columns(2, &[SparseVec::from_dense(&[q(1), q(1)])]).unwrap();
        let swap = |v: &SparseVec<Q>| v.map_indices(|i| 1 - i);
        assert_eq!(restricted_trace(&b, swap).unwrap(), q(1));

        let a = dense(&[&[1, 2, 0], &[3, 4, 5], &[0, 7, -2]]);
        let apply = |v: &SparseVec<Q>| {
            SparseVec::from_pairs(
                (0..3).map(|i| (i, (0..3).fold(q(0), |acc, j| acc + a.get(i, j) * v.get(j)))),
            )
        };
        assert_eq!(restricted_trace(&SparseMatrix::identity(3), apply).unwrap(), q(3));

        let not_stable = |v: &SparseVec<Q>| v.map_indices(|i| i + 1);
        let b = SparseMatrix::from_columns(3, &[SparseVec::unit(0)]).unwrap();
        assert_eq!(restricted_trace(&b, not_stable), Err(ExactAlgError::Inconsistent));

        let dependent = SparseMatrix::from_columns(2, &[SparseVec::unit(0), SparseVec::unit(0)]).unwrap();
        assert_eq!(restricted_trace(&dependent, |v: &SparseVec<Q>| v.clone()), Err(ExactAlgError::NotFullRank));
    }

    fn small_matrix() -> impl Strategy<Value = SparseMatrix<Q>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-2i64..3, c), r).prop_map(|rows| {
                SparseMatrix::from_dense(
                    &rows
                        .into_iter()
                        .map(|r| r.into_iter().map(Q::from_int).collect())
                        .collect::<Vec<_>>(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(rref(&m).rank, rref(&m.transpose()).rank);
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let once = rref(&m).reduced;
            let twice = rref(&once.to_matrix()).reduced;
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn identity_trace_counts_columns(m in small_matrix()) {
            let basis = rref(&m).basis;
            prop_assert_eq!(
                restricted_trace(&basis, |v: &SparseVec<Q>| v.clone()).unwrap(),
                Q::from_int(basis.cols() as i64)
            );
        }
    }
}
