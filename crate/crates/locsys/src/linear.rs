//! Exact linear algebra over ℚ and GF(p): reduced row echelon form,
//! kernels, and the subspace lattice everything else consumes.
//!
//! Rows are processed in a sparse form (sorted coordinate/value pairs) so
//! that the very sparse systems produced by matrix-unit structure
//! constants reduce quickly; dense matrices take the same path. All
//! values are immutable after construction and all operations are pure.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::scalar::{FieldSpec, Scalar};
use crate::Result;

/// Sparse vector: strictly increasing coordinates, no explicit zeros.
pub(crate) type SparseVec = Vec<(usize, Scalar)>;

pub(crate) fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i, s.clone()))
        .collect()
}

pub(crate) fn sparse_to_dense(n: usize, v: &SparseVec, field: FieldSpec) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (i, s) in v {
        out[*i] = s.clone();
    }
    out
}

/// `dst + c * src`, merging sorted coordinate lists.
pub(crate) fn add_scaled(dst: &SparseVec, src: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return dst.clone();
    }
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        if j >= src.len() || (i < dst.len() && dst[i].0 < src[j].0) {
            out.push(dst[i].clone());
            i += 1;
        } else if i >= dst.len() || src[j].0 < dst[i].0 {
            let v = c.mul(&src[j].1);
            if !v.is_zero() {
                out.push((src[j].0, v));
            }
            j += 1;
        } else {
            let v = dst[i].1.add(&c.mul(&src[j].1));
            if !v.is_zero() {
                out.push((dst[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn scale_sparse(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, s)| (*i, c.mul(s))).collect()
}

/// Incremental Gaussian elimination: rows are absorbed one at a time and
/// kept in echelon form with normalized pivots; `finalize` back-eliminates
/// to the unique reduced row echelon form.
pub(crate) struct Reducer {
    field: FieldSpec,
    /// Echelon rows sorted by pivot column; leading entries are 1.
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Reducer {
    pub fn new(field: FieldSpec) -> Self {
        Reducer {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the absorbed rows (leading-entry elimination
    /// only; full reduction happens in `finalize`).
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        loop {
            let Some((lead, coef)) = row.first().cloned() else {
                return row;
            };
            match self.pivots.binary_search(&lead) {
                Ok(idx) => {
                    row = add_scaled(&row, &self.rows[idx], &coef.neg());
                }
                Err(_) => return row,
            }
        }
    }

    /// Absorbs a row; returns true when the rank grew.
    pub fn absorb(&mut self, row: SparseVec) -> bool {
        let row = self.reduce(row);
        let Some((lead, coef)) = row.first().cloned() else {
            return false;
        };
        let inv = coef.inv().expect("nonzero leading coefficient");
        let row = scale_sparse(&row, &inv);
        let idx = self.pivots.binary_search(&lead).unwrap_err();
        self.pivots.insert(idx, lead);
        self.rows.insert(idx, row);
        true
    }

    /// Full reduction of an arbitrary vector by the *reduced* basis:
    /// eliminates every pivot coordinate, not only leading ones. Call
    /// after `finalize_in_place` (or on a Reducer built from an already
    /// canonical basis) for remainder semantics.
    pub fn remainder(&self, mut row: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < row.len() {
            let (col, coef) = row[k].clone();
            match self.pivots.binary_search(&col) {
                Ok(idx) => {
                    row = add_scaled(&row, &self.rows[idx], &coef.neg());
                    // entry at `col` vanished; continue from same position
                }
                Err(_) => k += 1,
            }
        }
        row
    }

    /// Back-eliminates pivot columns from earlier rows, yielding RREF.
    pub fn finalize_in_place(&mut self) {
        for i in (0..self.rows.len()).rev() {
            let (pivot_col, row) = (self.pivots[i], self.rows[i].clone());
            for j in 0..i {
                let coef = self.rows[j]
                    .iter()
                    .find(|(c, _)| *c == pivot_col)
                    .map(|(_, s)| s.clone());
                if let Some(coef) = coef {
                    self.rows[j] = add_scaled(&self.rows[j], &row, &coef.neg());
                }
            }
        }
    }

    pub fn into_rows(mut self) -> Vec<SparseVec> {
        self.finalize_in_place();
        self.rows
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

/// An exact matrix. Storage switches internally between dense and sparse
/// at a 10% density threshold; the switch is unobservable.
#[derive(Debug, Clone)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    store: Store,
}

#[derive(Debug, Clone)]
enum Store {
    Dense(Vec<Scalar>),
    Sparse(BTreeMap<(usize, usize), Scalar>),
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Mat {
        Mat {
            rows,
            cols,
            field,
            store: Store::Sparse(BTreeMap::new()),
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Mat {
        let entries = (0..n).map(|i| ((i, i), field.one())).collect();
        Mat {
            rows: n,
            cols: n,
            field,
            store: Store::Sparse(entries),
        }
    }

    /// Builds from dense rows, validating shape and field consistency.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for (j, s) in row.iter().enumerate() {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field.name(), s.field().name()));
                }
                if !s.is_zero() {
                    entries.push((i, j, s.clone()));
                }
            }
        }
        Ok(Mat::build(nrows, ncols, field, entries))
    }

    /// Builds from an explicit nonzero-entry list.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        entries: Vec<(usize, usize, Scalar)>,
    ) -> Result<Mat> {
        for (i, j, s) in &entries {
            if *i >= rows || *j >= cols {
                return Err(Error::Shape(format!(
                    "entry ({i},{j}) outside {rows}x{cols}"
                )));
            }
            if s.field() != field {
                return Err(Error::FieldMismatch(field.name(), s.field().name()));
            }
        }
        Ok(Mat::build(rows, cols, field, entries))
    }

    fn build(rows: usize, cols: usize, field: FieldSpec, entries: Vec<(usize, usize, Scalar)>) -> Mat {
        let nnz = entries.iter().filter(|(_, _, s)| !s.is_zero()).count();
        let store = if (nnz as u128) * 10 < (rows as u128) * (cols as u128) {
            Store::Sparse(
                entries
                    .into_iter()
                    .filter(|(_, _, s)| !s.is_zero())
                    .map(|(i, j, s)| ((i, j), s))
                    .collect(),
            )
        } else {
            let mut data = vec![field.zero(); rows * cols];
            for (i, j, s) in entries {
                data[i * cols + j] = s;
            }
            Store::Dense(data)
        };
        Mat {
            rows,
            cols,
            field,
            store,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match &self.store {
            Store::Dense(d) => d[i * self.cols + j].clone(),
            Store::Sparse(m) => m.get(&(i, j)).cloned().unwrap_or_else(|| self.field.zero()),
        }
    }

    pub(crate) fn row_sparse(&self, i: usize) -> SparseVec {
        match &self.store {
            Store::Dense(d) => dense_to_sparse(&d[i * self.cols..(i + 1) * self.cols]),
            Store::Sparse(m) => m
                .range((i, 0)..=(i, self.cols.max(1) - 1))
                .map(|((_, j), s)| (*j, s.clone()))
                .collect(),
        }
    }

    pub fn dense_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|i| sparse_to_dense(self.cols, &self.row_sparse(i), self.field))
            .collect()
    }

    pub(crate) fn nonzero_entries(&self) -> Vec<(usize, usize, Scalar)> {
        match &self.store {
            Store::Dense(d) => {
                let mut out = Vec::new();
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let s = &d[i * self.cols + j];
                        if !s.is_zero() {
                            out.push((i, j, s.clone()));
                        }
                    }
                }
                out
            }
            Store::Sparse(m) => m.iter().map(|((i, j), s)| (*i, *j, s.clone())).collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        let entries = self
            .nonzero_entries()
            .into_iter()
            .map(|(i, j, s)| (j, i, s))
            .collect();
        Mat::build(self.cols, self.rows, self.field, entries)
    }

    /// Matrix product.
    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        // accumulate sparse: for each nonzero a[i,k], b[k,j]
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        let b_rows: Vec<SparseVec> = (0..other.rows).map(|k| other.row_sparse(k)).collect();
        for (i, k, a) in self.nonzero_entries() {
            for (j, b) in &b_rows[k] {
                let term = a.mul(b);
                if term.is_zero() {
                    continue;
                }
                acc.entry((i, *j))
                    .and_modify(|s| *s = s.add(&term))
                    .or_insert(term);
            }
        }
        let entries = acc
            .into_iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|((i, j), s)| (i, j, s))
            .collect();
        Ok(Mat::build(self.rows, other.cols, self.field, entries))
    }

    /// Applies the matrix to a dense column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (i, j, s) in self.nonzero_entries() {
            if !v[j].is_zero() {
                out[i] = out[i].add(&s.mul(&v[j]));
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let mut red = Reducer::new(self.field);
        for i in 0..self.rows {
            red.absorb(self.row_sparse(i));
        }
        red.rank()
    }
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.field == other.field
            && self.nonzero_entries() == other.nonzero_entries()
    }
}

impl Eq for Mat {}

/// Unique reduced row echelon form; the shape and row space are
/// preserved (zero rows stay in place at the bottom).
pub fn rref(m: &Mat) -> Mat {
    let mut red = Reducer::new(m.field());
    for i in 0..m.nrows() {
        red.absorb(m.row_sparse(i));
    }
    let rows = red.into_rows();
    let entries = rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().map(move |(j, s)| (i, *j, s.clone())))
        .collect();
    Mat::build(m.nrows(), m.ncols(), m.field(), entries)
}

/// Solves a linear system given as augmented sparse rows
/// `[coefficients | rhs]` with the right-hand side stored at column
/// `ncols`. Returns the particular solution with free variables zero, or
/// `None` when inconsistent.
pub(crate) fn solve_augmented(
    field: FieldSpec,
    rows: Vec<SparseVec>,
    ncols: usize,
) -> Option<Vec<Scalar>> {
    let mut red = Reducer::new(field);
    for row in rows {
        red.absorb(row);
    }
    if red.pivots.iter().any(|p| *p >= ncols) {
        return None;
    }
    red.finalize_in_place();
    let mut x = vec![field.zero(); ncols];
    for (idx, p) in red.pivots.iter().enumerate() {
        if let Some((_, s)) = red.rows[idx].iter().find(|(c, _)| *c == ncols) {
            x[*p] = s.clone();
        }
    }
    Some(x)
}

/// Exact inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Mat) -> Option<Mat> {
    if m.nrows() != m.ncols() {
        return None;
    }
    let n = m.nrows();
    let mut red = Reducer::new(m.field());
    for i in 0..n {
        // augmented row [m_i | e_i]
        let mut row = m.row_sparse(i);
        row.push((n + i, m.field().one()));
        red.absorb(row);
    }
    // the augmented rows are always independent; invertibility means
    // every pivot lands in the left block
    if red.pivots.iter().any(|p| *p >= n) {
        return None;
    }
    red.finalize_in_place();
    // left block is the identity; right block rows are the inverse
    let mut entries = Vec::new();
    for row in red.rows.iter() {
        let lead = row[0].0;
        debug_assert!(lead < n);
        for (c, s) in row.iter().skip(1) {
            if *c >= n {
                entries.push((lead, c - n, s.clone()));
            }
        }
    }
    Some(Mat::build(n, n, m.field(), entries))
}

/// Basis of the right null space `{v : m v = 0}` in canonical form.
pub fn kernel(m: &Mat) -> Subspace {
    let mut red = Reducer::new(m.field());
    for i in 0..m.nrows() {
        red.absorb(m.row_sparse(i));
    }
    red.finalize_in_place();
    let pivots = red.pivots.clone();
    let rows = red.rows.clone();
    let mut basis: Vec<SparseVec> = Vec::new();
    for f in 0..m.ncols() {
        if pivots.binary_search(&f).is_ok() {
            continue;
        }
        let mut v: SparseVec = Vec::new();
        for (idx, p) in pivots.iter().enumerate() {
            if let Some((_, s)) = rows[idx].iter().find(|(c, _)| *c == f) {
                v.push((*p, s.neg()));
            }
        }
        v.push((f, m.field().one()));
        v.sort_by_key(|(c, _)| *c);
        basis.push(v);
    }
    Subspace::from_sparse_rows(m.ncols(), m.field(), basis)
}

/// A subspace of a fixed coordinate space, stored canonically: the basis
/// is the reduced row echelon form of any spanning set, so two equal
/// subspaces are structurally equal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: FieldSpec) -> Subspace {
        Subspace {
            ambient,
            field,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Subspace {
        let rows = (0..ambient).map(|i| vec![(i, field.one())]).collect();
        Subspace {
            ambient,
            field,
            rows,
        }
    }

    pub(crate) fn from_sparse_rows(
        ambient: usize,
        field: FieldSpec,
        rows: Vec<SparseVec>,
    ) -> Subspace {
        let mut red = Reducer::new(field);
        for r in rows {
            debug_assert!(r.last().map_or(true, |(c, _)| *c < ambient));
            red.absorb(r);
        }
        Subspace {
            ambient,
            field,
            rows: red.into_rows(),
        }
    }

    /// Span of dense vectors.
    pub fn span(ambient: usize, field: FieldSpec, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::AmbientMismatch(v.len(), ambient));
            }
            for s in v {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field.name(), s.field().name()));
                }
            }
            rows.push(dense_to_sparse(v));
        }
        Ok(Subspace::from_sparse_rows(ambient, field, rows))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Mat) -> Subspace {
        let rows = (0..m.nrows()).map(|i| m.row_sparse(i)).collect();
        Subspace::from_sparse_rows(m.ncols(), m.field(), rows)
    }

    /// Column space of a matrix.
    pub fn col_space(m: &Mat) -> Subspace {
        Subspace::row_space(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub(crate) fn sparse_rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn basis_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .map(|r| sparse_to_dense(self.ambient, r, self.field))
            .collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Coordinates not used as pivots, in increasing order.
    pub fn complement_coords(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient)
            .filter(|c| pivots.binary_search(c).is_err())
            .collect()
    }

    fn reducer(&self) -> Reducer {
        let mut red = Reducer::new(self.field);
        for r in &self.rows {
            red.absorb(r.clone());
        }
        red
    }

    pub(crate) fn reduce_sparse(&self, v: SparseVec) -> SparseVec {
        self.reducer().remainder(v)
    }

    fn check_vec(&self, w: &[Scalar]) -> Result<()> {
        if w.len() != self.ambient {
            return Err(Error::AmbientMismatch(w.len(), self.ambient));
        }
        for s in w {
            if s.field() != self.field {
                return Err(Error::FieldMismatch(self.field.name(), s.field().name()));
            }
        }
        Ok(())
    }

    /// Exact membership test.
    pub fn contains(&self, w: &[Scalar]) -> Result<bool> {
        self.check_vec(w)?;
        Ok(self.reduce_sparse(dense_to_sparse(w)).is_empty())
    }

    pub(crate) fn contains_sparse(&self, v: &SparseVec) -> bool {
        self.reduce_sparse(v.clone()).is_empty()
    }

    /// Containment of subspaces.
    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        let red = self.reducer();
        Ok(other
            .rows
            .iter()
            .all(|r| red.remainder(r.clone()).is_empty()))
    }

    /// Coefficients of `v` over the canonical basis, if `v` lies in the
    /// subspace. Pivot normalization makes the coefficients direct reads.
    pub fn coords_in_basis(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_vec(v)?;
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(
            self.pivots().iter().map(|p| v[*p].clone()).collect(),
        ))
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Smallest subspace containing both.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Subspace::from_sparse_rows(self.ambient, self.field, rows))
    }

    /// Largest common subspace, via the kernel of the concatenated
    /// coordinate system.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let (k, m) = (self.dim(), other.dim());
        if k == 0 || m == 0 {
            return Ok(Subspace::zero(self.ambient, self.field));
        }
        // Columns: bases of both sides; kernel vectors (a, b) satisfy
        // sum a_i u_i = sum b_j v_j, i.e. lie over intersection elements.
        let mut entries = Vec::new();
        for (j, row) in self.rows.iter().enumerate() {
            for (c, s) in row {
                entries.push((*c, j, s.clone()));
            }
        }
        for (j, row) in other.rows.iter().enumerate() {
            for (c, s) in row {
                entries.push((*c, k + j, s.neg()));
            }
        }
        let mat = Mat::from_entries(self.ambient, k + m, self.field, entries)?;
        let ker = kernel(&mat);
        let mut rows = Vec::new();
        for kv in ker.basis_dense() {
            let mut acc: SparseVec = Vec::new();
            for (j, row) in self.rows.iter().enumerate() {
                acc = add_scaled(&acc, row, &kv[j]);
            }
            rows.push(acc);
        }
        Ok(Subspace::from_sparse_rows(self.ambient, self.field, rows))
    }

    /// Deterministic total order on canonical forms, used for
    /// reproducible orderings of component lists and witnesses.
    pub fn cmp_canonical(&self, other: &Subspace) -> std::cmp::Ordering {
        let a = (self.ambient, self.rows.len());
        let b = (other.ambient, other.rows.len());
        a.cmp(&b).then_with(|| {
            for (r, s) in self.rows.iter().zip(&other.rows) {
                for ((ci, si), (cj, sj)) in r.iter().zip(s.iter()) {
                    let ord = ci.cmp(cj).then_with(|| si.cmp_key(sj));
                    if ord != std::cmp::Ordering::Equal {
                        return ord;
                    }
                }
                let ord = r.len().cmp(&s.len());
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} basis [", self.dim())?;
        for (i, row) in self.basis_dense().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "]")
    }
}
