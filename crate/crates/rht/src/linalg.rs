//! Exact sparse linear algebra over Q and Q(i).
//!
//! One canonical-form engine — reduced row echelon form with leftmost-column
//! pivoting — backs everything: rank, kernels, solving, images, subspace sums and
//! intersections, quotients, and subquotient charts. Any basis this module hands out
//! is the RREF basis of its span, so equal subspaces compare equal structurally and
//! every downstream computation is deterministic.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_assign_scaled(dst: &mut [Scalar], src: &[Scalar], c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += &(s * c);
        }
    }
}

pub fn scale_vector(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn conj_vector(v: &[Scalar]) -> Vector {
    v.iter().map(|x| x.conj()).collect()
}

/// Sparse matrix acting on column vectors: `rows` x `cols`, entries sorted
/// row-major with no explicit zeros and no duplicate positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n).map(|i| (i, i, Scalar::one())).collect();
        SparseMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    /// Builds from arbitrary-order entries; duplicates at one position are summed,
    /// zeros dropped. Errors on out-of-range indices.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        raw: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut map = std::collections::BTreeMap::<(usize, usize), Scalar>::new();
        for (r, c, v) in raw {
            if r >= rows || c >= cols {
                return Err(Error::Internal(format!(
                    "matrix entry ({r}, {c}) outside {rows}x{cols}"
                )));
            }
            *map.entry((r, c)).or_default() += &v;
        }
        let entries = map
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        Ok(SparseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_dense(rows: &[Vector]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, v.clone()));
                }
            }
        }
        SparseMatrix {
            rows: r,
            cols: c,
            entries,
        }
    }

    /// Matrix whose j-th column is `cols[j]`.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Self {
        let mut entries = Vec::new();
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, v.clone()));
                }
            }
        }
        entries.sort_by_key(|&(r, c, _)| (r, c));
        SparseMatrix {
            rows,
            cols: cols.len(),
            entries,
        }
    }

    pub fn entries(&self) -> &[(usize, usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> Vec<Vector> {
        let mut out = vec![zero_vector(self.cols); self.rows];
        for (r, c, v) in &self.entries {
            out[*r][*c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut entries: Vec<_> = self
            .entries
            .iter()
            .map(|(r, c, v)| (*c, *r, v.clone()))
            .collect();
        entries.sort_by_key(|&(r, c, _)| (r, c));
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn column(&self, j: usize) -> Vector {
        let mut out = zero_vector(self.rows);
        for (r, c, v) in &self.entries {
            if *c == j {
                out[*r] = v.clone();
            }
        }
        out
    }

    /// Matrix-vector product m . v.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        let mut out = zero_vector(self.rows);
        for (r, c, a) in &self.entries {
            if !v[*c].is_zero() {
                out[*r] += &(a * &v[*c]);
            }
        }
        out
    }

    pub fn compose(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "compose: dimension mismatch");
        let cols: Vec<Vector> = (0..rhs.cols).map(|j| self.apply(&rhs.column(j))).collect();
        SparseMatrix::from_columns(self.rows, &cols)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(r, c, v)| (*r, *c, v.conj()))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        rref(&mut self.to_dense()).len()
    }

    /// Kernel { v : m.v = 0 } with the RREF basis of the kernel as rows.
    pub fn kernel_basis(&self) -> Subspace {
        let mut rows = self.to_dense();
        let pivots = rref(&mut rows);
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut gens = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = zero_vector(self.cols);
            v[f] = Scalar::one();
            for (j, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[j][f];
            }
            gens.push(v);
        }
        Subspace::from_rows(self.cols, gens)
    }

    /// Column space as a subspace of the target coordinates.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::from_rows(self.rows, cols)
    }

    /// Solves m . x = b exactly. The solution with every free variable set to zero
    /// is returned, so the answer is deterministic; `None` means inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "solve: rhs length mismatch");
        // augmented RREF
        let mut rows: Vec<Vector> = self
            .to_dense()
            .into_iter()
            .zip(b)
            .map(|(mut row, bi)| {
                row.push(bi.clone());
                row
            })
            .collect();
        let pivots = rref(&mut rows);
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = zero_vector(self.cols);
        for (j, &p) in pivots.iter().enumerate() {
            x[p] = rows[j][self.cols].clone();
        }
        Some(x)
    }
}

/// In-place RREF with leftmost-column pivoting; returns pivot column indices in
/// increasing order. Zero rows are dropped, pivots are normalized to 1, and the
/// pivot columns are cleared above and below.
pub fn rref(rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].inverse();
        for v in rows[rank].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let c = -&row[col];
                add_assign_scaled(row, &pivot_row, &c);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// A subspace of an ambient coordinate space, stored as the RREF basis of its
/// span. Equality of subspaces is structural equality of these canonical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vector>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "spanning vector length mismatch");
        }
        let mut rows = rows;
        let pivots = rref(&mut rows);
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    /// Span of the standard basis vectors at `indices`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Subspace::from_rows(
            ambient,
            indices.iter().map(|&i| unit_vector(ambient, i)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// v reduced modulo this subspace: the pivot coordinates are eliminated, and
    /// the result is zero exactly when v lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient, "reduce: length mismatch");
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -&out[p];
                add_assign_scaled(&mut out, row, &c);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "sum: ambient mismatch");
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection via the kernel of [U^T | -V^T].
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "intersect: ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let k = self.dim();
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| scale_vector(v, &Scalar::from_int(-1))));
        let m = SparseMatrix::from_columns(self.ambient, &cols);
        let ker = m.kernel_basis();
        let gens = ker
            .basis()
            .iter()
            .map(|ab| {
                let mut v = zero_vector(self.ambient);
                for (i, row) in self.basis.iter().enumerate() {
                    add_assign_scaled(&mut v, row, &ab[i]);
                }
                let _ = k;
                v
            })
            .collect();
        Subspace::from_rows(self.ambient, gens)
    }

    /// Image of this subspace under a matrix.
    pub fn map_by(&self, m: &SparseMatrix) -> Subspace {
        assert_eq!(m.cols, self.ambient, "map_by: dimension mismatch");
        Subspace::from_rows(m.rows, self.basis.iter().map(|v| m.apply(v)).collect())
    }

    /// Image under a conjugate-linear involution.
    pub fn conjugate(&self, conj: &Conjugation) -> Subspace {
        Subspace::from_rows(
            self.ambient,
            self.basis.iter().map(|v| conj.apply(v)).collect(),
        )
    }
}

/// Quotient of an ambient coordinate space by a subspace. Representatives are the
/// standard basis vectors at the non-pivot coordinates of the subspace's RREF
/// basis, and `project` maps representative_i to e_i exactly.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub sub: Subspace,
    free: Vec<usize>,
}

impl Quotient {
    pub fn new(ambient: usize, sub: Subspace) -> Self {
        assert_eq!(sub.ambient, ambient, "quotient: ambient mismatch");
        let pivot_set: std::collections::BTreeSet<usize> = sub.pivots.iter().copied().collect();
        let free = (0..ambient).filter(|i| !pivot_set.contains(i)).collect();
        Quotient { sub, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn representatives(&self) -> Vec<Vector> {
        self.free
            .iter()
            .map(|&i| unit_vector(self.sub.ambient, i))
            .collect()
    }

    /// Linear projection with kernel exactly the subspace.
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let reduced = self.sub.reduce(v);
        self.free.iter().map(|&i| reduced[i].clone()).collect()
    }
}

/// A subquotient num/denom presented by explicit representatives: `reps` are
/// vectors of the ambient space, independent modulo `denom`, and coordinates on
/// the chart are coefficients over `reps`.
///
/// This is how cohomology, spectral-sequence pages, and induced filtrations are
/// all carried around: lift to the ambient space, compute, project back.
#[derive(Debug, Clone)]
pub struct Chart {
    pub ambient: usize,
    reps: Vec<Vector>,
    denom: Subspace,
    /// columns = reps then denom basis; cached for project()
    solve_matrix: SparseMatrix,
}

impl Chart {
    pub fn new(ambient: usize, reps: Vec<Vector>, denom: Subspace) -> Self {
        assert_eq!(denom.ambient, ambient);
        let mut cols = reps.clone();
        cols.extend(denom.basis().iter().cloned());
        let solve_matrix = SparseMatrix::from_columns(ambient, &cols);
        Chart {
            ambient,
            reps,
            denom,
            solve_matrix,
        }
    }

    /// Chart for num/denom. Representatives are chosen deterministically: walk the
    /// RREF basis of `num` and keep each vector independent of denom plus the
    /// vectors already kept.
    pub fn from_subquotient(num: &Subspace, denom: &Subspace) -> Result<Chart> {
        if num.ambient != denom.ambient {
            return Err(Error::Internal("chart: ambient mismatch".into()));
        }
        if !num.contains_subspace(denom) {
            return Err(Error::Internal(
                "chart: denominator not contained in numerator".into(),
            ));
        }
        let mut reps = Vec::new();
        let mut seen = denom.clone();
        for v in num.basis() {
            if !seen.contains(v) {
                reps.push(v.clone());
                seen = seen.sum(&Subspace::from_rows(num.ambient, vec![v.clone()]));
            }
        }
        Ok(Chart::new(num.ambient, reps, denom.clone()))
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Vector] {
        &self.reps
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denom
    }

    /// Chart coordinates of an ambient vector; `None` when the vector does not lie
    /// in span(reps) + denom.
    pub fn project(&self, v: &[Scalar]) -> Option<Vector> {
        let sol = self.solve_matrix.solve(v)?;
        Some(sol[..self.reps.len()].to_vec())
    }

    /// Ambient representative of chart coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.reps.len(), "lift: dimension mismatch");
        let mut v = zero_vector(self.ambient);
        for (rep, c) in self.reps.iter().zip(coords) {
            add_assign_scaled(&mut v, rep, c);
        }
        v
    }

    /// The subspace of chart coordinates spanned by the classes of the given
    /// ambient vectors (each must be projectable).
    pub fn project_span(&self, vectors: &[Vector]) -> Result<Subspace> {
        let mut rows = Vec::new();
        for v in vectors {
            let coords = self.project(v).ok_or_else(|| {
                Error::Internal("chart projection of vector outside subquotient".into())
            })?;
            rows.push(coords);
        }
        Ok(Subspace::from_rows(self.dim(), rows))
    }
}

/// A conjugate-linear involution v -> M . conj(v) of a coordinate space. The
/// identity matrix gives plain coordinatewise conjugation, which is the right
/// notion whenever the coordinates refer to a real basis; complex-adapted bases
/// (Sasakian rings) carry a nontrivial pairing matrix.
#[derive(Debug, Clone)]
pub struct Conjugation {
    pub matrix: SparseMatrix,
}

impl Conjugation {
    pub fn identity(n: usize) -> Self {
        Conjugation {
            matrix: SparseMatrix::identity(n),
        }
    }

    pub fn new(matrix: SparseMatrix) -> Result<Self> {
        if matrix.rows != matrix.cols {
            return Err(Error::Internal("conjugation matrix not square".into()));
        }
        let c = Conjugation { matrix };
        if !c.is_involution() {
            return Err(Error::Internal("conjugation is not an involution".into()));
        }
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(&conj_vector(v))
    }

    /// conj . conj = id, i.e. M . conj(M) = I.
    pub fn is_involution(&self) -> bool {
        self.matrix.compose(&self.matrix.conj()) == SparseMatrix::identity(self.matrix.rows)
    }
}
