//! Dense linear algebra over a prime field F_p.
//!
//! Everything else in the crate reduces to row reduction over F_p: ideal
//! spans, normal forms, kernels of differentials, homology of subquotient
//! complexes. Matrices are dense and row-major; subspaces are stored as the
//! rows of their reduced row echelon form, which makes them canonical.

use std::fmt;

use thiserror::Error;

/// An element of F_p, kept reduced in `[0, p)`. The modulus lives in [`Fp`].
pub type FpScalar = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),
    #[error("map does not respect the subquotients: {0}")]
    FiltrationViolation(&'static str),
}

/// The prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Fp { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: FpScalar, b: FpScalar) -> FpScalar {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: FpScalar, b: FpScalar) -> FpScalar {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: FpScalar) -> FpScalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: FpScalar, b: FpScalar) -> FpScalar {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: FpScalar, mut exp: u64) -> FpScalar {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: FpScalar) -> FpScalar {
        assert!(a != 0, "inverse of zero in {:?}", self);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn from_i64(self, v: i64) -> FpScalar {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric lift to (-p/2, p/2], used for display.
    pub fn lift(self, a: FpScalar) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// `acc += c * row`, entrywise.
    #[inline]
    pub fn axpy(self, acc: &mut [FpScalar], c: FpScalar, row: &[FpScalar]) {
        if c == 0 {
            return;
        }
        let p = self.p as u64;
        let c = c as u64;
        for (a, &r) in acc.iter_mut().zip(row) {
            if r != 0 {
                *a = ((*a as u64 + c * r as u64) % p) as u32;
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<FpScalar>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p;
        }
        m
    }

    /// Builds a matrix from rows of arbitrary integers, reducing mod p.
    pub fn from_i64_rows(field: Fp, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend(r.iter().map(|&v| field.from_i64(v)));
        }
        Ok(FpMatrix { field, rows: rows.len(), cols, data })
    }

    /// Rows must already be reduced; `cols` fixes the width for empty input.
    pub fn from_rows(field: Fp, cols: usize, rows: Vec<Vec<FpScalar>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: r.len() });
            }
            debug_assert!(r.iter().all(|&v| v < field.p));
            data.extend(r);
        }
        Ok(FpMatrix { field, rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Fp, rows: usize, columns: &[Vec<FpScalar>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, got: col.len() });
            }
            for (r, &v) in col.iter().enumerate() {
                m.data[r * m.cols + c] = v;
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FpScalar {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FpScalar) {
        debug_assert!(v < self.field.p);
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[FpScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [FpScalar] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FpScalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<FpScalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field.p, other.field.p));
        }
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let (head, tail) = (r * other.cols, (r + 1) * other.cols);
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a != 0 {
                    self.field.axpy(&mut out.data[head..tail], a, other.row(k));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FpScalar]) -> Result<Vec<FpScalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let p = self.field.p as u64;
        let mut out = vec![0u32; self.rows];
        // Column-oriented accumulation: input vectors are usually sparse.
        for (c, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.data[r * self.cols + c];
                if a != 0 {
                    *o = ((*o as u64 + a as u64 * x as u64) % p) as u32;
                }
            }
        }
        Ok(out)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> FpMatrix {
        let mut m = Self::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            let src = self.row(r);
            let dst = &mut m.data[i * cols.len()..(i + 1) * cols.len()];
            for (j, &c) in cols.iter().enumerate() {
                dst[j] = src[c];
            }
        }
        m
    }

    /// Selects a subset of rows, all columns.
    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        FpMatrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// In-place Gauss-Jordan elimination. Returns the pivot columns.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for c in 0..cols {
            if next == self.rows {
                break;
            }
            let Some(pr) = (next..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != next {
                for k in c..cols {
                    self.data.swap(pr * cols + k, next * cols + k);
                }
            }
            let inv = f.inv(self.data[next * cols + c]);
            if inv != 1 {
                for v in &mut self.data[next * cols + c..(next + 1) * cols] {
                    *v = f.mul(*v, inv);
                }
            }
            let pivot_row: Vec<FpScalar> = self.data[next * cols + c..(next + 1) * cols].to_vec();
            for r in 0..self.rows {
                if r == next {
                    continue;
                }
                let a = self.data[r * cols + c];
                if a != 0 {
                    let neg = f.neg(a);
                    f.axpy(&mut self.data[r * cols + c..(r + 1) * cols], neg, &pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.clone().reduce_in_place().len()
        } else {
            self.transpose().reduce_in_place().len()
        }
    }

    pub fn kernel_basis(&self) -> Subspace {
        kernel_basis(self)
    }
}

/// Result of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &FpMatrix) -> Rref {
    let mut reduced = m.clone();
    let pivots = reduced.reduce_in_place();
    Rref { reduced, rank: pivots.len(), pivots }
}

/// Null space `{v : m v = 0}` as a subspace of F_p^{cols}.
pub fn kernel_basis(m: &FpMatrix) -> Subspace {
    let Rref { reduced, pivots, .. } = rref(m);
    kernel_from_rref(&reduced, &pivots)
}

pub(crate) fn kernel_from_rref(reduced: &FpMatrix, pivots: &[usize]) -> Subspace {
    let f = reduced.field;
    let cols = reduced.cols;
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::with_capacity(cols - pivots.len());
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[free] = 1 % f.p;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(reduced.get(r, free));
        }
        vecs.push(v);
    }
    Subspace::from_vectors(f, cols, vecs)
}

/// A subspace of F_p^n stored as the rows of its RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: FpMatrix,
    pivots: Vec<usize>,
    // Sparse copies of the basis rows; reductions only touch nonzeros.
    sparse: Vec<Vec<(u32, FpScalar)>>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}, pivots {:?})", self.dim(), self.ambient_dim, self.pivots)
    }
}

impl Subspace {
    fn from_reduced(basis: FpMatrix, pivots: Vec<usize>) -> Self {
        let sparse = (0..basis.rows)
            .map(|r| basis.row(r).iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c as u32, v)).collect())
            .collect();
        Subspace { ambient_dim: basis.cols, basis, pivots, sparse }
    }

    pub fn zero(field: Fp, n: usize) -> Self {
        Self::from_reduced(FpMatrix::zeros(field, 0, n), Vec::new())
    }

    pub fn full(field: Fp, n: usize) -> Self {
        Self::from_reduced(FpMatrix::identity(field, n), (0..n).collect())
    }

    /// Span of the standard basis vectors `e_i` for the given indices.
    pub fn coordinate(field: Fp, n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let mut basis = FpMatrix::zeros(field, idx.len(), n);
        for (r, &c) in idx.iter().enumerate() {
            basis.set(r, c, 1 % field.p);
        }
        Self::from_reduced(basis, idx)
    }

    /// Row space of `m`.
    pub fn row_space(m: &FpMatrix) -> Self {
        let Rref { mut reduced, rank, pivots } = rref(m);
        reduced.data.truncate(rank * reduced.cols);
        reduced.rows = rank;
        Self::from_reduced(reduced, pivots)
    }

    /// Column space of `m`.
    pub fn column_space(m: &FpMatrix) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn from_vectors(field: Fp, n: usize, vecs: Vec<Vec<FpScalar>>) -> Self {
        let m = FpMatrix::from_rows(field, n, vecs).expect("vectors of ambient length");
        Self::row_space(&m)
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.basis.field
    }
    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_vector(&self, i: usize) -> &[FpScalar] {
        self.basis.row(i)
    }

    /// Subtracts the basis-row combination that clears `v` at every pivot.
    /// Returns the coefficients used, so that `v_before = Σ coeff_i · row_i + v_after`.
    pub fn reduce(&self, v: &mut [FpScalar]) -> Vec<FpScalar> {
        let f = self.field();
        let mut coords = Vec::with_capacity(self.dim());
        for (row, &p) in self.sparse.iter().zip(&self.pivots) {
            let c = v[p];
            coords.push(c);
            if c != 0 {
                let neg = f.neg(c);
                for &(j, val) in row {
                    let j = j as usize;
                    v[j] = f.add(v[j], f.mul(neg, val));
                }
            }
        }
        coords
    }

    pub fn contains(&self, v: &[FpScalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn membership(&self, v: &[FpScalar]) -> Result<Option<Vec<FpScalar>>, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, got: v.len() });
        }
        let mut w = v.to_vec();
        let coords = self.reduce(&mut w);
        Ok(w.iter().all(|&x| x == 0).then_some(coords))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis_vector(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Subspace::from_vectors(self.field(), self.ambient_dim, rows)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let f = self.field();
        let (a, b) = (self.dim(), other.dim());
        // Solve x·U = y·V through the kernel of [U; -V]^T.
        let mut stacked = FpMatrix::zeros(f, a + b, self.ambient_dim);
        for i in 0..a {
            stacked.row_mut(i).copy_from_slice(self.basis_vector(i));
        }
        for j in 0..b {
            for (dst, &v) in stacked.row_mut(a + j).iter_mut().zip(other.basis_vector(j)) {
                *dst = f.neg(v);
            }
        }
        let ker = kernel_basis(&stacked.transpose());
        let mut vecs = Vec::with_capacity(ker.dim());
        for k in 0..ker.dim() {
            let coeffs = &ker.basis_vector(k)[..a];
            let mut v = vec![0u32; self.ambient_dim];
            for (i, &c) in coeffs.iter().enumerate() {
                f.axpy(&mut v, c, self.basis_vector(i));
            }
            vecs.push(v);
        }
        Subspace::from_vectors(f, self.ambient_dim, vecs)
    }

    /// Image of the subspace under `f` (a matrix acting on column vectors).
    pub fn image_under(&self, f: &FpMatrix) -> Result<Subspace, LinalgError> {
        if f.cols() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: f.cols(), got: self.ambient_dim });
        }
        let vecs = (0..self.dim()).map(|i| f.mul_vec(self.basis_vector(i))).collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::from_vectors(self.field(), f.rows(), vecs))
    }
}

/// `sub / modulus` with a fixed basis of complement representatives.
///
/// The representatives are the RREF of the rows of `sub` reduced modulo
/// `modulus`; they vanish on the pivots of `modulus`, so quotient
/// coordinates of `w ∈ sub` are read off after reducing `w` by `modulus`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    modulus: Subspace,
    complement: Subspace,
}

impl Subquotient {
    pub fn new(sub: &Subspace, modulus: &Subspace) -> Result<Self, LinalgError> {
        if sub.ambient_dim != modulus.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: sub.ambient_dim, got: modulus.ambient_dim });
        }
        if !sub.contains_subspace(modulus) {
            return Err(LinalgError::FiltrationViolation("modulus is not contained in the subspace"));
        }
        let vecs = (0..sub.dim())
            .map(|i| {
                let mut v = sub.basis_vector(i).to_vec();
                modulus.reduce(&mut v);
                v
            })
            .collect();
        let complement = Subspace::from_vectors(sub.field(), sub.ambient_dim, vecs);
        Ok(Subquotient { modulus: modulus.clone(), complement })
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    pub fn representative(&self, i: usize) -> &[FpScalar] {
        self.complement.basis_vector(i)
    }

    pub fn modulus(&self) -> &Subspace {
        &self.modulus
    }

    /// Quotient coordinates of `w`, or `None` when `w` is not in `sub`.
    pub fn coordinates(&self, w: &[FpScalar]) -> Option<Vec<FpScalar>> {
        let mut v = w.to_vec();
        self.modulus.reduce(&mut v);
        let coords = self.complement.reduce(&mut v);
        v.iter().all(|&x| x == 0).then_some(coords)
    }
}

/// Matrix of the map `src_sub/src_mod -> dst_sub/dst_mod` induced by `f`,
/// in the complement bases of [`Subquotient`].
pub fn induced_map_on_subquotients(
    f: &FpMatrix,
    src_sub: &Subspace,
    src_mod: &Subspace,
    dst_sub: &Subspace,
    dst_mod: &Subspace,
) -> Result<FpMatrix, LinalgError> {
    if f.cols() != src_sub.ambient_dim() {
        return Err(LinalgError::DimensionMismatch { expected: f.cols(), got: src_sub.ambient_dim() });
    }
    if f.rows() != dst_sub.ambient_dim() {
        return Err(LinalgError::DimensionMismatch { expected: f.rows(), got: dst_sub.ambient_dim() });
    }
    let src = Subquotient::new(src_sub, src_mod)?;
    let dst = Subquotient::new(dst_sub, dst_mod)?;
    for i in 0..src_mod.dim() {
        let w = f.mul_vec(src_mod.basis_vector(i))?;
        if !dst_mod.contains(&w) {
            return Err(LinalgError::FiltrationViolation("f(src_mod) is not inside dst_mod"));
        }
    }
    let mut out = FpMatrix::zeros(f.field(), dst.dim(), src.dim());
    for j in 0..src.dim() {
        let w = f.mul_vec(src.representative(j))?;
        let coords = dst.coordinates(&w).ok_or(LinalgError::FiltrationViolation("f(src_sub) is not inside dst_sub"))?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    #[test]
    fn field_rejects_composites() {
        assert_eq!(Fp::new(10), Err(LinalgError::NotPrime(10)));
        assert!(Fp::new(1).is_err());
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(2_147_483_647).is_ok());
        assert!(Fp::new(1 << 31).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Fp::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = f5();
        let id = FpMatrix::identity(f, 2);
        let r = rref(&id);
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);

        let z = FpMatrix::zeros(f, 3, 4);
        let r = rref(&z);
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = FpMatrix::from_i64_rows(f5(), &[vec![1, 2], vec![2, 4]]).unwrap();
        let r = rref(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced.row(0), &[1, 2]);
        assert_eq!(r.reduced.row(1), &[0, 0]);
    }

    #[test]
    fn kernels() {
        let f = f5();
        assert_eq!(kernel_basis(&FpMatrix::identity(f, 3)).dim(), 0);
        assert_eq!(kernel_basis(&FpMatrix::zeros(f, 2, 4)).dim(), 4);
        let m = FpMatrix::from_i64_rows(f, &[vec![1, 2], vec![2, 4]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        // 1*3 + 2*1 = 5 = 0 mod 5
        assert!(k.contains(&[3, 1]));
    }

    #[test]
    fn membership_cases() {
        let f = f5();
        let full = Subspace::full(f, 3);
        assert!(full.membership(&[1, 4, 2]).unwrap().is_some());
        let zero = Subspace::zero(f, 3);
        assert_eq!(zero.membership(&[0, 1, 0]).unwrap(), None);
        assert_eq!(zero.membership(&[0, 0, 0]).unwrap(), Some(vec![]));
        let line = Subspace::from_vectors(f, 2, vec![vec![1, 2]]);
        assert_eq!(line.membership(&[2, 4]).unwrap(), Some(vec![2]));
        assert_eq!(line.membership(&[2, 3]).unwrap(), None);
        assert!(matches!(line.membership(&[1]), Err(LinalgError::DimensionMismatch { .. })));
    }

    #[test]
    fn intersection_of_planes() {
        let f = Fp::new(7).unwrap();
        let a = Subspace::coordinate(f, 3, [0, 1]);
        let b = Subspace::coordinate(f, 3, [1, 2]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::coordinate(f, 3, [1]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn induced_identity_on_quotient() {
        let f = f5();
        let sub = Subspace::full(f, 3);
        let m = Subspace::coordinate(f, 3, [2]);
        let id = FpMatrix::identity(f, 3);
        let ind = induced_map_on_subquotients(&id, &sub, &m, &sub, &m).unwrap();
        assert_eq!(ind, FpMatrix::identity(f, 2));
    }

    #[test]
    fn induced_zero_source() {
        let f = f5();
        let s = Subspace::coordinate(f, 3, [0, 1]);
        let m = FpMatrix::from_i64_rows(f, &[vec![1, 2, 3], vec![0, 1, 1], vec![4, 4, 0]]).unwrap();
        let image = s.image_under(&m).unwrap();
        let ind = induced_map_on_subquotients(&m, &s, &s, &Subspace::full(f, 3), &image).unwrap();
        assert_eq!(ind.cols(), 0);
        assert_eq!(ind.rows(), 3 - image.dim());
    }

    #[test]
    fn induced_multiplication_by_x_on_truncated_line() {
        // F_5[x]/(x^3) in the basis 1, x, x^2; multiplication by x.
        let f = f5();
        let mx = FpMatrix::from_i64_rows(f, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let m1 = Subspace::coordinate(f, 3, [1, 2]);
        let m2 = Subspace::coordinate(f, 3, [2]);
        let m3 = Subspace::zero(f, 3);
        let ind = induced_map_on_subquotients(&mx, &m1, &m2, &m2, &m3).unwrap();
        assert_eq!(ind, FpMatrix::from_i64_rows(f, &[vec![1]]).unwrap());
    }

    #[test]
    fn induced_rejects_bad_filtration() {
        let f = f5();
        let id = FpMatrix::identity(f, 2);
        let err = induced_map_on_subquotients(
            &id,
            &Subspace::full(f, 2),
            &Subspace::zero(f, 2),
            &Subspace::coordinate(f, 2, [0]),
            &Subspace::zero(f, 2),
        );
        assert!(matches!(err, Err(LinalgError::FiltrationViolation(_))));
    }
}
