//! Dense linear algebra over prime fields.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
}

impl FieldSpec {
    /// Validates `p` by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        pow_mod(a as u64, self.p as u64 - 2, self.p as u64) as u32
    }
}

fn is_prime(p: u64) -> bool {
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for KMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "KMatrix[F_{}; {}x{}]", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl KMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        KMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = x.rem_euclid(p as i64) as u32;
            }
        }
        m
    }

    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < p));
        KMatrix { p, rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for i in 0..rows {
                m.data[i * m.cols + j] = col[i];
            }
        }
        m
    }

    pub fn column_vector(p: u32, v: &[u32]) -> Self {
        Self::from_vec(p, v.len(), 1, v.to_vec())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec { p: self.p }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.p);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let n = other.cols;
        let mut out = Self::zeros(self.p, self.rows, n);
        let mut acc = vec![0u64; n];
        // Entries are < 2^31; reduce the accumulator before it can overflow.
        let limit = u64::MAX / 2 - (p - 1) * (p - 1);
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut bound = 0u64;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b as u64;
                }
                bound += (p - 1) * (p - 1);
                if bound >= limit {
                    acc.iter_mut().for_each(|x| *x %= p);
                    bound = 0;
                }
            }
            for (j, x) in acc.iter().enumerate() {
                out.data[i * n + j] = (x % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let p = self.p as u64;
        // Products stay below 2^32 for p < 2^16, so the sum cannot overflow.
        let small = p < 1 << 16;
        (0..self.rows)
            .map(|r| {
                let terms = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64);
                let s: u64 = if small { terms.sum() } else { terms.map(|t| t % p).sum() };
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &KMatrix) -> KMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sum shape mismatch");
        let f = self.field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        KMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &KMatrix) -> KMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "difference shape mismatch");
        let f = self.field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        KMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> KMatrix {
        let f = self.field();
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        KMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> KMatrix {
        let f = self.field();
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        KMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.p, self.rows, cols);
        for r in 0..self.rows {
            out.data[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * cols + self.cols..(r + 1) * cols].copy_from_slice(other.row(r));
        }
        out
    }

    pub fn vstack(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        KMatrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Copies `block` into `self` with top-left corner at (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &KMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> KMatrix {
        let mut out = Self::zeros(self.p, rows, cols);
        for r in 0..rows {
            let src = (r0 + r) * self.cols + c0;
            out.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> KMatrix {
        let mut out = Self::zeros(self.p, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> KMatrix {
        let mut out = Self::zeros(self.p, idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(self.row(r));
        }
        out
    }

    pub fn block_diag(p: u32, blocks: &[KMatrix]) -> KMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reduced row echelon form and pivot columns. Pivots are taken as the
    /// first nonzero entry in column order.
    pub fn rref(&self) -> (KMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Row-reduces in place, choosing pivots only among the first `pivot_cols`
    /// columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        if self.p == 2 {
            return self.rref_in_place_f2(pivot_cols);
        }
        let f = self.field();
        let p = self.p as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if pr != row {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, row * cols + j);
                }
            }
            let inv = f.inv(self.data[row * cols + col]);
            if inv != 1 {
                for j in col..cols {
                    let x = &mut self.data[row * cols + j];
                    *x = ((*x as u64 * inv as u64) % p) as u32;
                }
            }
            let (before, rest) = self.data.split_at_mut(row * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |target: &mut [u32]| {
                let factor = target[col];
                if factor == 0 {
                    return;
                }
                let neg = p - factor as u64;
                for j in col..cols {
                    let pv = pivot_row[j];
                    if pv != 0 {
                        target[j] = ((target[j] as u64 + neg * pv as u64) % p) as u32;
                    }
                }
            };
            for chunk in before.chunks_mut(cols) {
                eliminate(chunk);
            }
            for chunk in after.chunks_mut(cols) {
                eliminate(chunk);
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// The same elimination over F_2 on bit-packed rows.
    fn rref_in_place_f2(&mut self, pivot_cols: usize) -> Vec<usize> {
        let cols = self.cols;
        let words = cols.div_ceil(64);
        let mut bits = vec![0u64; self.rows * words];
        for r in 0..self.rows {
            for c in 0..cols {
                if self.data[r * cols + c] != 0 {
                    bits[r * words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            if row == self.rows {
                break;
            }
            let (w, mask) = (col / 64, 1u64 << (col % 64));
            let Some(pr) = (row..self.rows).find(|&r| bits[r * words + w] & mask != 0) else {
                continue;
            };
            if pr != row {
                for j in 0..words {
                    bits.swap(pr * words + j, row * words + j);
                }
            }
            let pivot_row: Vec<u64> = bits[row * words..(row + 1) * words].to_vec();
            for r in 0..self.rows {
                if r != row && bits[r * words + w] & mask != 0 {
                    for (x, &y) in bits[r * words + w..(r + 1) * words].iter_mut().zip(&pivot_row[w..]) {
                        *x ^= y;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        for r in 0..self.rows {
            for c in 0..cols {
                self.data[r * cols + c] = ((bits[r * words + c / 64] >> (c % 64)) & 1) as u32;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.rref().1.len()
        } else {
            self.transpose().rref().1.len()
        }
    }
}

/// Rank of a matrix via Gaussian elimination.
pub fn rank(m: &KMatrix) -> usize {
    m.rank()
}

/// A subspace of F_p^n, stored as a matrix whose columns form a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: KMatrix,
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace { basis: KMatrix::zeros(p, ambient, 0) }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        Subspace { basis: KMatrix::identity(p, ambient) }
    }

    /// Span of the columns of `m`, reduced to a basis.
    pub fn span(m: &KMatrix) -> Self {
        image_basis(m)
    }

    pub fn span_of(p: u32, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        image_basis(&KMatrix::from_columns(p, ambient, vectors))
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn p(&self) -> u32 {
        self.basis.p
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis(&self) -> &KMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let before = self.dim();
        let m = self.basis.hstack(&KMatrix::column_vector(self.p(), v));
        m.rank() == before
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        subspace_sum(self, other).map(|s| s.dim() == self.dim()).unwrap_or(false)
    }
}

/// A subspace grown one vector at a time, kept in echelon form so that
/// membership tests and insertions cost one reduction each.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    ambient: usize,
    /// Rows with leading coordinate 1 at the matching pivot.
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(p: u32, ambient: usize) -> Self {
        let field = FieldSpec::new(p as u64).expect("prime field");
        EchelonBasis { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.field.p() as u64;
        let mut w = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w[piv];
            if c != 0 {
                let f = p - c as u64;
                for (x, &r) in w.iter_mut().zip(row) {
                    if r != 0 {
                        *x = ((*x as u64 + f * r as u64) % p) as u32;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = self.reduce(v);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[piv]);
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(piv);
        true
    }
}

/// Basis of {v : m v = 0}.
pub fn kernel_basis(m: &KMatrix) -> Subspace {
    let (r, pivots) = m.rref();
    let n = m.cols;
    let f = m.field();
    let mut is_pivot = vec![usize::MAX; n];
    for (i, &c) in pivots.iter().enumerate() {
        is_pivot[c] = i;
    }
    let free: Vec<usize> = (0..n).filter(|&c| is_pivot[c] == usize::MAX).collect();
    let mut basis = KMatrix::zeros(m.p, n, free.len());
    for (j, &fc) in free.iter().enumerate() {
        basis.set(fc, j, 1 % m.p);
        for (i, &pc) in pivots.iter().enumerate() {
            basis.set(pc, j, f.neg(r.get(i, fc)));
        }
    }
    Subspace { basis }
}

/// Basis of the column space of `m` (a subset of its columns).
pub fn image_basis(m: &KMatrix) -> Subspace {
    let (_, pivots) = m.rref();
    Subspace { basis: m.select_columns(&pivots) }
}

/// Returns some x with m x = b, or `None` when the system is inconsistent.
pub fn solve(m: &KMatrix, b: &[u32]) -> Result<Option<Vec<u32>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch(format!("right-hand side has length {} but the matrix has {} rows", b.len(), m.rows)));
    }
    let aug = m.hstack(&KMatrix::column_vector(m.p, b));
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![0u32; m.cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = r.get(i, m.cols);
    }
    Ok(Some(x))
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch(format!("subspaces of F^{} and F^{}", a.ambient_dim(), b.ambient_dim())));
    }
    Ok(image_basis(&a.basis.hstack(&b.basis)))
}

pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch(format!("subspaces of F^{} and F^{}", a.ambient_dim(), b.ambient_dim())));
    }
    // Solutions of A x = B y give the intersection as A x.
    let k = kernel_basis(&a.basis.hstack(&b.basis.neg()));
    let xs = k.basis.block(0, 0, a.dim(), k.dim());
    Ok(image_basis(&a.basis.mul(&xs)))
}

/// Projection F^n -> F^n / sub and a section with projection ∘ section = id.
pub fn quotient(ambient_dim: usize, sub: &Subspace) -> Result<(KMatrix, KMatrix)> {
    if sub.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch(format!("subspace of F^{} in quotient of F^{}", sub.ambient_dim(), ambient_dim)));
    }
    let p = sub.p();
    let (r, pivots) = sub.basis.transpose().rref();
    let f = FieldSpec { p };
    let mut is_pivot = vec![false; ambient_dim];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let q = free.len();
    let mut proj = KMatrix::zeros(p, q, ambient_dim);
    let mut sec = KMatrix::zeros(p, ambient_dim, q);
    for (j, &fc) in free.iter().enumerate() {
        proj.set(j, fc, 1 % p);
        sec.set(fc, j, 1 % p);
        for (i, &pc) in pivots.iter().enumerate() {
            proj.set(j, pc, f.neg(r.get(i, fc)));
        }
    }
    Ok((proj, sec))
}

/// Pre-factored solver for repeated systems m x = b.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    transform: KMatrix,
    pivots: Vec<usize>,
    cols: usize,
}

impl LinearSolver {
    pub fn new(m: &KMatrix) -> Self {
        let mut aug = m.hstack(&KMatrix::identity(m.p, m.rows));
        let pivots = aug.rref_in_place(m.cols);
        let transform = aug.block(0, m.cols, m.rows, m.rows);
        LinearSolver { transform, pivots, cols: m.cols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let c = self.transform.mul_vec(b);
        if c[self.pivots.len()..].iter().any(|&x| x != 0) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in self.pivots.iter().enumerate() {
            x[pc] = c[i];
        }
        Some(x)
    }

    /// Solves column by column; panics if some column is inconsistent.
    pub fn solve_columns(&self, b: &KMatrix) -> Option<KMatrix> {
        let c = self.transform.mul(b);
        let r = self.pivots.len();
        if (r..c.rows).any(|i| c.row(i).iter().any(|&x| x != 0)) {
            return None;
        }
        let mut x = KMatrix::zeros(b.p, self.cols, b.cols);
        for (i, &pc) in self.pivots.iter().enumerate() {
            x.data[pc * b.cols..(pc + 1) * b.cols].copy_from_slice(c.row(i));
        }
        Some(x)
    }

    /// The linear map b ↦ solution, valid on the column space.
    pub fn solution_matrix(&self) -> KMatrix {
        let p = self.transform.p;
        let mut x = KMatrix::zeros(p, self.cols, self.transform.rows);
        for (i, &pc) in self.pivots.iter().enumerate() {
            x.set_block(pc, 0, &self.transform.block(i, 0, 1, self.transform.cols));
        }
        x
    }
}

/// A subquotient S / T of F^n with T ⊆ S, realized with explicit coordinates.
#[derive(Clone, Debug)]
pub struct SubQuotient {
    sub: KMatrix,
    sub_coords: KMatrix,
    proj: KMatrix,
    sec: KMatrix,
}

impl SubQuotient {
    pub fn new(sub: &Subspace, rel: &Subspace) -> Self {
        let sub_coords = LinearSolver::new(sub.basis()).solution_matrix();
        let rel_in_sub = sub_coords.mul(rel.basis());
        let (proj, sec) = quotient(sub.dim(), &image_basis(&rel_in_sub)).expect("shapes agree");
        SubQuotient { sub: sub.basis().clone(), sub_coords, proj, sec }
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.rows
    }

    pub fn dim(&self) -> usize {
        self.proj.rows
    }

    pub fn sub_basis(&self) -> &KMatrix {
        &self.sub
    }

    /// Matrix sending an ambient vector lying in S to its class.
    pub fn class_matrix(&self) -> KMatrix {
        self.proj.mul(&self.sub_coords)
    }

    /// Matrix sending class coordinates to a representative in S.
    pub fn rep_matrix(&self) -> KMatrix {
        self.sub.mul(&self.sec)
    }

    pub fn class_of(&self, v: &[u32]) -> Vec<u32> {
        self.proj.mul_vec(&self.sub_coords.mul_vec(v))
    }

    pub fn rep(&self, c: &[u32]) -> Vec<u32> {
        self.sub.mul_vec(&self.sec.mul_vec(c))
    }

    /// The relation subspace T as a subspace of the ambient space.
    pub fn relations(&self) -> Subspace {
        let k = kernel_basis(&self.proj);
        image_basis(&self.sub.mul(k.basis()))
    }

    pub fn sub_space(&self) -> Subspace {
        Subspace { basis: self.sub.clone() }
    }

    /// Matrix of the map induced by an ambient map `f` from `self` to `target`.
    pub fn induced(&self, f: &KMatrix, target: &SubQuotient) -> KMatrix {
        target.class_matrix().mul(&f.mul(&self.rep_matrix()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&KMatrix::identity(2, 2)), 2);
        assert_eq!(rank(&KMatrix::zeros(2, 3, 4)), 0);
        assert_eq!(rank(&KMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&KMatrix::identity(3, 3)).dim(), 0);
        assert_eq!(kernel_basis(&KMatrix::zeros(2, 2, 3)).dim(), 3);
        let k = kernel_basis(&KMatrix::from_rows(2, &[vec![1, 1]]));
        assert_eq!(k.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let id = KMatrix::identity(5, 3);
        assert_eq!(solve(&id, &[1, 2, 3]).unwrap(), Some(vec![1, 2, 3]));
        assert_eq!(solve(&KMatrix::zeros(2, 2, 2), &[1, 0]).unwrap(), None);
        let x = solve(&KMatrix::from_rows(2, &[vec![1, 1]]), &[1]).unwrap().unwrap();
        assert!(x == vec![1, 0] || x == vec![0, 1]);
        assert!(solve(&id, &[1]).is_err());
    }

    #[test]
    fn quotient_kills_first_coordinate() {
        let s = Subspace::span_of(2, 3, &[vec![1, 0, 0]]);
        let (proj, sec) = quotient(3, &s).unwrap();
        assert_eq!(proj.rows(), 2);
        assert!(proj.mul_vec(&[1, 0, 0]).iter().all(|&x| x == 0));
        assert_eq!(proj.mul(&sec), KMatrix::identity(2, 2));
    }

    #[test]
    fn intersection_with_itself() {
        let s = Subspace::span_of(3, 4, &[vec![1, 2, 0, 1], vec![0, 1, 1, 2]]);
        let i = subspace_intersection(&s, &s).unwrap();
        assert_eq!(i.dim(), 2);
        assert!(s.contains_subspace(&i) && i.contains_subspace(&s));
    }

    #[test]
    fn field_rejects_composites() {
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(7).is_ok());
    }
}
