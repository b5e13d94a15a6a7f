//! Finite-dimensional algebras given by structure constants, the two-sided
//! ring wrapper, and matrices of algebra elements.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, KMatrix, Subspace};

/// Declared properties of an algebra that the engine cannot decide itself.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraFlags {
    pub self_injective: bool,
    pub gldim: Option<usize>,
}

/// An associative unital algebra over F_p with basis e_0, …, e_{d-1} and
/// e_i e_j = Σ_k c[i][j][k] e_k.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    mult: Vec<u32>,
    unit: Vec<u32>,
    flags: AlgebraFlags,
    /// Whether R is local, decided by enumerating elements for small algebras.
    local: Option<bool>,
    /// Basis of the radical (the nilpotent elements) when R is known to be local.
    radical: Option<Vec<Vec<u32>>>,
    // lmul[i] is left multiplication by e_i, rmul[j] right multiplication by e_j.
    lmul: Vec<KMatrix>,
    rmul: Vec<KMatrix>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.field.p())
            .field("dim", &self.dim)
            .field("unit", &self.unit)
            .field("flags", &self.flags)
            .finish()
    }
}

impl Algebra {
    /// `mult[i][j]` holds the coordinates of e_i e_j. Associativity and the
    /// unit law are checked on all basis triples.
    pub fn new(field: FieldSpec, mult: Vec<Vec<Vec<u32>>>, unit: Vec<u32>) -> Result<Self> {
        let d = unit.len();
        if d == 0 {
            return Err(Error::DimensionMismatch("algebra of dimension 0".into()));
        }
        if mult.len() != d || mult.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(Error::DimensionMismatch(format!("structure constants must be {d}x{d}x{d}")));
        }
        let p = field.p();
        let mut flat = Vec::with_capacity(d * d * d);
        for row in &mult {
            for v in row {
                flat.extend(v.iter().map(|&x| x % p));
            }
        }
        let unit: Vec<u32> = unit.iter().map(|&x| x % p).collect();
        Self::from_flat(field, d, flat, unit, AlgebraFlags::default())
    }

    fn from_flat(field: FieldSpec, dim: usize, mult: Vec<u32>, unit: Vec<u32>, flags: AlgebraFlags) -> Result<Self> {
        let p = field.p();
        let mut lmul = Vec::with_capacity(dim);
        let mut rmul = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut l = KMatrix::zeros(p, dim, dim);
            let mut r = KMatrix::zeros(p, dim, dim);
            for j in 0..dim {
                for k in 0..dim {
                    l.set(k, j, mult[(i * dim + j) * dim + k]);
                    r.set(k, j, mult[(j * dim + i) * dim + k]);
                }
            }
            lmul.push(l);
            rmul.push(r);
        }
        let mut alg = Algebra { field, dim, mult, unit, flags, local: None, radical: None, lmul, rmul };
        alg.check_associative()?;
        alg.check_unit()?;
        let (local, radical) = alg.decide_local();
        alg.local = local;
        alg.radical = radical;
        Ok(alg)
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let eij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.rmul[k].mul_vec(&eij);
                    let ejk = self.basis_product(j, k);
                    let right = self.lmul[i].mul_vec(&ejk);
                    if left != right {
                        return Err(Error::NonAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// A finite-dimensional algebra is local iff every element is a unit or
    /// nilpotent. Decided only when there are at most 2^14 elements.
    fn decide_local(&self) -> (Option<bool>, Option<Vec<Vec<u32>>>) {
        const MAX_ELEMENTS: u64 = 1 << 14;
        let p = self.p() as u64;
        let Some(count) = p.checked_pow(self.dim as u32).filter(|&n| n <= MAX_ELEMENTS) else {
            return (None, None);
        };
        let mut a = vec![0u32; self.dim];
        let mut nilpotent: Vec<Vec<u32>> = Vec::new();
        let mut span = Subspace::zero(self.p(), self.dim);
        for mut code in 0..count {
            for x in a.iter_mut() {
                *x = (code % p) as u32;
                code /= p;
            }
            let l = self.left_matrix(&a);
            if l.rank() == self.dim {
                continue;
            }
            let mut power = l.clone();
            for _ in 1..self.dim {
                power = power.mul(&l);
            }
            if !power.is_zero() {
                return (Some(false), None);
            }
            if !span.contains(&a) {
                nilpotent.push(a.clone());
                span = Subspace::span_of(self.p(), self.dim, &nilpotent);
            }
        }
        (Some(true), Some(nilpotent))
    }

    /// Whether R is local; `None` when the algebra is too large to decide.
    pub fn is_local(&self) -> Option<bool> {
        self.local
    }

    /// A basis of the radical, known only for local algebras.
    pub fn local_radical(&self) -> Option<&[Vec<u32>]> {
        self.radical.as_deref()
    }

    fn check_unit(&self) -> Result<()> {
        let ul = self.left_matrix(&self.unit);
        let ur = self.right_matrix(&self.unit);
        let id = KMatrix::identity(self.field.p(), self.dim);
        for i in 0..self.dim {
            if ul.column(i) != id.column(i) || ur.column(i) != id.column(i) {
                return Err(Error::NotUnital(i));
            }
        }
        Ok(())
    }

    pub fn with_flags(mut self, flags: AlgebraFlags) -> Self {
        self.flags = flags;
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn flags(&self) -> AlgebraFlags {
        self.flags
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<u32> {
        let d = self.dim;
        self.mult[(i * d + j) * d..(i * d + j + 1) * d].to_vec()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.left_matrix(a).mul_vec(b)
    }

    /// Matrix of x ↦ a x.
    pub fn left_matrix(&self, a: &[u32]) -> KMatrix {
        combine(self.p(), self.dim, &self.lmul, a)
    }

    /// Matrix of x ↦ x a.
    pub fn right_matrix(&self, a: &[u32]) -> KMatrix {
        combine(self.p(), self.dim, &self.rmul, a)
    }

    pub fn left_basis_matrix(&self, i: usize) -> &KMatrix {
        &self.lmul[i]
    }

    pub fn right_basis_matrix(&self, j: usize) -> &KMatrix {
        &self.rmul[j]
    }

    /// Structure constants c^op[i][j][k] = c[j][i][k], same unit.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let mut mult = vec![0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    mult[(i * d + j) * d + k] = self.mult[(j * d + i) * d + k];
                }
            }
        }
        Algebra {
            field: self.field,
            dim: d,
            mult,
            unit: self.unit.clone(),
            flags: self.flags,
            local: self.local,
            radical: self.radical.clone(),
            lmul: self.rmul.clone(),
            rmul: self.lmul.clone(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.lmul == self.rmul
    }

    /// k[x]/(x^n) with basis 1, x, …, x^{n-1}; self-injective.
    pub fn truncated_polynomial(p: u64, n: usize) -> Result<Self> {
        let field = FieldSpec::new(p)?;
        let mut mult = vec![vec![vec![0; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    mult[i][j][i + j] = 1;
                }
            }
        }
        let mut unit = vec![0; n];
        unit[0] = 1;
        Ok(Self::new(field, mult, unit)?.with_flags(AlgebraFlags { self_injective: true, gldim: None }))
    }

    /// Upper-triangular 2x2 matrices with basis e11, e12, e22; hereditary.
    pub fn upper_triangular(p: u64) -> Result<Self> {
        let field = FieldSpec::new(p)?;
        let mut mult = vec![vec![vec![0; 3]; 3]; 3];
        mult[0][0][0] = 1; // e11 e11 = e11
        mult[0][1][1] = 1; // e11 e12 = e12
        mult[1][2][1] = 1; // e12 e22 = e12
        mult[2][2][2] = 1; // e22 e22 = e22
        Ok(Self::new(field, mult, vec![1, 0, 1])?.with_flags(AlgebraFlags { self_injective: false, gldim: Some(1) }))
    }

    /// k⟨x,y⟩/(x², y², xy, yx) with basis 1, x, y.
    pub fn local_radical_square_zero(p: u64) -> Result<Self> {
        let field = FieldSpec::new(p)?;
        let mut mult = vec![vec![vec![0; 3]; 3]; 3];
        for i in 0..3 {
            mult[0][i][i] = 1;
            mult[i][0][i] = 1;
        }
        Self::new(field, mult, vec![1, 0, 0])
    }

    /// Exterior algebra k⟨x,y⟩/(x², y², xy+yx) with basis 1, x, y, xy; self-injective.
    pub fn exterior(p: u64) -> Result<Self> {
        let field = FieldSpec::new(p)?;
        let minus_one = field.neg(1);
        let mut mult = vec![vec![vec![0; 4]; 4]; 4];
        for i in 0..4 {
            mult[0][i][i] = 1;
            mult[i][0][i] = 1;
        }
        mult[1][2][3] = 1; // x y = xy
        mult[2][1][3] = minus_one; // y x = -xy
        Ok(Self::new(field, mult, vec![1, 0, 0, 0])?.with_flags(AlgebraFlags { self_injective: true, gldim: None }))
    }
}

fn combine(p: u32, d: usize, mats: &[KMatrix], a: &[u32]) -> KMatrix {
    assert_eq!(a.len(), d, "element has wrong length");
    let mut out = KMatrix::zeros(p, d, d);
    for (i, &c) in a.iter().enumerate() {
        if c != 0 {
            out = out.add(&mats[i].scale(c));
        }
    }
    out
}

/// Which ring a module or matrix lives over: the algebra R or its opposite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Right,
    Op,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Right => Side::Op,
            Side::Op => Side::Right,
        }
    }
}

/// An algebra together with a side marker; `op()` flips the side.
#[derive(Clone)]
pub struct Ring {
    algs: Arc<[Algebra; 2]>,
    side: Side,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({:?}, dim {}, p {})", self.side, self.dim(), self.p())
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && (Arc::ptr_eq(&self.algs, &other.algs) || self.algs[0] == other.algs[0])
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(alg: Algebra) -> Ring {
        let op = alg.opposite();
        Ring { algs: Arc::new([alg, op]), side: Side::Right }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The algebra whose multiplication this ring uses.
    pub fn algebra(&self) -> &Algebra {
        match self.side {
            Side::Right => &self.algs[0],
            Side::Op => &self.algs[1],
        }
    }

    /// The underlying algebra R regardless of side.
    pub fn base(&self) -> &Algebra {
        &self.algs[0]
    }

    pub fn op(&self) -> Ring {
        Ring { algs: self.algs.clone(), side: self.side.flip() }
    }

    pub fn dim(&self) -> usize {
        self.algs[0].dim
    }

    pub fn p(&self) -> u32 {
        self.algs[0].p()
    }

    pub fn flags(&self) -> AlgebraFlags {
        self.algs[0].flags
    }

    pub fn unit(&self) -> &[u32] {
        &self.algs[0].unit
    }

    pub fn zero_element(&self) -> Vec<u32> {
        vec![0; self.dim()]
    }

    pub fn same_algebra(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.algs, &other.algs) || self.algs[0] == other.algs[0]
    }

    /// Right action of e_j on the free module R^n, in coordinates (slot, basis).
    pub fn free_action(&self, n: usize, j: usize) -> KMatrix {
        let r = self.algebra().right_basis_matrix(j);
        KMatrix::block_diag(self.p(), &vec![r.clone(); n])
    }

    /// Right multiplication by `a` on R^n.
    pub fn free_right_mult(&self, n: usize, a: &[u32]) -> KMatrix {
        let r = self.algebra().right_matrix(a);
        KMatrix::block_diag(self.p(), &vec![r; n])
    }

    /// Coordinates in R^n of the unit placed in slot `slot`.
    pub fn unit_in_slot(&self, n: usize, slot: usize) -> Vec<u32> {
        let d = self.dim();
        let mut v = vec![0; n * d];
        v[slot * d..(slot + 1) * d].copy_from_slice(self.unit());
        v
    }
}

/// An n×m matrix of algebra elements, read as the map R^m → R^n of free
/// right modules given by left multiplication.
#[derive(Clone, PartialEq, Eq)]
pub struct RMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RMatrix[{:?}; {}x{}]", self.ring.side, self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<&[u32]> = (0..self.cols).map(|c| self.entry(r, c)).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl RMatrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        RMatrix { ring: ring.clone(), rows, cols, data: vec![0; rows * cols * ring.dim()] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        let u = ring.unit().to_vec();
        for i in 0..n {
            m.set_entry(i, i, &u);
        }
        m
    }

    pub fn from_entries(ring: &Ring, rows: usize, cols: usize, entries: &[Vec<u32>]) -> Result<Self> {
        let d = ring.dim();
        if entries.len() != rows * cols || entries.iter().any(|e| e.len() != d) {
            return Err(Error::DimensionMismatch(format!("expected {rows}x{cols} entries of length {d}")));
        }
        let p = ring.p();
        let data = entries.iter().flat_map(|e| e.iter().map(move |&x| x % p)).collect();
        Ok(RMatrix { ring: ring.clone(), rows, cols, data })
    }

    /// Matrix whose c-th column is the element `columns[c]` of R^rows.
    pub fn from_columns(ring: &Ring, rows: usize, columns: &[Vec<u32>]) -> Self {
        let d = ring.dim();
        let mut m = Self::zeros(ring, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows * d, "column has wrong length");
            for r in 0..rows {
                m.set_entry(r, c, &col[r * d..(r + 1) * d]);
            }
        }
        m
    }

    /// Reads the R-linear map R^cols → R^rows off a realized matrix, using the
    /// images of the unit generators.
    pub fn from_realized(ring: &Ring, rows: usize, cols: usize, real: &KMatrix) -> Self {
        let cols_vec: Vec<Vec<u32>> = (0..cols).map(|c| real.mul_vec(&ring.unit_in_slot(cols, c))).collect();
        Self::from_columns(ring, rows, &cols_vec)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &[u32] {
        let d = self.ring.dim();
        let o = (r * self.cols + c) * d;
        &self.data[o..o + d]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, a: &[u32]) {
        let d = self.ring.dim();
        assert_eq!(a.len(), d);
        let o = (r * self.cols + c) * d;
        self.data[o..o + d].copy_from_slice(a);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Column c as an element of R^rows.
    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).flat_map(|r| self.entry(r, c).to_vec()).collect()
    }

    /// The F_p-matrix of the map R^cols → R^rows.
    pub fn realize(&self) -> KMatrix {
        let d = self.ring.dim();
        let alg = self.ring.algebra();
        let mut out = KMatrix::zeros(self.ring.p(), self.rows * d, self.cols * d);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.entry(r, c);
                if e.iter().any(|&x| x != 0) {
                    out.set_block(r * d, c * d, &alg.left_matrix(e));
                }
            }
        }
        out
    }

    fn check_ring(&self, other: &RMatrix) {
        assert!(self.ring == other.ring, "matrices over different rings");
    }

    /// Composition self ∘ other.
    pub fn mul(&self, other: &RMatrix) -> RMatrix {
        self.check_ring(other);
        assert_eq!(self.cols, other.rows, "composition shape mismatch");
        let alg = self.ring.algebra();
        let f = alg.field();
        let d = alg.dim();
        let mut out = RMatrix::zeros(&self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a.iter().all(|&x| x == 0) {
                    continue;
                }
                let la = alg.left_matrix(a);
                for c in 0..other.cols {
                    let b = other.entry(k, c);
                    if b.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let prod = la.mul_vec(b);
                    let o = (r * other.cols + c) * d;
                    for t in 0..d {
                        out.data[o + t] = f.add(out.data[o + t], prod[t]);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RMatrix) -> RMatrix {
        self.check_ring(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sum shape mismatch");
        let f = self.ring.algebra().field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        RMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &RMatrix) -> RMatrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RMatrix {
        let f = self.ring.algebra().field();
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        RMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// The dual map: transpose the matrix and pass to the opposite ring.
    pub fn transpose(&self) -> RMatrix {
        let mut out = RMatrix::zeros(&self.ring.op(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set_entry(c, r, self.entry(r, c));
            }
        }
        out
    }

    /// Same entries read over the opposite ring, without transposing.
    pub fn reinterpret_op(&self) -> RMatrix {
        RMatrix { ring: self.ring.op(), rows: self.rows, cols: self.cols, data: self.data.clone() }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> RMatrix {
        let mut out = RMatrix::zeros(&self.ring, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set_entry(r, c, self.entry(r0 + r, c0 + c));
            }
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &RMatrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set_entry(r0 + r, c0 + c, b.entry(r, c));
            }
        }
    }

    /// Block matrix [[a, b], [c, d]] given the row/column sizes of the blocks.
    pub fn block2(ring: &Ring, rows: (usize, usize), cols: (usize, usize), blocks: [Option<&RMatrix>; 4]) -> RMatrix {
        let mut out = RMatrix::zeros(ring, rows.0 + rows.1, cols.0 + cols.1);
        let origins = [(0, 0), (0, cols.0), (rows.0, 0), (rows.0, cols.0)];
        let shapes = [(rows.0, cols.0), (rows.0, cols.1), (rows.1, cols.0), (rows.1, cols.1)];
        for ((b, o), s) in blocks.iter().zip(origins).zip(shapes) {
            if let Some(b) = b {
                assert_eq!((b.rows, b.cols), s, "block shape mismatch");
                out.set_block(o.0, o.1, b);
            }
        }
        out
    }

    pub fn hstack(&self, other: &RMatrix) -> RMatrix {
        assert_eq!(self.rows, other.rows);
        RMatrix::block2(&self.ring, (self.rows, 0), (self.cols, other.cols), [Some(self), Some(other), None, None])
    }

    pub fn vstack(&self, other: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, other.cols);
        RMatrix::block2(&self.ring, (self.rows, other.rows), (self.cols, 0), [Some(self), None, Some(other), None])
    }

    pub fn block_diag(ring: &Ring, a: &RMatrix, b: &RMatrix) -> RMatrix {
        RMatrix::block2(ring, (a.rows, b.rows), (a.cols, b.cols), [Some(a), None, None, Some(b)])
    }

    pub fn raw_data(&self) -> &[u32] {
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_algebras_construct() {
        for a in [
            Algebra::truncated_polynomial(2, 2).unwrap(),
            Algebra::truncated_polynomial(3, 3).unwrap(),
            Algebra::upper_triangular(2).unwrap(),
            Algebra::local_radical_square_zero(2).unwrap(),
            Algebra::exterior(2).unwrap(),
            Algebra::exterior(3).unwrap(),
        ] {
            assert_eq!(a.opposite().opposite(), a);
        }
    }

    #[test]
    fn opposite_of_commutative_is_itself() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        assert_eq!(a.opposite(), a);
        assert!(a.is_commutative());
    }

    #[test]
    fn opposite_of_upper_triangular_transposes_table() {
        let a = Algebra::upper_triangular(2).unwrap();
        let op = a.opposite();
        // In the opposite algebra e12 * e11 = e11 e12 = e12 and e11 * e12 = 0.
        assert_eq!(op.basis_product(1, 0), vec![0, 1, 0]);
        assert_eq!(op.basis_product(0, 1), vec![0, 0, 0]);
        assert_eq!(op.basis_product(2, 1), vec![0, 1, 0]);
    }

    #[test]
    fn non_associative_table_is_rejected() {
        let field = FieldSpec::new(2).unwrap();
        let a = Algebra::upper_triangular(2).unwrap();
        let mut mult: Vec<Vec<Vec<u32>>> = (0..3).map(|i| (0..3).map(|j| a.basis_product(i, j)).collect()).collect();
        mult[1][2] = vec![0, 0, 0];
        mult[1][2][0] = 1; // e12 e22 = e11 breaks associativity
        let err = Algebra::new(field, mult, vec![1, 0, 1]).unwrap_err();
        assert!(matches!(err, Error::NonAssociative { .. }));
    }

    #[test]
    fn transpose_reverses_composition() {
        let ring = Ring::new(Algebra::upper_triangular(2).unwrap());
        let a = RMatrix::from_entries(&ring, 1, 2, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let b = RMatrix::from_entries(&ring, 2, 1, &[vec![0, 1, 1], vec![1, 0, 0]]).unwrap();
        let ab = a.mul(&b);
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()));
        assert_eq!(a.realize().mul(&b.realize()), ab.realize());
    }
}
