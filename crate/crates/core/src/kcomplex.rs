//! Bounded cochain complexes of F_p-spaces, connecting maps and exactness
//! checks for long sequences.

use crate::error::{Error, Result};
use crate::linalg::{image_basis, kernel_basis, KMatrix, LinearSolver, SubQuotient, Subspace};

/// A cochain complex of finite-dimensional F_p-spaces in degrees lo..=hi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KComplex {
    p: u32,
    lo: i64,
    dims: Vec<usize>,
    /// diffs[k] : degree lo + k → lo + k + 1.
    diffs: Vec<KMatrix>,
}

impl KComplex {
    pub fn new(p: u32, lo: i64, dims: Vec<usize>, diffs: Vec<KMatrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(Error::DimensionMismatch("need one differential between consecutive degrees".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != dims[k + 1] || d.cols() != dims[k] {
                return Err(Error::DimensionMismatch(format!("differential in degree {}", lo + k as i64)));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].mul(&diffs[k - 1]).is_zero() {
                let degree = lo + k as i64 - 1;
                return Err(Error::NotAComplex { degree, succ: degree + 1 });
            }
        }
        Ok(Self::new_unchecked(p, lo, dims, diffs))
    }

    pub(crate) fn new_unchecked(p: u32, lo: i64, dims: Vec<usize>, diffs: Vec<KMatrix>) -> Self {
        KComplex { p, lo, dims, diffs }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, i: i64) -> usize {
        if i < self.lo || i > self.hi() {
            0
        } else {
            self.dims[(i - self.lo) as usize]
        }
    }

    /// d^i, zero outside the stored window.
    pub fn diff(&self, i: i64) -> KMatrix {
        if i >= self.lo && i < self.hi() {
            self.diffs[(i - self.lo) as usize].clone()
        } else {
            KMatrix::zeros(self.p, self.dim(i + 1), self.dim(i))
        }
    }

    pub fn cocycles(&self, i: i64) -> Subspace {
        kernel_basis(&self.diff(i))
    }

    pub fn coboundaries(&self, i: i64) -> Subspace {
        image_basis(&self.diff(i - 1))
    }

    pub fn cohomology(&self, i: i64) -> SubQuotient {
        SubQuotient::new(&self.cocycles(i), &self.coboundaries(i))
    }

    pub fn cohomology_dim(&self, i: i64) -> usize {
        self.dim(i) - self.diff(i).rank() - self.diff(i - 1).rank()
    }
}

/// The connecting map H^i(C) → H^{i+1}(A) of a degreewise exact
/// 0 → A → B → C → 0, given ι^{i+1} and π^i.
pub fn connecting_map(a: &KComplex, b: &KComplex, c: &KComplex, iota_next: &KMatrix, pi: &KMatrix, i: i64) -> Result<KMatrix> {
    let hc = c.cohomology(i);
    let ha = a.cohomology(i + 1);
    let lift = LinearSolver::new(pi);
    let back = LinearSolver::new(iota_next);
    let db = b.diff(i);
    let mut cols = Vec::with_capacity(hc.dim());
    for t in 0..hc.dim() {
        let mut e = vec![0; hc.dim()];
        e[t] = 1;
        let z = hc.rep(&e);
        let y = lift.solve(&z).ok_or_else(|| Error::InternalInconsistency("connecting map: π not surjective".into()))?;
        let w = db.mul_vec(&y);
        let x = back.solve(&w).ok_or_else(|| Error::InternalInconsistency("connecting map: boundary not in the image of ι".into()))?;
        cols.push(ha.class_of(&x));
    }
    Ok(KMatrix::from_columns(a.p(), ha.dim(), &cols))
}

/// A finite sequence of F_p-spaces and maps between consecutive terms.
#[derive(Clone, Debug)]
pub struct LongSequence {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    /// maps[k] : term k → term k + 1.
    pub maps: Vec<KMatrix>,
}

impl LongSequence {
    pub fn new(label: impl Into<String>, dim: usize) -> Self {
        LongSequence { labels: vec![label.into()], dims: vec![dim], maps: Vec::new() }
    }

    pub fn push(&mut self, map: KMatrix, label: impl Into<String>, dim: usize) {
        debug_assert_eq!(map.cols(), *self.dims.last().expect("nonempty"));
        debug_assert_eq!(map.rows(), dim);
        self.maps.push(map);
        self.labels.push(label.into());
        self.dims.push(dim);
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Exactness at an interior term k: the composite vanishes and the ranks add up.
    pub fn is_exact_at(&self, k: usize) -> bool {
        assert!(k > 0 && k + 1 < self.len(), "not an interior term");
        let f = &self.maps[k - 1];
        let g = &self.maps[k];
        g.mul(f).is_zero() && f.rank() + g.rank() == self.dims[k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cohomology_of_small_complexes() {
        let d = KMatrix::from_rows(2, &[vec![1, 0], vec![0, 0]]);
        let c = KComplex::new(2, 0, vec![2, 2], vec![d]).unwrap();
        assert_eq!(c.cohomology_dim(0), 1);
        assert_eq!(c.cohomology_dim(1), 1);
        assert_eq!(c.cohomology_dim(5), 0);
        let bad = KComplex::new(2, 0, vec![1, 1, 1], vec![KMatrix::identity(2, 1), KMatrix::identity(2, 1)]);
        assert_eq!(bad.unwrap_err(), Error::NotAComplex { degree: 0, succ: 1 });
    }

    #[test]
    fn connecting_map_of_interval() {
        // 0 → F[1] → (F → F) → F → 0 with identity differential in the middle.
        let p = 3;
        let a = KComplex::new(p, 1, vec![1], vec![]).unwrap();
        let b = KComplex::new(p, 0, vec![1, 1], vec![KMatrix::identity(p, 1)]).unwrap();
        let c = KComplex::new(p, 0, vec![1], vec![]).unwrap();
        let delta = connecting_map(&a, &b, &c, &KMatrix::identity(p, 1), &KMatrix::identity(p, 1), 0).unwrap();
        assert_eq!(delta.rank(), 1);
    }
}
