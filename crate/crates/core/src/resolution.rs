//! Free resolutions, Ext and Tor, and the horseshoe construction.

use crate::algebra::{RMatrix, Ring};
use crate::error::{Error, Result};
use crate::kcomplex::KComplex;
use crate::linalg::{KMatrix, LinearSolver};
use crate::module::{hom_condition_matrix, tensor_matrix, FPModule, ModuleHom};

/// A free resolution … → F_2 → F_1 → F_0 → M → 0 truncated after `len()`
/// differentials.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    /// Ranks g_0, …, g_len.
    pub ranks: Vec<usize>,
    /// d_k : F_k → F_{k-1} for k = 1, …, len, stored at index k - 1.
    pub diffs: Vec<RMatrix>,
    /// dim M × (g_0·d) matrix of F_0 → M.
    pub augmentation: KMatrix,
    tail: Option<(FPModule, KMatrix)>,
}

impl Resolution {
    pub fn new(m: &FPModule, len: usize) -> Self {
        let cover = m.free_cover();
        let res = Resolution {
            ring: m.ring().clone(),
            ranks: vec![cover.rank],
            diffs: Vec::new(),
            augmentation: cover.map,
            tail: Some((cover.kernel, cover.embedding)),
        };
        res.extended(len)
    }

    /// A copy with at least `len` differentials.
    pub fn extended(&self, len: usize) -> Self {
        let mut out = self.clone();
        while out.diffs.len() < len {
            let (kernel, embedding) = out.tail.take().expect("resolution cannot be extended");
            let cover = kernel.free_cover();
            let prev = *out.ranks.last().expect("nonempty");
            let d = RMatrix::from_realized(&out.ring, prev, cover.rank, &embedding.mul(&cover.map));
            out.diffs.push(d);
            out.ranks.push(cover.rank);
            out.tail = Some((cover.kernel, cover.embedding));
        }
        out
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    /// d_k, with d_0 read as the zero map to F_{-1} = 0.
    pub fn diff(&self, k: usize) -> &RMatrix {
        &self.diffs[k - 1]
    }

    /// Hom(F, N) as a cochain complex in degrees 0..=len.
    pub fn hom_complex(&self, n: &FPModule) -> KComplex {
        let nd = n.dim();
        let dims = self.ranks.iter().map(|g| g * nd).collect();
        let diffs = self.diffs.iter().map(|d| hom_condition_matrix(d, n)).collect();
        KComplex::new_unchecked(n.p(), 0, dims, diffs)
    }

    /// F ⊗ N as a cochain complex in degrees -len..=0, for N over the opposite ring.
    pub fn tensor_complex(&self, n: &FPModule) -> KComplex {
        let nd = n.dim();
        let dims = self.ranks.iter().rev().map(|g| g * nd).collect();
        let diffs = self.diffs.iter().rev().map(|d| tensor_matrix(d, n)).collect();
        KComplex::new_unchecked(n.p(), -(self.len() as i64), dims, diffs)
    }
}

fn check_same_ring(m: &FPModule, n: &FPModule) -> Result<()> {
    if m.ring() != n.ring() {
        return Err(Error::SideMismatch("Ext needs modules over the same ring".into()));
    }
    Ok(())
}

/// dim Ext^j(M, N).
pub fn ext_dim(m: &FPModule, j: usize, n: &FPModule) -> Result<usize> {
    check_same_ring(m, n)?;
    if n.is_zero() || m.is_zero() {
        return Ok(0);
    }
    if let Some(shortcut) = local_reduction(m, j, |s, j| ext_dim(s, j, n)) {
        return shortcut;
    }
    let res = m.resolution(j + 1);
    let nd = n.dim();
    let out = hom_condition_matrix(res.diff(j + 1), n).rank();
    let inc = if j == 0 { 0 } else { hom_condition_matrix(res.diff(j), n).rank() };
    Ok(res.ranks[j] * nd - out - inc)
}

/// Exact reductions over a local ring that keep resolutions small: S^m
/// contributes m times the simple module, and degree j ≥ 2 shifts to Ω M.
fn local_reduction(m: &FPModule, j: usize, f: impl Fn(&FPModule, usize) -> Result<usize>) -> Option<Result<usize>> {
    m.ring().algebra().local_radical()?;
    if let Some((s, mult)) = m.semisimple_over_local() {
        if mult > 1 {
            return Some(f(&s, j).map(|v| v * mult));
        }
        return None;
    }
    if j >= 2 {
        return Some(f(&m.syzygy(), j - 1));
    }
    None
}

/// dim Ext^j(M, R) with R the regular module.
pub fn ext_regular_dim(m: &FPModule, j: usize) -> usize {
    let r = FPModule::free(m.ring(), 1);
    ext_dim(m, j, &r).expect("same ring")
}

/// dim Tor_j(M, N) for M over R and N over the opposite ring.
pub fn tor_dim(m: &FPModule, j: usize, n: &FPModule) -> Result<usize> {
    if m.ring().op() != *n.ring() {
        return Err(Error::SideMismatch("Tor needs the second module over the opposite ring".into()));
    }
    if n.is_zero() || m.is_zero() {
        return Ok(0);
    }
    if let Some(shortcut) = local_reduction(m, j, |s, j| tor_dim(s, j, n)) {
        return shortcut;
    }
    let res = m.resolution(j + 1);
    let nd = n.dim();
    let out = if j == 0 { 0 } else { tensor_matrix(res.diff(j), n).rank() };
    let inc = tensor_matrix(res.diff(j + 1), n).rank();
    Ok(res.ranks[j] * nd - out - inc)
}

/// A resolution of B built from resolutions of A and C for 0 → A → B → C → 0.
#[derive(Clone, Debug)]
pub struct Horseshoe {
    pub sub: Resolution,
    pub quotient: Resolution,
    /// Degree k is F_k ⊕ G_k with differential [[d_F, τ], [0, d_G]].
    pub middle: Resolution,
}

impl Horseshoe {
    pub fn new(iota: &ModuleHom, pi: &ModuleHom, len: usize) -> Result<Self> {
        let a = iota.source();
        let b = iota.target();
        let c = pi.target();
        let ring = b.ring().clone();
        let fa = (*a.resolution(len)).clone();
        let gc = (*c.resolution(len)).clone();
        let inconsistent = |what: &str| Error::InternalInconsistency(format!("horseshoe: {what}"));

        let pi_solver = LinearSolver::new(pi.matrix());
        let lifts: Vec<Vec<u32>> = (0..gc.ranks[0])
            .map(|r| {
                let x = gc.augmentation.mul_vec(&ring.unit_in_slot(gc.ranks[0], r));
                pi_solver.solve(&x).ok_or_else(|| inconsistent("quotient map is not surjective"))
            })
            .collect::<Result<_>>()?;
        let lambda = b.map_from_free(&lifts);
        let aug = iota.matrix().mul(&fa.augmentation).hstack(&lambda);

        let iota_solver = LinearSolver::new(iota.matrix());
        let eps_a_solver = LinearSolver::new(&fa.augmentation);
        let mut ranks = Vec::new();
        let mut diffs = Vec::new();
        let mut prev_tau: Option<RMatrix> = None;
        for k in 0..=len {
            ranks.push(fa.ranks[k] + gc.ranks[k]);
            if k == 0 {
                continue;
            }
            let dg = gc.diff(k);
            let df = fa.diff(k);
            let mut cols = Vec::with_capacity(gc.ranks[k]);
            for r in 0..gc.ranks[k] {
                let col = dg.column(r);
                let x = if k == 1 {
                    let v = lambda.mul_vec(&col);
                    let v: Vec<u32> = v.iter().map(|&e| ring.algebra().field().neg(e)).collect();
                    let a_el = iota_solver.solve(&v).ok_or_else(|| inconsistent("lift through the inclusion"))?;
                    eps_a_solver.solve(&a_el).ok_or_else(|| inconsistent("lift through the augmentation"))?
                } else {
                    let tau: &RMatrix = prev_tau.as_ref().expect("set for k > 1");
                    let v = tau.realize().mul_vec(&col);
                    let v: Vec<u32> = v.iter().map(|&e| ring.algebra().field().neg(e)).collect();
                    LinearSolver::new(&fa.diff(k - 1).realize()).solve(&v).ok_or_else(|| inconsistent("lift through the differential"))?
                };
                cols.push(x);
            }
            let tau = RMatrix::from_columns(&ring, fa.ranks[k - 1], &cols);
            let zero = RMatrix::zeros(&ring, gc.ranks[k - 1], fa.ranks[k]);
            let d = RMatrix::block2(
                &ring,
                (fa.ranks[k - 1], gc.ranks[k - 1]),
                (fa.ranks[k], gc.ranks[k]),
                [Some(df), Some(&tau), Some(&zero), Some(dg)],
            );
            diffs.push(d);
            prev_tau = Some(tau);
        }
        let middle = Resolution { ring, ranks, diffs, augmentation: aug, tail: None };
        Ok(Horseshoe { sub: fa, quotient: gc, middle })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    fn ring(alg: Algebra) -> Ring {
        Ring::new(alg)
    }

    fn residue(ring: &Ring, rad: &[Vec<u32>]) -> FPModule {
        let p = RMatrix::from_entries(ring, 1, rad.len(), rad).unwrap();
        FPModule::cokernel(&p)
    }

    #[test]
    fn ext_of_residue_field_over_dual_numbers() {
        let r = ring(Algebra::truncated_polynomial(2, 2).unwrap());
        let k = residue(&r, &[vec![0, 1]]);
        for j in 0..5 {
            assert_eq!(ext_dim(&k, j, &k).unwrap(), 1);
            assert_eq!(ext_regular_dim(&k, j), if j == 0 { 1 } else { 0 });
        }
        let kop = k.reinterpret_op();
        assert_eq!(tor_dim(&k, 3, &kop).unwrap(), 1);
        assert!(tor_dim(&k, 1, &k).is_err());
    }

    #[test]
    fn ext_over_radical_square_zero_grows() {
        let r = ring(Algebra::local_radical_square_zero(2).unwrap());
        let k = residue(&r, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(ext_dim(&k, 0, &k).unwrap(), 1);
        assert_eq!(ext_dim(&k, 1, &k).unwrap(), 2);
        assert_eq!(ext_dim(&k, 2, &k).unwrap(), 4);
    }

    #[test]
    fn horseshoe_resolves_the_middle_term() {
        let r = ring(Algebra::truncated_polynomial(3, 3).unwrap());
        // 0 → (x²)/(0) → R/(x³)=R → R/(x²) → 0.
        let big = FPModule::free(&r, 1);
        let quotient_p = RMatrix::from_entries(&r, 1, 1, &[vec![0, 0, 1]]).unwrap();
        let c = FPModule::cokernel(&quotient_p);
        let pi = ModuleHom::new(&big, &c, c.presentation().projection.clone()).unwrap();
        let (a, emb) = {
            let ker = crate::linalg::kernel_basis(pi.matrix());
            big.submodule(&ker)
        };
        let iota = ModuleHom::new(&a, &big, emb).unwrap();
        let h = Horseshoe::new(&iota, &pi, 3).unwrap();
        let cx = h.middle.hom_complex(&big);
        for k in 0..h.middle.len() - 1 {
            let d0 = h.middle.diff(k + 1).mul(h.middle.diff(k + 2));
            assert!(d0.is_zero());
            assert_eq!(cx.cohomology_dim(k as i64 + 1), 0);
        }
        assert!(h.middle.augmentation.mul(&h.middle.diff(1).realize()).is_zero());
        assert_eq!(h.middle.augmentation.rank(), 3);
    }

    /// Ext and Tor read straight off a resolution of M, without reductions.
    fn direct_dims(m: &FPModule, j: usize, n: &FPModule, n_op: &FPModule) -> (usize, usize) {
        let res = Resolution::new(m, j + 1);
        let out = hom_condition_matrix(res.diff(j + 1), n).rank();
        let inc = if j == 0 { 0 } else { hom_condition_matrix(res.diff(j), n).rank() };
        let ext = res.ranks[j] * n.dim() - out - inc;
        let out = if j == 0 { 0 } else { tensor_matrix(res.diff(j), n_op).rank() };
        let inc = tensor_matrix(res.diff(j + 1), n_op).rank();
        (ext, res.ranks[j] * n_op.dim() - out - inc)
    }

    #[test]
    fn local_reductions_match_direct_resolutions() {
        let r = ring(Algebra::local_radical_square_zero(2).unwrap());
        let k = residue(&r, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let mod_x = residue(&r, &[vec![0, 1, 0]]);
        let targets = [FPModule::free(&r, 1), k.clone(), mod_x.clone()];
        for m in [k.direct_sum(&k).direct_sum(&k), mod_x.direct_sum(&k), FPModule::free(&r, 1).direct_sum(&mod_x)] {
            for n in &targets {
                let n_op = n.reinterpret_op();
                for j in 0..4 {
                    let direct = direct_dims(&m, j, n, &n_op);
                    assert_eq!((ext_dim(&m, j, n).unwrap(), tor_dim(&m, j, &n_op).unwrap()), direct, "j = {j}");
                }
            }
        }
    }
}
