//! Finitely presented right modules realized as F_p-spaces with action
//! matrices, homomorphisms, Hom spaces, duals and projectivity.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{RMatrix, Ring};
use crate::error::{Error, Result};
use crate::linalg::{image_basis, kernel_basis, quotient, EchelonBasis, KMatrix, LinearSolver, SubQuotient, Subspace};
use crate::resolution::Resolution;

/// A finite free presentation R^m → R^n → M → 0 together with the F_p-linear
/// projection R^n → M and a section of it.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub matrix: RMatrix,
    pub projection: KMatrix,
    pub section: KMatrix,
}

struct ModuleData {
    ring: Ring,
    dim: usize,
    action: Vec<KMatrix>,
    // Candidate generators fixed at construction so that greedy choices do not
    // depend on evaluation order.
    seed_generators: Vec<Vec<u32>>,
    presentation: OnceLock<Presentation>,
    generators: OnceLock<Vec<Vec<u32>>>,
    transpose: OnceLock<FPModule>,
    syzygy: OnceLock<FPModule>,
    resolution: Mutex<Option<Arc<Resolution>>>,
}

/// A finitely generated right module over a [`Ring`], stored as an F_p-space
/// with one action matrix per basis element of the algebra (x·e_j = A_j x).
#[derive(Clone)]
pub struct FPModule {
    data: Arc<ModuleData>,
}

impl fmt::Debug for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FPModule({:?}, dim {})", self.ring().side(), self.dim())
    }
}

impl FPModule {
    fn build(ring: &Ring, dim: usize, action: Vec<KMatrix>, seeds: Vec<Vec<u32>>, pres: Option<Presentation>) -> Self {
        let presentation = OnceLock::new();
        if let Some(p) = pres {
            let _ = presentation.set(p);
        }
        FPModule {
            data: Arc::new(ModuleData {
                ring: ring.clone(),
                dim,
                action,
                seed_generators: seeds,
                presentation,
                generators: OnceLock::new(),
                transpose: OnceLock::new(),
                syzygy: OnceLock::new(),
                resolution: Mutex::new(None),
            }),
        }
    }

    /// The cokernel of `p`, viewed as a map of free modules.
    pub fn cokernel(p: &RMatrix) -> Self {
        let ring = p.ring();
        let n = p.rows();
        let d = ring.dim();
        let rel = image_basis(&p.realize());
        let (proj, sec) = quotient(n * d, &rel).expect("shapes agree");
        let action = (0..d).map(|j| proj.mul(&ring.free_action(n, j)).mul(&sec)).collect();
        let seeds = (0..n).map(|r| proj.mul_vec(&ring.unit_in_slot(n, r))).collect();
        let pres = Presentation { matrix: p.clone(), projection: proj.clone(), section: sec };
        Self::build(ring, proj.rows(), action, seeds, Some(pres))
    }

    pub fn free(ring: &Ring, n: usize) -> Self {
        Self::cokernel(&RMatrix::zeros(ring, n, 0))
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::free(ring, 0)
    }

    /// A module given directly by action matrices; the module axioms are checked.
    pub fn from_action(ring: &Ring, dim: usize, action: Vec<KMatrix>) -> Result<Self> {
        let alg = ring.algebra();
        let d = alg.dim();
        if action.len() != d || action.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("need {d} action matrices of size {dim}x{dim}")));
        }
        let comb = |v: &[u32]| -> KMatrix {
            let mut out = KMatrix::zeros(ring.p(), dim, dim);
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    out = out.add(&action[k].scale(c));
                }
            }
            out
        };
        if comb(ring.unit()) != KMatrix::identity(ring.p(), dim) {
            return Err(Error::PreconditionViolated("unit does not act as the identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                if comb(&alg.basis_product(i, j)) != action[j].mul(&action[i]) {
                    return Err(Error::PreconditionViolated(format!("action fails (x e_{i}) e_{j} = x (e_{i} e_{j})")));
                }
            }
        }
        Ok(Self::from_action_unchecked(ring, dim, action))
    }

    pub(crate) fn from_action_unchecked(ring: &Ring, dim: usize, action: Vec<KMatrix>) -> Self {
        let seeds = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect();
        Self::build(ring, dim, action, seeds, None)
    }

    /// The submodule spanned (over F_p) by the columns of `sub`, which must be
    /// closed under the action. Returns the module and its embedding matrix.
    pub fn submodule(&self, sub: &Subspace) -> (FPModule, KMatrix) {
        let basis = sub.basis().clone();
        let coords = LinearSolver::new(&basis).solution_matrix();
        let action = self.data.action.iter().map(|a| coords.mul(&a.mul(&basis))).collect();
        (Self::from_action_unchecked(self.ring(), sub.dim(), action), basis)
    }

    /// The subquotient sub/rel of this module (both must be submodules).
    pub fn subquotient(&self, sub: &Subspace, rel: &Subspace) -> (FPModule, SubQuotient) {
        let sq = SubQuotient::new(sub, rel);
        let action = self.data.action.iter().map(|a| sq.induced(a, &sq)).collect();
        (Self::from_action_unchecked(self.ring(), sq.dim(), action), sq)
    }

    /// The quotient by a submodule, with the projection matrix.
    pub fn quotient(&self, rel: &Subspace) -> (FPModule, KMatrix) {
        let (m, sq) = self.subquotient(&Subspace::full(self.p(), self.dim()), rel);
        let proj = sq.class_matrix();
        (m, proj)
    }

    pub fn ring(&self) -> &Ring {
        &self.data.ring
    }

    pub fn p(&self) -> u32 {
        self.data.ring.p()
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn is_zero(&self) -> bool {
        self.data.dim == 0
    }

    pub fn action(&self, j: usize) -> &KMatrix {
        &self.data.action[j]
    }

    pub fn actions(&self) -> &[KMatrix] {
        &self.data.action
    }

    /// Matrix of x ↦ x·a.
    pub fn act_by(&self, a: &[u32]) -> KMatrix {
        let mut out = KMatrix::zeros(self.p(), self.dim(), self.dim());
        for (k, &c) in a.iter().enumerate() {
            if c != 0 {
                out = out.add(&self.data.action[k].scale(c));
            }
        }
        out
    }

    /// The submodule generated by the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vec<u32>]) -> Subspace {
        let mut cols = Vec::with_capacity(vectors.len() * self.data.action.len());
        for v in vectors {
            for a in &self.data.action {
                cols.push(a.mul_vec(v));
            }
        }
        Subspace::span_of(self.p(), self.dim(), &cols)
    }

    /// Generators chosen greedily, after which any generator lying in the
    /// submodule generated by the others is dropped.
    pub fn minimal_generators(&self) -> &[Vec<u32>] {
        self.data.generators.get_or_init(|| {
            let dim = self.dim();
            let p = self.p();
            let basis = (0..dim).map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            });
            let candidates: Vec<Vec<u32>> = self.data.seed_generators.iter().cloned().chain(basis).collect();
            // Over a local ring, elements generate iff they generate M/JM, and
            // a greedy choice modulo JM is minimal.
            let radical = self.ring().algebra().local_radical();
            let mut span = EchelonBasis::new(p, dim);
            if let Some(radical) = radical {
                for a in radical {
                    let act = self.act_by(a);
                    for c in 0..dim {
                        span.insert(&act.column(c));
                    }
                }
            }
            let mut gens: Vec<Vec<u32>> = Vec::new();
            let mut cyclic: Vec<Vec<Vec<u32>>> = Vec::new();
            for c in candidates {
                if span.dim() == dim {
                    break;
                }
                if !span.contains(&c) {
                    let orbit: Vec<Vec<u32>> = self.data.action.iter().map(|a| a.mul_vec(&c)).collect();
                    for v in &orbit {
                        span.insert(v);
                    }
                    gens.push(c);
                    cyclic.push(orbit);
                }
            }
            if radical.is_some() {
                return gens;
            }
            let mut i = gens.len();
            while i > 0 {
                i -= 1;
                let mut others = EchelonBasis::new(p, dim);
                for v in cyclic.iter().enumerate().filter(|&(k, _)| k != i).flat_map(|(_, o)| o.iter()) {
                    others.insert(v);
                }
                if others.contains(&gens[i]) {
                    gens.remove(i);
                    cyclic.remove(i);
                }
            }
            gens
        })
    }

    /// Matrix of the R-linear map R^g → M sending the unit generators to `values`.
    pub fn map_from_free(&self, values: &[Vec<u32>]) -> KMatrix {
        let d = self.ring().dim();
        let mut cols = Vec::with_capacity(values.len() * d);
        for v in values {
            for a in &self.data.action {
                cols.push(a.mul_vec(v));
            }
        }
        KMatrix::from_columns(self.p(), self.dim(), &cols)
    }

    pub fn presentation(&self) -> &Presentation {
        self.data.presentation.get_or_init(|| {
            let cover = self.free_cover();
            let matrix = cover.kernel_generators_matrix();
            let section = LinearSolver::new(&cover.map).solution_matrix();
            Presentation { matrix, projection: cover.map, section }
        })
    }

    /// Cover by the free module on [`Self::minimal_generators`], with its kernel.
    pub fn free_cover(&self) -> FreeCover {
        let gens = self.minimal_generators().to_vec();
        let g = gens.len();
        let map = self.map_from_free(&gens);
        let ker = kernel_basis(&map);
        let free = FPModule::free(self.ring(), g);
        let (kernel, embedding) = free.submodule(&ker);
        FreeCover { ring: self.ring().clone(), rank: g, map, kernel, embedding }
    }

    /// Ω M: the kernel of the free cover.
    pub fn syzygy(&self) -> FPModule {
        self.data.syzygy.get_or_init(|| self.free_cover().kernel).clone()
    }

    /// For M with J M = 0 over a local ring: the simple module S and the
    /// multiplicity m with M ≅ S^m.
    pub fn semisimple_over_local(&self) -> Option<(FPModule, usize)> {
        let radical = self.ring().algebra().local_radical()?;
        if self.is_zero() || radical.iter().any(|a| !self.act_by(a).is_zero()) {
            return None;
        }
        let s = simple_of_local(self.ring(), radical);
        debug_assert_eq!(self.dim() % s.dim(), 0);
        Some((s.clone(), self.dim() / s.dim()))
    }

    /// Tr M: the cokernel of the transposed presentation matrix, over the opposite ring.
    pub fn transpose(&self) -> &FPModule {
        self.data.transpose.get_or_init(|| FPModule::cokernel(&self.presentation().matrix.transpose()))
    }

    /// The same presentation matrix read over the opposite ring.
    pub fn reinterpret_op(&self) -> FPModule {
        FPModule::cokernel(&self.presentation().matrix.reinterpret_op())
    }

    pub fn direct_sum(&self, other: &FPModule) -> FPModule {
        assert!(self.ring() == other.ring(), "direct sum over different rings");
        let p = self.presentation().matrix.clone();
        let q = other.presentation().matrix.clone();
        FPModule::cokernel(&RMatrix::block_diag(self.ring(), &p, &q))
    }

    /// Cached free resolution with at least `len` differentials.
    pub fn resolution(&self, len: usize) -> Arc<Resolution> {
        let mut guard = self.data.resolution.lock().expect("resolution cache poisoned");
        if let Some(r) = guard.as_ref() {
            if r.len() >= len {
                return r.clone();
            }
        }
        let r = Arc::new(match guard.take() {
            Some(prev) => prev.extended(len),
            None => Resolution::new(self, len),
        });
        *guard = Some(r.clone());
        r
    }
}

/// R/J for a local ring, cached per ring so that its resolution is shared.
fn simple_of_local(ring: &Ring, radical: &[Vec<u32>]) -> FPModule {
    static CACHE: Mutex<Vec<(Ring, FPModule)>> = Mutex::new(Vec::new());
    let mut cache = CACHE.lock().expect("simple module cache poisoned");
    if let Some((_, s)) = cache.iter().find(|(r, _)| r == ring) {
        return s.clone();
    }
    let s = FPModule::cokernel(&RMatrix::from_columns(ring, 1, radical));
    cache.push((ring.clone(), s.clone()));
    s
}

/// A surjection R^g → M on chosen generators together with its kernel.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub ring: Ring,
    pub rank: usize,
    /// dim M × (g·d) matrix of the surjection.
    pub map: KMatrix,
    pub kernel: FPModule,
    /// (g·d) × dim K matrix embedding the kernel into R^g.
    pub embedding: KMatrix,
}

impl FreeCover {
    /// Generators of the kernel as the columns of a matrix over R.
    pub fn kernel_generators_matrix(&self) -> RMatrix {
        let cols: Vec<Vec<u32>> = self.kernel.minimal_generators().iter().map(|v| self.embedding.mul_vec(v)).collect();
        RMatrix::from_columns(&self.ring, self.rank, &cols)
    }
}

/// An R-linear map of modules, stored as an F_p-matrix on realizations.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    source: FPModule,
    target: FPModule,
    matrix: KMatrix,
}

impl ModuleHom {
    pub fn new(source: &FPModule, target: &FPModule, matrix: KMatrix) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::SideMismatch("homomorphism between modules over different rings".into()));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{}, modules have dimensions {} and {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        for j in 0..source.ring().dim() {
            if matrix.mul(source.action(j)) != target.action(j).mul(&matrix) {
                return Err(Error::NotLinear(j));
            }
        }
        Ok(Self::new_unchecked(source, target, matrix))
    }

    pub(crate) fn new_unchecked(source: &FPModule, target: &FPModule, matrix: KMatrix) -> Self {
        ModuleHom { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn matrix(&self) -> &KMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn kernel_dim(&self) -> usize {
        self.source.dim() - self.rank()
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ModuleHom) -> ModuleHom {
        ModuleHom::new_unchecked(&other.source, &self.target, self.matrix.mul(&other.matrix))
    }
}

/// An F_p-basis of Hom_R(M, N).
pub fn hom_space(m: &FPModule, n: &FPModule) -> Result<Vec<ModuleHom>> {
    if m.ring() != n.ring() {
        return Err(Error::SideMismatch("Hom between modules over different rings".into()));
    }
    Ok(hom_space_matrices(m, n).into_iter().map(|t| ModuleHom::new_unchecked(m, n, t)).collect())
}

/// Hom(coker P, N) = { y ∈ N^n : Σ_r y_r P_rc = 0 }, each y turned into its
/// matrix on realizations.
pub(crate) fn hom_space_matrices(m: &FPModule, n: &FPModule) -> Vec<KMatrix> {
    let pres = m.presentation();
    let ker = kernel_basis(&hom_condition_matrix(&pres.matrix, n));
    let nd = n.dim();
    ker.basis_vectors()
        .iter()
        .map(|y| {
            let values: Vec<Vec<u32>> = (0..pres.matrix.rows()).map(|r| y[r * nd..(r + 1) * nd].to_vec()).collect();
            n.map_from_free(&values).mul(&pres.section)
        })
        .collect()
}

/// The F_p-matrix of y ↦ (Σ_r y_r P_rc)_c from N^rows to N^cols.
pub(crate) fn hom_condition_matrix(p: &RMatrix, n: &FPModule) -> KMatrix {
    let nd = n.dim();
    let mut out = KMatrix::zeros(n.p(), p.cols() * nd, p.rows() * nd);
    for r in 0..p.rows() {
        for c in 0..p.cols() {
            let e = p.entry(r, c);
            if e.iter().any(|&x| x != 0) {
                out.set_block(c * nd, r * nd, &n.act_by(e));
            }
        }
    }
    out
}

/// The F_p-matrix of y ↦ (Σ_c P_rc·y_c)_r from N^cols to N^rows, for N over the opposite ring.
pub(crate) fn tensor_matrix(p: &RMatrix, n: &FPModule) -> KMatrix {
    let nd = n.dim();
    let mut out = KMatrix::zeros(n.p(), p.rows() * nd, p.cols() * nd);
    for r in 0..p.rows() {
        for c in 0..p.cols() {
            let e = p.entry(r, c);
            if e.iter().any(|&x| x != 0) {
                out.set_block(r * nd, c * nd, &n.act_by(e));
            }
        }
    }
    out
}

/// The dual M* = Hom(M, R) realized inside (R^op)^n, n = number of
/// presentation generators of M.
#[derive(Clone, Debug)]
pub struct DualModule {
    pub module: FPModule,
    /// Columns: basis of M* as vectors y ∈ R^n, y_r = f(generator r).
    pub basis: KMatrix,
    source: FPModule,
}

impl DualModule {
    /// The d × dim M matrix of the functional with M*-coordinates `v`.
    pub fn functional(&self, v: &[u32]) -> KMatrix {
        let y = self.basis.mul_vec(v);
        functional_from_values(&self.source, &y)
    }
}

/// The functional M → R whose values on the presentation generators are `y`.
pub(crate) fn functional_from_values(m: &FPModule, y: &[u32]) -> KMatrix {
    let ring = m.ring();
    let d = ring.dim();
    let pres = m.presentation();
    let alg = ring.algebra();
    let mut out = KMatrix::zeros(ring.p(), d, m.dim());
    for r in 0..pres.matrix.rows() {
        let yr = &y[r * d..(r + 1) * d];
        if yr.iter().all(|&x| x == 0) {
            continue;
        }
        out = out.add(&alg.left_matrix(yr).mul(&pres.section.block(r * d, 0, d, m.dim())));
    }
    out
}

pub fn dual_module(m: &FPModule) -> DualModule {
    let pres = m.presentation();
    let op = m.ring().op();
    let cond = pres.matrix.transpose().realize();
    let ker = kernel_basis(&cond);
    let free = FPModule::free(&op, pres.matrix.rows());
    let (module, basis) = free.submodule(&ker);
    DualModule { module, basis, source: m.clone() }
}

/// The evaluation map φ_M : M → M** with the double dual it lands in.
pub fn evaluation_map(m: &FPModule) -> (DualModule, DualModule, ModuleHom) {
    let dual = dual_module(m);
    let ddual = dual_module(&dual.module);
    let gens = dual.module.presentation();
    let s = gens.matrix.rows();
    let d = m.ring().dim();
    let mut stacked = KMatrix::zeros(m.p(), s * d, m.dim());
    for t in 0..s {
        let gen = gens.projection.mul_vec(&m.ring().op().unit_in_slot(s, t));
        stacked.set_block(t * d, 0, &dual.functional(&gen));
    }
    let coords = LinearSolver::new(&ddual.basis).solution_matrix();
    let phi = ModuleHom::new_unchecked(m, &ddual.module, coords.mul(&stacked));
    (dual, ddual, phi)
}

/// Conditions on y ∈ (R^g)^g, the images of the generators under a map
/// s : M → R^g: the relations of M on top, then π∘s on generators below.
fn splitting_system(m: &FPModule) -> (KMatrix, usize) {
    let pres = m.presentation();
    let g = pres.matrix.rows();
    let free = FPModule::free(m.ring(), g);
    let nd = free.dim();
    let cond = hom_condition_matrix(&pres.matrix, &free);
    let dim = m.dim();
    let mut sys = KMatrix::zeros(m.p(), cond.rows() + g * dim, g * nd);
    sys.set_block(0, 0, &cond);
    for r in 0..g {
        sys.set_block(cond.rows() + r * dim, r * nd, &pres.projection);
    }
    (sys, cond.rows())
}

/// Whether the free cover of M splits.
pub fn is_projective(m: &FPModule) -> bool {
    if m.is_zero() {
        return true;
    }
    if m.ring().algebra().is_local() == Some(true) {
        // Over a local ring an irredundant generating set is minimal, and
        // projective means free.
        return m.dim() == m.minimal_generators().len() * m.ring().dim();
    }
    let (sys, top) = splitting_system(m);
    let g = m.presentation().matrix.rows();
    let mut rhs = vec![0; top];
    for r in 0..g {
        rhs.extend(m.presentation().projection.mul_vec(&m.ring().unit_in_slot(g, r)));
    }
    LinearSolver::new(&sys).solve(&rhs).is_some()
}

/// dim End(M) minus the dimension of the endomorphisms factoring through a projective.
pub fn stable_endomorphism_dim(m: &FPModule) -> usize {
    if m.is_zero() {
        return 0;
    }
    let pres = m.presentation();
    let end = kernel_basis(&hom_condition_matrix(&pres.matrix, m)).dim();
    let (sys, top) = splitting_system(m);
    let homs_to_free = sys.cols() - sys.block(0, 0, top, sys.cols()).rank();
    let killed = sys.cols() - sys.rank();
    end - (homs_to_free - killed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    fn dual_numbers() -> Ring {
        Ring::new(Algebra::truncated_polynomial(2, 2).unwrap())
    }

    fn residue_field(ring: &Ring) -> FPModule {
        let x = RMatrix::from_entries(ring, 1, 1, &[vec![0, 1]]).unwrap();
        FPModule::cokernel(&x)
    }

    #[test]
    fn free_cover_of_residue_field() {
        let ring = dual_numbers();
        let k = residue_field(&ring);
        assert_eq!(k.dim(), 1);
        let c = k.free_cover();
        assert_eq!(c.rank, 1);
        assert_eq!(c.kernel.dim(), 1);
    }

    #[test]
    fn free_and_zero_covers() {
        let ring = dual_numbers();
        let c = FPModule::free(&ring, 1).free_cover();
        assert_eq!((c.rank, c.kernel.dim()), (1, 0));
        assert_eq!(FPModule::zero(&ring).free_cover().rank, 0);
    }

    #[test]
    fn hom_dimensions() {
        let ring = dual_numbers();
        let k = residue_field(&ring);
        let r = FPModule::free(&ring, 1);
        assert_eq!(hom_space(&r, &k).unwrap().len(), k.dim());
        assert_eq!(hom_space(&k, &r).unwrap().len(), 1);
        assert_eq!(hom_space(&k, &FPModule::zero(&ring)).unwrap().len(), 0);
        assert!(hom_space(&k, &k.transpose().clone()).is_err());
    }

    #[test]
    fn projectivity_examples() {
        let ring = dual_numbers();
        assert!(is_projective(&FPModule::free(&ring, 2)));
        assert!(!is_projective(&residue_field(&ring)));
        let ut = Ring::new(Algebra::upper_triangular(2).unwrap());
        // e11 R = coker of left multiplication by e22.
        let p1 = FPModule::cokernel(&RMatrix::from_entries(&ut, 1, 1, &[vec![0, 0, 1]]).unwrap());
        assert_eq!(p1.dim(), 2);
        assert!(is_projective(&p1));
    }

    #[test]
    fn evaluation_on_free_and_residue_field() {
        let ring = dual_numbers();
        let (_, _, phi) = evaluation_map(&FPModule::free(&ring, 2));
        assert!(phi.is_bijective());
        let k = residue_field(&ring);
        let (dual, _, phi) = evaluation_map(&k);
        assert_eq!(dual.module.dim(), 1);
        assert!(phi.is_injective());
    }

    #[test]
    fn from_action_rejects_bad_action() {
        let ring = dual_numbers();
        let id = KMatrix::identity(2, 1);
        assert!(FPModule::from_action(&ring, 1, vec![id.clone(), id]).is_err());
    }
}
