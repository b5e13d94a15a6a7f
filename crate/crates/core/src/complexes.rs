//! Bounded complexes of finitely generated free modules, chain maps, cones,
//! cohomology, homotopies and cohomologically ghost triangles.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{RMatrix, Ring};
use crate::error::{Error, Result};
use crate::linalg::{image_basis, kernel_basis, KMatrix, LinearSolver, SubQuotient, Subspace};
use crate::module::{dual_module, is_projective, FPModule, ModuleHom};

/// Cohomological data of one degree, on the realization of X^i.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    pub degree: i64,
    pub cocycles: Subspace,
    pub boundaries: Subspace,
    /// Z^i / B^i with coordinates.
    pub quotient: SubQuotient,
    /// H^i as a module.
    pub h: FPModule,
    /// C^i = Coker d^{i-1} presented by d^{i-1}.
    pub c: FPModule,
}

struct Cache {
    lo: i64,
    slots: Vec<OnceLock<Arc<DegreeCohomology>>>,
}

/// A bounded complex X^lo → … → X^hi of free modules R^{r_i}.
#[derive(Clone)]
pub struct Complex {
    ring: Ring,
    lo: i64,
    ranks: Vec<usize>,
    /// diffs[k] = d^{lo+k} : X^{lo+k} → X^{lo+k+1}.
    diffs: Vec<RMatrix>,
    cache: Arc<Cache>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.lo == other.lo && self.ranks == other.ranks && self.diffs == other.diffs
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex({:?}, lo {}, ranks {:?})", self.ring.side(), self.lo, self.ranks)
    }
}

impl Complex {
    pub fn new(ring: &Ring, lo: i64, ranks: Vec<usize>, diffs: Vec<RMatrix>) -> Result<Self> {
        if ranks.is_empty() || diffs.len() + 1 != ranks.len() {
            return Err(Error::DimensionMismatch("need a nonempty window and one differential per step".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.ring() != ring {
                return Err(Error::SideMismatch(format!("differential in degree {} over another ring", lo + k as i64)));
            }
            if d.rows() != ranks[k + 1] || d.cols() != ranks[k] {
                return Err(Error::DimensionMismatch(format!(
                    "d^{} is {}x{}, expected {}x{}",
                    lo + k as i64,
                    d.rows(),
                    d.cols(),
                    ranks[k + 1],
                    ranks[k]
                )));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].mul(&diffs[k - 1]).is_zero() {
                let degree = lo + k as i64 - 1;
                return Err(Error::NotAComplex { degree, succ: degree + 1 });
            }
        }
        Ok(Self::new_unchecked(ring, lo, ranks, diffs))
    }

    pub(crate) fn new_unchecked(ring: &Ring, lo: i64, ranks: Vec<usize>, diffs: Vec<RMatrix>) -> Self {
        let slots = (0..ranks.len() + 2).map(|_| OnceLock::new()).collect();
        Complex { ring: ring.clone(), lo, ranks, diffs, cache: Arc::new(Cache { lo: lo - 1, slots }) }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new_unchecked(ring, 0, vec![0], Vec::new())
    }

    /// R^rank placed in a single degree.
    pub fn stalk(ring: &Ring, degree: i64, rank: usize) -> Self {
        Self::new_unchecked(ring, degree, vec![rank], Vec::new())
    }

    /// The two-term complex given by one differential d : X^lo → X^{lo+1}.
    pub fn two_term(d: &RMatrix, lo: i64) -> Self {
        Self::new_unchecked(d.ring(), lo, vec![d.cols(), d.rows()], vec![d.clone()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, i: i64) -> usize {
        if i < self.lo || i > self.hi() {
            0
        } else {
            self.ranks[(i - self.lo) as usize]
        }
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// d^i, zero outside the window.
    pub fn diff(&self, i: i64) -> RMatrix {
        if i >= self.lo && i < self.hi() {
            self.diffs[(i - self.lo) as usize].clone()
        } else {
            RMatrix::zeros(&self.ring, self.rank(i + 1), self.rank(i))
        }
    }

    /// Degrees of the window with one degree of padding on each side.
    pub fn padded_degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo - 1..=self.hi() + 1
    }

    /// X[n]^i = X^{n+i} with differential (-1)^n d^{n+i}.
    pub fn shift(&self, n: i64) -> Complex {
        let diffs = if n % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(|d| d.neg()).collect() };
        Self::new_unchecked(&self.ring, self.lo - n, self.ranks.clone(), diffs)
    }

    /// (X*)^i = (X^{-i})* with d^i = (d^{-i-1})^T, over the opposite ring.
    pub fn dual(&self) -> Complex {
        let ranks = self.ranks.iter().rev().cloned().collect();
        let diffs = self.diffs.iter().rev().map(|d| d.transpose()).collect();
        Self::new_unchecked(&self.ring.op(), -self.hi(), ranks, diffs)
    }

    /// Degreewise direct sum on the union of the windows.
    pub fn direct_sum(&self, other: &Complex) -> Complex {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let ranks = (lo..=hi).map(|i| self.rank(i) + other.rank(i)).collect();
        let diffs = (lo..hi).map(|i| RMatrix::block_diag(&self.ring, &self.diff(i), &other.diff(i))).collect();
        Self::new_unchecked(&self.ring, lo, ranks, diffs)
    }

    /// Drops zero-rank degrees at both ends of the window.
    pub fn trimmed(&self) -> Complex {
        let first = self.ranks.iter().position(|&r| r != 0);
        let Some(first) = first else {
            return Complex::zero(&self.ring);
        };
        let last = self.ranks.iter().rposition(|&r| r != 0).expect("nonempty");
        let lo = self.lo + first as i64;
        let hi = self.lo + last as i64;
        let ranks = (lo..=hi).map(|i| self.rank(i)).collect();
        let diffs = (lo..hi).map(|i| self.diff(i)).collect();
        Self::new_unchecked(&self.ring, lo, ranks, diffs)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    pub fn cohomology(&self, i: i64) -> Arc<DegreeCohomology> {
        let compute = || {
            let d = self.diff(i).realize();
            let prev = self.diff(i - 1);
            let cocycles = kernel_basis(&d);
            let boundaries = image_basis(&prev.realize());
            let free = FPModule::free(&self.ring, self.rank(i));
            let (h, quotient) = free.subquotient(&cocycles, &boundaries);
            let c = FPModule::cokernel(&prev);
            Arc::new(DegreeCohomology { degree: i, cocycles, boundaries, quotient, h, c })
        };
        let idx = i - self.cache.lo;
        if idx >= 0 && (idx as usize) < self.cache.slots.len() {
            self.cache.slots[idx as usize].get_or_init(compute).clone()
        } else {
            compute()
        }
    }

    /// H^i(X).
    pub fn h(&self, i: i64) -> FPModule {
        self.cohomology(i).h.clone()
    }

    /// C^i(X) = Coker d^{i-1}.
    pub fn c(&self, i: i64) -> FPModule {
        self.cohomology(i).c.clone()
    }

    /// Z^i(X) as a submodule of X^i.
    pub fn z(&self, i: i64) -> FPModule {
        let data = self.cohomology(i);
        FPModule::free(&self.ring, self.rank(i)).submodule(&data.cocycles).0
    }

    /// B^i(X) as a submodule of X^i.
    pub fn b(&self, i: i64) -> FPModule {
        let data = self.cohomology(i);
        FPModule::free(&self.ring, self.rank(i)).submodule(&data.boundaries).0
    }

    pub fn is_exact(&self) -> bool {
        self.padded_degrees().all(|i| self.cohomology(i).h.is_zero())
    }

    /// Decides splitness by projectivity of every C^i and, independently, by
    /// solving d s d = d in each degree; the two must agree.
    pub fn is_split(&self) -> Result<bool> {
        let by_cokernels = self.padded_degrees().all(|i| is_projective(&self.c(i)));
        let by_homotopy = (self.lo..self.hi()).all(|i| self.has_inner_inverse(i));
        if by_cokernels != by_homotopy {
            return Err(Error::InternalInconsistency(format!(
                "split criteria disagree: cokernels projective = {by_cokernels}, d s d = d solvable = {by_homotopy}"
            )));
        }
        Ok(by_cokernels)
    }

    /// Whether d^i s d^i = d^i has a solution s : X^{i+1} → X^i.
    fn has_inner_inverse(&self, i: i64) -> bool {
        let d = self.diff(i);
        if d.is_zero() {
            return true;
        }
        let mut sys = RSystem::new(&self.ring);
        let s = sys.var(d.cols(), d.rows());
        let e = sys.eq(d.rows(), d.cols());
        sys.sandwich(e, &d, s, &d);
        sys.solve(&[d]).is_some()
    }
}

/// A chain map f : X → Y, stored on the union of the two windows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: Complex,
    target: Complex,
    lo: i64,
    maps: Vec<RMatrix>,
}

impl ChainMap {
    /// Builds a chain map from per-degree matrices given by `f`, checking
    /// that it commutes with the differentials.
    pub fn new(source: &Complex, target: &Complex, mut f: impl FnMut(i64) -> RMatrix) -> Result<Self> {
        let m = Self::from_fn(source, target, &mut f);
        for i in m.lo - 1..=m.hi() {
            let lhs = target.diff(i).mul(&m.map(i));
            let rhs = m.map(i + 1).mul(&source.diff(i));
            if lhs != rhs {
                return Err(Error::NotAChainMap(i));
            }
        }
        Ok(m)
    }

    pub(crate) fn from_fn(source: &Complex, target: &Complex, mut f: impl FnMut(i64) -> RMatrix) -> Self {
        let lo = source.lo().min(target.lo());
        let hi = source.hi().max(target.hi());
        let maps = (lo..=hi)
            .map(|i| {
                let m = f(i);
                assert_eq!((m.rows(), m.cols()), (target.rank(i), source.rank(i)), "chain map shape in degree {i}");
                m
            })
            .collect();
        ChainMap { source: source.clone(), target: target.clone(), lo, maps }
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    fn hi(&self) -> i64 {
        self.lo + self.maps.len() as i64 - 1
    }

    pub fn map(&self, i: i64) -> RMatrix {
        if i >= self.lo && i <= self.hi() {
            self.maps[(i - self.lo) as usize].clone()
        } else {
            RMatrix::zeros(self.source.ring(), self.target.rank(i), self.source.rank(i))
        }
    }

    pub fn identity(x: &Complex) -> Self {
        Self::from_fn(x, x, |i| RMatrix::identity(x.ring(), x.rank(i)))
    }

    pub fn zero(x: &Complex, y: &Complex) -> Self {
        Self::from_fn(x, y, |i| RMatrix::zeros(x.ring(), y.rank(i), x.rank(i)))
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ChainMap) -> ChainMap {
        Self::from_fn(&other.source, &self.target, |i| self.map(i).mul(&other.map(i)))
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        Self::from_fn(&self.source, &self.target, |i| self.map(i).add(&other.map(i)))
    }

    pub fn neg(&self) -> ChainMap {
        Self::from_fn(&self.source, &self.target, |i| self.map(i).neg())
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        self.add(&other.neg())
    }

    /// f[n] : X[n] → Y[n], with no sign on the components.
    pub fn shift(&self, n: i64) -> ChainMap {
        Self::from_fn(&self.source.shift(n), &self.target.shift(n), |i| self.map(n + i))
    }

    /// f* : Y* → X* with (f*)^i = (f^{-i})^T.
    pub fn dual(&self) -> ChainMap {
        Self::from_fn(&self.target.dual(), &self.source.dual(), |i| self.map(-i).transpose())
    }

    /// The map X ⊕ P → Y restricting to `self` and `other`.
    pub fn hstack(&self, other: &ChainMap) -> ChainMap {
        let src = self.source.direct_sum(&other.source);
        let ring = self.source.ring().clone();
        Self::from_fn(&src, &self.target, |i| {
            let a = self.map(i);
            let b = other.map(i);
            let mut out = RMatrix::zeros(&ring, self.target.rank(i), src.rank(i));
            out.set_block(0, 0, &a);
            out.set_block(0, a.cols(), &b);
            out
        })
    }

    /// Induced map H^i(X) → H^i(Y) on cohomology coordinates.
    pub fn on_cohomology(&self, i: i64) -> KMatrix {
        let hx = self.source.cohomology(i);
        let hy = self.target.cohomology(i);
        hx.quotient.induced(&self.map(i).realize(), &hy.quotient)
    }

    pub fn is_cohomologically_injective(&self) -> bool {
        self.degrees().all(|i| self.on_cohomology(i).rank() == self.source.cohomology(i).h.dim())
    }

    pub fn is_cohomologically_surjective(&self) -> bool {
        self.degrees().all(|i| self.on_cohomology(i).rank() == self.target.cohomology(i).h.dim())
    }

    fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo - 1..=self.hi() + 1
    }

    /// Solves f^i = d^{i-1} s^i + s^{i+1} d^i for all i at once.
    pub fn null_homotopy(&self) -> Option<Vec<(i64, RMatrix)>> {
        let x = &self.source;
        let y = &self.target;
        let mut sys = RSystem::new(x.ring());
        let lo = self.lo;
        let hi = self.hi() + 1;
        let vars: Vec<usize> = (lo..=hi).map(|i| sys.var(y.rank(i - 1), x.rank(i))).collect();
        let mut rhs = Vec::new();
        for i in lo..=hi - 1 {
            let e = sys.eq(y.rank(i), x.rank(i));
            sys.left(e, &y.diff(i - 1), vars[(i - lo) as usize]);
            sys.right(e, vars[(i + 1 - lo) as usize], &x.diff(i));
            rhs.push(self.map(i));
        }
        let sol = sys.solve(&rhs)?;
        Some((lo..=hi).zip(sol).collect())
    }

    pub fn is_null_homotopic(&self) -> bool {
        self.null_homotopy().is_some()
    }

    pub fn is_homotopic_to(&self, other: &ChainMap) -> bool {
        self.sub(other).is_null_homotopic()
    }

    /// Cone(f) with its canonical maps Y → Cone(f) → X[1].
    pub fn cone(&self) -> TriangleWitness {
        let x = &self.source;
        let y = &self.target;
        let ring = x.ring().clone();
        let lo = (x.lo() - 1).min(y.lo());
        let hi = (x.hi() - 1).max(y.hi());
        let ranks: Vec<usize> = (lo..=hi).map(|i| x.rank(i + 1) + y.rank(i)).collect();
        let diffs = (lo..hi)
            .map(|i| {
                let dx = x.diff(i + 1).neg();
                let f = self.map(i + 1);
                let dy = y.diff(i);
                RMatrix::block2(&ring, (x.rank(i + 2), y.rank(i + 1)), (x.rank(i + 1), y.rank(i)), [Some(&dx), None, Some(&f), Some(&dy)])
            })
            .collect();
        let z = Complex::new_unchecked(&ring, lo, ranks, diffs);
        let g = ChainMap::from_fn(y, &z, |i| {
            RMatrix::block2(
                &ring,
                (x.rank(i + 1), y.rank(i)),
                (0, y.rank(i)),
                [None, None, None, Some(&RMatrix::identity(&ring, y.rank(i)))],
            )
        });
        let x1 = x.shift(1);
        let h = ChainMap::from_fn(&z, &x1, |i| {
            RMatrix::block2(
                &ring,
                (x.rank(i + 1), 0),
                (x.rank(i + 1), y.rank(i)),
                [Some(&RMatrix::identity(&ring, x.rank(i + 1))), None, None, None],
            )
        });
        TriangleWitness { x: x.clone(), y: y.clone(), z, f: self.clone(), g, h }
    }
}

/// A triangle X → Y → Z → X[1] with explicit maps.
#[derive(Clone, Debug)]
pub struct TriangleWitness {
    pub x: Complex,
    pub y: Complex,
    pub z: Complex,
    pub f: ChainMap,
    pub g: ChainMap,
    /// h : Z → X[1].
    pub h: ChainMap,
}

impl TriangleWitness {
    /// From the cone triangle A → B → C → A[1], the rotation C[-1] → A → B → C.
    pub fn rotate_back(&self) -> TriangleWitness {
        let h1 = self.h.shift(-1).neg();
        let h1 = ChainMap { source: self.z.shift(-1), target: self.x.clone(), lo: h1.lo, maps: h1.maps };
        TriangleWitness { x: self.z.shift(-1), y: self.x.clone(), z: self.y.clone(), f: h1, g: self.f.clone(), h: self.g.clone() }
    }

    /// (Z*, Y*, X*, g*, f*, h*[1]).
    pub fn dual(&self) -> TriangleWitness {
        let hd = self.h.dual().shift(1);
        let hd = ChainMap { source: self.x.dual(), target: self.z.dual().shift(1), lo: hd.lo, maps: hd.maps };
        TriangleWitness { x: self.z.dual(), y: self.y.dual(), z: self.x.dual(), f: self.g.dual(), g: self.f.dual(), h: hd }
    }

    fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        let lo = self.x.lo().min(self.y.lo()).min(self.z.lo()) - 2;
        let hi = self.x.hi().max(self.y.hi()).max(self.z.hi()) + 2;
        lo..=hi
    }

    /// Cohomologically ghost: 0 → H(X) → H(Y) → H(Z) → 0 exact in every degree.
    pub fn is_ghost(&self) -> Result<bool> {
        let mut injective = true;
        let mut surjective = true;
        let mut middle = true;
        for i in self.degrees() {
            let hf = self.f.on_cohomology(i);
            let hg = self.g.on_cohomology(i);
            let (rf, rg) = (hf.rank(), hg.rank());
            injective &= rf == self.x.cohomology(i).h.dim();
            surjective &= rg == self.z.cohomology(i).h.dim();
            middle &= hg.mul(&hf).is_zero() && rf + rg == self.y.cohomology(i).h.dim();
        }
        if injective != surjective {
            return Err(Error::InternalInconsistency(format!(
                "ghost criteria disagree: H(f) injective = {injective}, H(g) surjective = {surjective}"
            )));
        }
        Ok(injective && surjective && middle)
    }

    /// Exactness of … → H^i(X) → H^i(Y) → H^i(Z) → H^{i+1}(X) → … at every spot.
    pub fn long_exact_sequence_holds(&self) -> bool {
        let mut maps = Vec::new();
        let mut dims = Vec::new();
        for i in self.degrees() {
            let hx = self.x.cohomology(i);
            let next = self.x.cohomology(i + 1);
            let hz = self.z.cohomology(i);
            let conn = hz.quotient.induced(&self.h.map(i).realize(), &next.quotient);
            dims.push(hx.h.dim());
            dims.push(self.y.cohomology(i).h.dim());
            dims.push(hz.h.dim());
            maps.push(self.f.on_cohomology(i));
            maps.push(self.g.on_cohomology(i));
            maps.push(conn);
        }
        (1..dims.len() - 1).all(|k| {
            let (f, g) = (&maps[k - 1], &maps[k]);
            g.mul(f).is_zero() && f.rank() + g.rank() == dims[k]
        })
    }

    /// Whether g f, h g and f[1] h are null-homotopic.
    pub fn compositions_null_homotopic(&self) -> bool {
        let f1 = self.f.shift(1);
        self.g.compose(&self.f).is_null_homotopic()
            && self.h.compose(&self.g).is_null_homotopic()
            && f1.compose(&self.h).is_null_homotopic()
    }
}

/// F_p-bilinear pairing Σ_r y_r x_r in `ring`, with y an element of the
/// left-hand cohomology and x ranging over the right-hand one.
fn pairing_map(ring: &Ring, left: &DegreeCohomology, right: &DegreeCohomology) -> Result<ModuleHom> {
    let target = dual_module(&right.h);
    let d = ring.dim();
    let alg = ring.algebra();
    let pres = right.h.presentation();
    let n = pres.matrix.rows();
    let gen_reps: Vec<Vec<u32>> = (0..n).map(|t| right.quotient.rep(&pres.projection.mul_vec(&ring.unit_in_slot(n, t)))).collect();
    let solver = LinearSolver::new(&target.basis);
    let f = alg.field();
    let mut cols = Vec::with_capacity(left.h.dim());
    for v in 0..left.h.dim() {
        let mut e = vec![0; left.h.dim()];
        e[v] = 1;
        let y = left.quotient.rep(&e);
        let mut z = vec![0; n * d];
        for (t, x) in gen_reps.iter().enumerate() {
            for r in 0..y.len() / d {
                let prod = alg.mul(&y[r * d..(r + 1) * d], &x[r * d..(r + 1) * d]);
                for k in 0..d {
                    z[t * d + k] = f.add(z[t * d + k], prod[k]);
                }
            }
        }
        let coords = solver.solve(&z).ok_or_else(|| Error::InternalInconsistency("pairing lands outside the dual".into()))?;
        cols.push(coords);
    }
    let m = KMatrix::from_columns(ring.p(), target.module.dim(), &cols);
    ModuleHom::new(&left.h, &target.module, m)
}

/// ρ^i_X : H^{-i}(X*) → H^i(X)*, ρ(f)(x) = f(x).
pub fn natural_map_rho(x: &Complex, i: i64) -> Result<ModuleHom> {
    let xs = x.dual();
    pairing_map(x.ring(), &xs.cohomology(-i), &x.cohomology(i))
}

/// γ^i_X : H^{-i}(X) → H^i(X*)*, γ(x)(f) = f(x).
pub fn natural_map_gamma(x: &Complex, i: i64) -> Result<ModuleHom> {
    let xs = x.dual();
    pairing_map(xs.ring(), &x.cohomology(-i), &xs.cohomology(i))
}

/// A linear system whose unknowns are matrices over the algebra.
pub(crate) struct RSystem {
    ring: Ring,
    d: usize,
    vars: Vec<(usize, usize, usize)>,
    nvar: usize,
    eqs: Vec<(usize, usize, usize)>,
    neq: usize,
    terms: Vec<(usize, usize, KMatrix)>,
}

impl RSystem {
    pub(crate) fn new(ring: &Ring) -> Self {
        RSystem { ring: ring.clone(), d: ring.dim(), vars: Vec::new(), nvar: 0, eqs: Vec::new(), neq: 0, terms: Vec::new() }
    }

    pub(crate) fn var(&mut self, rows: usize, cols: usize) -> usize {
        self.vars.push((rows, cols, self.nvar));
        self.nvar += rows * cols * self.d;
        self.vars.len() - 1
    }

    pub(crate) fn eq(&mut self, rows: usize, cols: usize) -> usize {
        self.eqs.push((rows, cols, self.neq));
        self.neq += rows * cols * self.d;
        self.eqs.len() - 1
    }

    fn var_at(&self, v: usize, r: usize, c: usize) -> usize {
        let (_, cols, off) = self.vars[v];
        off + (r * cols + c) * self.d
    }

    fn eq_at(&self, e: usize, r: usize, c: usize) -> usize {
        let (_, cols, off) = self.eqs[e];
        off + (r * cols + c) * self.d
    }

    /// eq += a ∘ V.
    pub(crate) fn left(&mut self, e: usize, a: &RMatrix, v: usize) {
        let (rows, cols, _) = self.eqs[e];
        let alg = self.ring.algebra().clone();
        for r in 0..rows {
            for k in 0..a.cols() {
                let x = a.entry(r, k);
                if x.iter().all(|&t| t == 0) {
                    continue;
                }
                let l = alg.left_matrix(x);
                for c in 0..cols {
                    self.terms.push((self.eq_at(e, r, c), self.var_at(v, k, c), l.clone()));
                }
            }
        }
    }

    /// eq += V ∘ b.
    pub(crate) fn right(&mut self, e: usize, v: usize, b: &RMatrix) {
        let (rows, cols, _) = self.eqs[e];
        let alg = self.ring.algebra().clone();
        for c in 0..cols {
            for k in 0..b.rows() {
                let x = b.entry(k, c);
                if x.iter().all(|&t| t == 0) {
                    continue;
                }
                let rt = alg.right_matrix(x);
                for r in 0..rows {
                    self.terms.push((self.eq_at(e, r, c), self.var_at(v, r, k), rt.clone()));
                }
            }
        }
    }

    /// eq += a ∘ V ∘ b.
    pub(crate) fn sandwich(&mut self, e: usize, a: &RMatrix, v: usize, b: &RMatrix) {
        let (rows, cols, _) = self.eqs[e];
        let alg = self.ring.algebra().clone();
        let rts: Vec<Vec<Option<KMatrix>>> = (0..b.rows())
            .map(|l| {
                (0..cols)
                    .map(|c| {
                        let x = b.entry(l, c);
                        (!x.iter().all(|&t| t == 0)).then(|| alg.right_matrix(x))
                    })
                    .collect()
            })
            .collect();
        for r in 0..rows {
            for k in 0..a.cols() {
                let x = a.entry(r, k);
                if x.iter().all(|&t| t == 0) {
                    continue;
                }
                let la = alg.left_matrix(x);
                for (l, row) in rts.iter().enumerate() {
                    for (c, rt) in row.iter().enumerate() {
                        if let Some(rt) = rt {
                            self.terms.push((self.eq_at(e, r, c), self.var_at(v, k, l), la.mul(rt)));
                        }
                    }
                }
            }
        }
    }

    /// Solves with the given right-hand sides (one per equation block).
    pub(crate) fn solve(&self, rhs: &[RMatrix]) -> Option<Vec<RMatrix>> {
        let p = self.ring.p();
        let f = self.ring.algebra().field();
        let mut m = KMatrix::zeros(p, self.neq, self.nvar);
        for (row, col, block) in &self.terms {
            for a in 0..self.d {
                for b in 0..self.d {
                    let x = block.get(a, b);
                    if x != 0 {
                        let cur = m.get(row + a, col + b);
                        m.set(row + a, col + b, f.add(cur, x));
                    }
                }
            }
        }
        let mut b = Vec::with_capacity(self.neq);
        for (k, r) in rhs.iter().enumerate() {
            let (rows, cols, _) = self.eqs[k];
            debug_assert_eq!((r.rows(), r.cols()), (rows, cols));
            b.extend_from_slice(r.raw_data());
        }
        if self.nvar == 0 {
            return b.iter().all(|&x| x == 0).then(Vec::new);
        }
        let x = LinearSolver::new(&m).solve(&b)?;
        Some(
            self.vars
                .iter()
                .map(|&(rows, cols, off)| {
                    let mut out = RMatrix::zeros(&self.ring, rows, cols);
                    for r in 0..rows {
                        for c in 0..cols {
                            let s = off + (r * cols + c) * self.d;
                            out.set_entry(r, c, &x[s..s + self.d]);
                        }
                    }
                    out
                })
                .collect(),
        )
    }
}
