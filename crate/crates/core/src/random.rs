//! Seeded random complexes and modules.

use rand::Rng;

use crate::algebra::{RMatrix, Ring};
use crate::complexes::Complex;
use crate::linalg::kernel_basis;
use crate::module::{hom_condition_matrix, FPModule};

/// Size caps for random generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomCaps {
    pub max_rank: usize,
    pub max_window: usize,
}

impl Default for RandomCaps {
    fn default() -> Self {
        RandomCaps { max_rank: 3, max_window: 4 }
    }
}

fn random_element(ring: &Ring, rng: &mut impl Rng) -> Vec<u32> {
    let p = ring.p();
    (0..ring.dim()).map(|_| rng.gen_range(0..p)).collect()
}

/// A random rows × cols matrix; each entry is zero with probability 1/3.
pub fn random_matrix(ring: &Ring, rows: usize, cols: usize, rng: &mut impl Rng) -> RMatrix {
    let mut m = RMatrix::zeros(ring, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_range(0..3) != 0 {
                m.set_entry(r, c, &random_element(ring, rng));
            }
        }
    }
    m
}

/// A random d with d ∘ prev = 0: a random combination of a basis of the
/// solutions, i.e. of Hom(coker prev, R^rows).
fn random_annihilating(ring: &Ring, prev: &RMatrix, rows: usize, rng: &mut impl Rng) -> RMatrix {
    let cols = prev.rows();
    let target = FPModule::free(ring, rows);
    let ker = kernel_basis(&hom_condition_matrix(prev, &target));
    let nd = target.dim();
    let p = ring.p();
    let mut y = vec![0u32; cols * nd];
    let sparse = rng.gen_bool(0.25);
    for v in ker.basis_vectors() {
        if sparse && rng.gen_bool(0.5) {
            continue;
        }
        let c = rng.gen_range(0..p);
        for (a, b) in y.iter_mut().zip(v.iter()) {
            *a = (*a + c * b) % p;
        }
    }
    let columns: Vec<Vec<u32>> = (0..cols).map(|r| y[r * nd..(r + 1) * nd].to_vec()).collect();
    RMatrix::from_columns(ring, rows, &columns)
}

/// A random complex with window length in 1..=max_window, ranks in
/// 0..=max_rank and lo chosen so the window straddles degree 0.
pub fn random_complex(ring: &Ring, caps: RandomCaps, rng: &mut impl Rng) -> Complex {
    let len = rng.gen_range(1..=caps.max_window.max(1));
    let lo = -(rng.gen_range(0..len) as i64);
    let ranks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=caps.max_rank)).collect();
    let mut diffs: Vec<RMatrix> = Vec::with_capacity(len.saturating_sub(1));
    for k in 0..len.saturating_sub(1) {
        let d = match diffs.last() {
            None => random_matrix(ring, ranks[k + 1], ranks[k], rng),
            Some(prev) => random_annihilating(ring, prev, ranks[k + 1], rng),
        };
        diffs.push(d);
    }
    Complex::new(ring, lo, ranks, diffs).expect("sampled differentials compose to zero")
}

/// coker of a random gens × rels presentation matrix.
pub fn random_module(ring: &Ring, max_gens: usize, max_rels: usize, rng: &mut impl Rng) -> FPModule {
    let gens = rng.gen_range(1..=max_gens.max(1));
    let rels = rng.gen_range(0..=max_rels);
    FPModule::cokernel(&random_matrix(ring, gens, rels, rng))
}
