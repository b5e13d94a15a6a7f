//! The built-in algebras with a few small modules and complexes over each.

use crate::algebra::{Algebra, RMatrix, Ring};
use crate::complexes::Complex;
use crate::module::FPModule;

/// An algebra with named modules and complexes over it.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub ring: Ring,
    pub modules: Vec<(&'static str, FPModule)>,
    pub complexes: Vec<(&'static str, Complex)>,
}

fn elem(d: usize, pairs: &[(usize, u32)]) -> Vec<u32> {
    let mut v = vec![0; d];
    for &(i, c) in pairs {
        v[i] = c;
    }
    v
}

fn matrix(ring: &Ring, rows: usize, cols: usize, entries: &[Vec<u32>]) -> RMatrix {
    RMatrix::from_entries(ring, rows, cols, entries).expect("corpus matrix")
}

fn module(ring: &Ring, rows: usize, cols: usize, entries: &[Vec<u32>]) -> FPModule {
    FPModule::cokernel(&matrix(ring, rows, cols, entries))
}

fn two_term(ring: &Ring, rows: usize, cols: usize, entries: &[Vec<u32>]) -> Complex {
    Complex::two_term(&matrix(ring, rows, cols, entries), 0)
}

fn dual_numbers() -> CorpusEntry {
    let ring = Ring::new(Algebra::truncated_polynomial(2, 2).unwrap());
    let x = elem(2, &[(1, 1)]);
    CorpusEntry {
        name: "f2_dual_numbers",
        modules: vec![("k", module(&ring, 1, 1, std::slice::from_ref(&x)))],
        complexes: vec![("mult_x", two_term(&ring, 1, 1, &[x]))],
        ring,
    }
}

fn truncated_cubic() -> CorpusEntry {
    let ring = Ring::new(Algebra::truncated_polynomial(3, 3).unwrap());
    let x = elem(3, &[(1, 1)]);
    let x2 = elem(3, &[(2, 1)]);
    let mixed = elem(3, &[(1, 2), (2, 1)]);
    CorpusEntry {
        name: "f3_truncated_cubic",
        modules: vec![("k", module(&ring, 1, 1, std::slice::from_ref(&x))), ("r_mod_x2", module(&ring, 1, 1, std::slice::from_ref(&x2)))],
        complexes: vec![
            ("mult_x", two_term(&ring, 1, 1, std::slice::from_ref(&x))),
            ("mult_x2", two_term(&ring, 1, 1, std::slice::from_ref(&x2))),
            (
                "periodic",
                Complex::new(&ring, -1, vec![1, 1, 1], vec![matrix(&ring, 1, 1, &[x2]), matrix(&ring, 1, 1, std::slice::from_ref(&x))])
                    .expect("x·x² = 0"),
            ),
            ("mixed", two_term(&ring, 1, 2, &[mixed, x])),
        ],
        ring,
    }
}

fn upper_triangular() -> CorpusEntry {
    let ring = Ring::new(Algebra::upper_triangular(2).unwrap());
    let e11 = elem(3, &[(0, 1)]);
    let e12 = elem(3, &[(1, 1)]);
    let e22 = elem(3, &[(2, 1)]);
    CorpusEntry {
        name: "f2_upper_triangular",
        modules: vec![("s2", module(&ring, 1, 2, &[e12.clone(), e22.clone()])), ("p2", module(&ring, 1, 1, std::slice::from_ref(&e11)))],
        complexes: vec![
            ("mult_e12", two_term(&ring, 1, 1, std::slice::from_ref(&e12))),
            ("s2_presentation", two_term(&ring, 1, 2, &[e12, e22])),
            ("mult_e11", two_term(&ring, 1, 1, &[e11])),
        ],
        ring,
    }
}

fn radical_square_zero() -> CorpusEntry {
    let ring = Ring::new(Algebra::local_radical_square_zero(2).unwrap());
    let x = elem(3, &[(1, 1)]);
    let y = elem(3, &[(2, 1)]);
    CorpusEntry {
        name: "f2_radical_square_zero",
        modules: vec![("k", module(&ring, 1, 2, &[x.clone(), y.clone()])), ("r_mod_x", module(&ring, 1, 1, std::slice::from_ref(&x)))],
        complexes: vec![("mult_x", two_term(&ring, 1, 1, std::slice::from_ref(&x))), ("mult_xy", two_term(&ring, 1, 2, &[x, y]))],
        ring,
    }
}

fn exterior() -> CorpusEntry {
    let ring = Ring::new(Algebra::exterior(2).unwrap());
    let x = elem(4, &[(1, 1)]);
    let y = elem(4, &[(2, 1)]);
    let xy = elem(4, &[(3, 1)]);
    CorpusEntry {
        name: "f2_exterior",
        modules: vec![("k", module(&ring, 1, 2, &[x.clone(), y.clone()])), ("r_mod_x", module(&ring, 1, 1, std::slice::from_ref(&x)))],
        complexes: vec![
            ("mult_x", two_term(&ring, 1, 1, std::slice::from_ref(&x))),
            ("mult_xy", two_term(&ring, 1, 1, &[xy])),
            ("koszul", two_term(&ring, 1, 2, &[x, y])),
        ],
        ring,
    }
}

/// The five built-in algebras in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    vec![dual_numbers(), truncated_cubic(), upper_triangular(), radical_square_zero(), exterior()]
}
