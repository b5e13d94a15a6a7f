//! Exact computations in the stable theory of bounded complexes of free
//! modules over finite-dimensional algebras over prime fields.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod complexes;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod kcomplex;
pub mod les;
pub mod linalg;
pub mod module;
pub mod random;
pub mod resolution;
pub mod stable;

pub use algebra::{Algebra, AlgebraFlags, RMatrix, Ring, Side};
pub use complexes::{natural_map_gamma, natural_map_rho, ChainMap, Complex, DegreeCohomology, TriangleWitness};
pub use corpus::{corpus, CorpusEntry};
pub use error::{Error, Result};
pub use invariants::{Bounded, ExtWitness, Tri};
pub use kcomplex::{KComplex, LongSequence};
pub use les::{ab_long_exact_sequence, starex_sequence, tor_long_exact_sequence, CrossCheck, LongExactSequenceReport};
pub use linalg::{EchelonBasis, FieldSpec, KMatrix, LinearSolver, SubQuotient, Subspace};
pub use module::{FPModule, ModuleHom, Presentation};
pub use random::{random_complex, random_module, RandomCaps};
pub use resolution::{ext_dim, tor_dim, Horseshoe, Resolution};
pub use stable::{
    ab_approximation, auslander_buchweitz, complete_resolution_window, cosyzygy_complex, dimensions, gdim_complex,
    gorenstein_projective_complex, is_gorenstein_projective_complex, is_n_torsionfree_complex, kato_complex, pd_complex,
    presentation_complex, resolution_complex, right_add_approximation, rotate_ghost, syzygy_complex, syzygy_power, syzygy_triangle,
    torsionfree_tower, torsionfree_tower_unchecked, torsionless_triangle, verify_complete_window, AbApproximation, ApproximationWitness,
    CompleteResolutionWindow, DimensionReport, DimensionRoutes, GpReport, KatoReport, RotatedGhost, TowerStep, TowerWitness,
    WindowVerification,
};
