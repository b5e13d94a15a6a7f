use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stablecx::invariants::stable_fingerprint;
use stablecx::linalg::kernel_basis;
use stablecx::module::hom_space;
use stablecx::resolution::ext_regular_dim;
use stablecx::*;

fn sample(alg: usize, seed: u64) -> (CorpusEntry, Complex, FPModule) {
    let entry = corpus().swap_remove(alg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_complex(&entry.ring, RandomCaps::default(), &mut rng);
    let m = random_module(&entry.ring, 2, 2, &mut rng);
    (entry, x, m)
}

fn random_kmatrix(p: u32, rows: usize, cols: usize, seed: u64) -> KMatrix {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    KMatrix::from_vec(p, rows, cols, (0..rows * cols).map(|_| rng.gen_range(0..p)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(p in prop::sample::select(vec![2u32, 3, 5]), rows in 0usize..7, cols in 0usize..7, seed: u64) {
        let a = random_kmatrix(p, rows, cols, seed);
        prop_assert_eq!(a.rank(), a.transpose().rank());
        let ker = kernel_basis(&a);
        prop_assert_eq!(a.rank() + ker.dim(), cols);
        prop_assert!(a.mul(ker.basis()).is_zero());
    }

    #[test]
    fn double_opposite_is_identity(alg in 0usize..5) {
        let a = corpus()[alg].ring.base().clone();
        prop_assert_eq!(a.opposite().opposite(), a);
    }

    #[test]
    fn dual_is_an_involution(alg in 0usize..5, seed: u64) {
        let (_, x, _) = sample(alg, seed);
        prop_assert_eq!(x.dual().dual(), x);
    }

    #[test]
    fn shifts_compose_and_move_cohomology(alg in 0usize..5, seed: u64, a in -2i64..3, b in -2i64..3) {
        let (_, x, _) = sample(alg, seed);
        prop_assert_eq!(x.shift(a).shift(b), x.shift(a + b));
        let y = x.shift(a);
        for i in y.padded_degrees() {
            prop_assert_eq!(y.h(i).dim(), x.h(i + a).dim());
        }
    }

    #[test]
    fn approximation_cones_are_triangles(alg in 0usize..5, seed: u64) {
        let (_, x, _) = sample(alg, seed);
        let approx = right_add_approximation(&x);
        prop_assert!(approx.p.is_split().unwrap());
        prop_assert!(approx.map.is_cohomologically_surjective());
        let t = approx.map.cone();
        prop_assert!(t.long_exact_sequence_holds());
        prop_assert!(t.compositions_null_homotopic());
        let back = t.rotate_back();
        prop_assert!(back.long_exact_sequence_holds());
        prop_assert!(back.is_ghost().unwrap());
        let dual = back.dual();
        prop_assert!(dual.long_exact_sequence_holds());
        prop_assert!(dual.compositions_null_homotopic());
    }

    #[test]
    fn transpose_is_stably_an_involution(alg in 0usize..5, seed: u64) {
        let (_, _, m) = sample(alg, seed);
        let trtr = m.transpose().transpose();
        prop_assert_eq!(stable_fingerprint(trtr, 3), stable_fingerprint(&m, 3));
    }

    #[test]
    fn ext_zero_is_hom_into_the_ring(alg in 0usize..5, seed: u64) {
        let (e, _, m) = sample(alg, seed);
        let r = FPModule::free(&e.ring, 1);
        prop_assert_eq!(ext_dim(&m, 0, &r).unwrap(), hom_space(&m, &r).unwrap().len());
    }

    #[test]
    fn ext_is_additive(alg in 0usize..5, seed: u64, other: u64) {
        let (_, _, m) = sample(alg, seed);
        let (_, _, n) = sample(alg, other);
        let sum = m.direct_sum(&n);
        for j in 1..=3 {
            prop_assert_eq!(ext_regular_dim(&sum, j), ext_regular_dim(&m, j) + ext_regular_dim(&n, j));
        }
    }

    #[test]
    fn cokernel_of_dual_is_transpose(alg in 0usize..5, seed: u64) {
        let (_, x, _) = sample(alg, seed);
        let xs = x.dual();
        for i in x.padded_degrees() {
            let tr = x.c(i).transpose().clone();
            prop_assert_eq!(stable_fingerprint(&xs.c(-i + 1), 2), stable_fingerprint(&tr, 2));
        }
    }
}
