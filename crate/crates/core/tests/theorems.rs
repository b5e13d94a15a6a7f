//! Randomized checks of the structural theorems over every built-in algebra.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stablecx::invariants::is_gorenstein_projective_module;
use stablecx::module::evaluation_map;
use stablecx::resolution::ext_regular_dim;
use stablecx::*;

const PER_ALGEBRA: usize = 20;

fn samples(entry: &CorpusEntry, seed: u64) -> Vec<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..PER_ALGEBRA).map(|_| random_complex(&entry.ring, RandomCaps::default(), &mut rng)).collect()
}

fn each_sample(seed: u64, mut f: impl FnMut(&CorpusEntry, &Complex)) {
    for entry in corpus() {
        for x in samples(&entry, seed) {
            f(&entry, &x);
        }
    }
}

#[test]
fn split_criteria_agree() {
    let mut seen = [0usize; 2];
    each_sample(1, |e, x| {
        let split = x.is_split().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        seen[usize::from(split)] += 1;
    });
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn syzygy_shifts_ext_dimensions() {
    each_sample(2, |e, x| {
        let om = syzygy_complex(x);
        for i in x.lo() - 1..=om.hi() + 1 {
            for j in 1..=4 {
                assert_eq!(ext_regular_dim(&om.c(i), j), ext_regular_dim(&x.c(i), j + 1), "{} C^{i}", e.name);
                assert_eq!(ext_regular_dim(&om.h(i), j), ext_regular_dim(&x.h(i), j + 1), "{} H^{i}", e.name);
            }
        }
    });
}

#[test]
fn torsionless_and_reflexive_match_evaluation_maps() {
    let mut seen = [0usize; 2];
    each_sample(3, |e, x| {
        let phis: Vec<ModuleHom> = x.padded_degrees().map(|i| evaluation_map(&x.c(i)).2).collect();
        let torsionless = phis.iter().all(ModuleHom::is_injective);
        let reflexive = phis.iter().all(ModuleHom::is_bijective);
        assert_eq!(is_n_torsionfree_complex(x, 1).unwrap(), torsionless, "{}", e.name);
        assert_eq!(is_n_torsionfree_complex(x, 2).unwrap(), reflexive, "{}", e.name);
        seen[usize::from(torsionless)] += 1;
    });
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn torsionfree_criteria_agree_for_higher_n() {
    each_sample(4, |e, x| {
        for n in 1..=4 {
            is_n_torsionfree_complex(x, n).unwrap_or_else(|err| panic!("{} n = {n}: {err}", e.name));
        }
    });
}

#[test]
fn towers_exist_exactly_for_torsionfree_complexes() {
    each_sample(5, |e, x| {
        for n in 1..=3 {
            let predicate = is_n_torsionfree_complex(x, n).unwrap();
            let tower = torsionfree_tower_unchecked(x, n).unwrap();
            assert!(tower.is_chained());
            assert_eq!(tower.all_ghost(), predicate, "{} n = {n}", e.name);
            assert_eq!(torsionfree_tower(x, n).is_ok(), predicate);
        }
    });
}

#[test]
fn gorenstein_projectivity_two_out_of_three() {
    let mut exercised = 0;
    each_sample(6, |e, x| {
        let mut triangles = vec![syzygy_triangle(x)];
        if let Ok(step) = torsionless_triangle(x) {
            triangles.push(step.triangle);
        }
        for t in triangles {
            if !t.is_ghost().unwrap() || is_gorenstein_projective_complex(&t.z, 6) != Tri::Yes {
                continue;
            }
            let gx = is_gorenstein_projective_complex(&t.x, 6);
            let gy = is_gorenstein_projective_complex(&t.y, 6);
            if gx != Tri::Unknown && gy != Tri::Unknown {
                assert_eq!(gx, gy, "{}", e.name);
                exercised += 1;
            }
        }
    });
    assert!(exercised > 0);
}

#[test]
fn gorenstein_projective_complexes_have_gorenstein_projective_cohomology() {
    each_sample(7, |e, x| {
        if is_gorenstein_projective_complex(x, 6) == Tri::Yes {
            for i in x.padded_degrees() {
                assert_ne!(is_gorenstein_projective_module(&x.h(i), 6), Tri::No, "{} H^{i}", e.name);
            }
        }
    });
}

#[test]
fn dimension_routes_agree() {
    each_sample(8, |e, x| {
        let d = dimensions(x, 6).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        let flags = e.ring.flags();
        if let Some(g) = flags.gldim {
            assert_eq!(d.gdim.value, d.pd.value, "{}", e.name);
            assert!(d.pd.value.value().unwrap() <= g);
        }
        if flags.self_injective {
            assert_eq!(d.gdim.value, Bounded::Value(0));
        }
    });
}

#[test]
fn complete_resolution_windows_over_self_injective_algebras() {
    each_sample(9, |e, x| {
        if !e.ring.flags().self_injective {
            return;
        }
        let w = complete_resolution_window(x, -3, 3, 6).unwrap();
        assert_eq!(w.steps.len(), 7);
        assert_eq!(w.flags(), vec![true; 14], "{}", e.name);
        assert!(verify_complete_window(&w, x, 6).unwrap().passes());
    });
}

#[test]
fn approximation_triangles() {
    each_sample(10, |e, x| {
        let flags = e.ring.flags();
        if flags.gldim.is_some() {
            for n in 1..=2 {
                let a = ab_approximation(x, n, 6).unwrap();
                assert!(a.certified(), "{} n = {n}", e.name);
            }
            let ab = auslander_buchweitz(x, 6).unwrap();
            assert!(ab.certified());
            assert_eq!(ab.g_gp, Tri::Yes);
        }
        if flags.self_injective {
            let a = ab_approximation(x, 2, 6).unwrap();
            assert!(a.certified(), "{}", e.name);
            assert!(auslander_buchweitz(x, 6).unwrap().triangle.x.is_zero());
        }
    });
}

#[test]
fn rotated_syzygy_triangles_stay_ghost() {
    each_sample(11, |e, x| {
        let r = rotate_ghost(&syzygy_triangle(x), 3).unwrap();
        assert!(r.ghost && r.fingerprints_match, "{}", e.name);
    });
}

#[test]
fn gamma_is_rho_of_the_dual() {
    each_sample(12, |e, x| {
        for i in -x.hi() - 1..=-x.lo() + 1 {
            let gamma = natural_map_gamma(x, i).unwrap();
            let rho = natural_map_rho(&x.dual(), i).unwrap();
            assert_eq!(gamma.matrix(), rho.matrix(), "{}", e.name);
        }
    });
}

/// ker γ^i against Ext¹(Tr C^{-i+o}(X), R): only the offset o = 0 matches everywhere.
#[test]
fn starex_offset_is_zero() {
    let mut mismatches = [0usize; 3];
    each_sample(13, |_, x| {
        for i in -x.hi() - 1..=-x.lo() + 1 {
            let kernel = natural_map_gamma(x, i).unwrap().kernel_dim();
            for (slot, o) in (-1..=1).enumerate() {
                if ext_regular_dim(x.c(-i + o).transpose(), 1) != kernel {
                    mismatches[slot] += 1;
                }
            }
        }
    });
    assert_eq!(mismatches[1], 0);
    assert!(mismatches[0] > 0 && mismatches[2] > 0);
}

#[test]
fn long_exact_sequences_on_random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for entry in corpus() {
        for x in samples(&entry, 14).into_iter().take(6) {
            let m = random_module(&entry.ring, 2, 2, &mut rng);
            for i in x.lo() - 1..=x.hi() + 1 {
                assert!(ab_long_exact_sequence(&x, &m, i, 8).unwrap().is_valid(), "{}", entry.name);
                assert!(tor_long_exact_sequence(&x, &m.reinterpret_op(), i, 8).unwrap().is_valid());
                assert!(starex_sequence(&x, i, 8).unwrap().is_valid());
            }
        }
    }
}
