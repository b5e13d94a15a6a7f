//! Engine results against exhaustive enumeration and independent linear algebra.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stablecx::random::random_matrix;
use stablecx::*;

fn small_modules(entry: &CorpusEntry, max_dim: usize, seed: u64) -> Vec<FPModule> {
    let mut out: Vec<FPModule> = entry.modules.iter().map(|(_, m)| m.clone()).collect();
    out.push(FPModule::free(&entry.ring, 1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..12 {
        out.push(random_module(&entry.ring, 2, 2, &mut rng));
    }
    out.retain(|m| m.dim() <= max_dim);
    out
}

/// Every F_p-matrix of the given shape, as row-major data.
fn all_matrices(p: u32, rows: usize, cols: usize) -> impl Iterator<Item = KMatrix> {
    let n = rows * cols;
    let total = (p as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let data = (0..n)
            .map(|_| {
                let d = (code % p as u64) as u32;
                code /= p as u64;
                d
            })
            .collect();
        KMatrix::from_vec(p, rows, cols, data)
    })
}

fn log_p(p: u32, mut n: u64) -> usize {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % p as u64, 0, "count is not a power of p");
        n /= p as u64;
        k += 1;
    }
    k
}

fn count_homs(m: &FPModule, n: &FPModule) -> usize {
    let count =
        all_matrices(m.p(), n.dim(), m.dim()).filter(|t| m.actions().iter().zip(n.actions()).all(|(a, b)| t.mul(a) == b.mul(t))).count();
    log_p(m.p(), count as u64)
}

#[test]
fn hom_dimensions_match_enumeration() {
    for (k, entry) in corpus().iter().enumerate() {
        let limit = if entry.ring.p() == 2 { 16 } else { 9 };
        let mods = small_modules(entry, 4, k as u64);
        for m in &mods {
            for n in &mods {
                if m.dim() * n.dim() > limit {
                    continue;
                }
                let homs = stablecx::module::hom_space(m, n).unwrap();
                assert_eq!(homs.len(), count_homs(m, n), "{}: Hom between dims {} and {}", entry.name, m.dim(), n.dim());
                assert_eq!(ext_dim(m, 0, n).unwrap(), homs.len());
            }
        }
    }
}

fn kron(a: &KMatrix, b: &KMatrix) -> KMatrix {
    let p = a.p();
    let mut out = KMatrix::zeros(p, a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(i * b.rows() + k, j * b.cols() + l, (a.get(i, j) * b.get(k, l)) % p);
                }
            }
        }
    }
    out
}

/// dim M ⊗_R N as the quotient of M ⊗_F N by the balancing relations.
fn tensor_dim(m: &FPModule, n: &FPModule) -> usize {
    let p = m.p();
    let total = m.dim() * n.dim();
    let mut rel = KMatrix::zeros(p, total, 0);
    for (a, b) in m.actions().iter().zip(n.actions()) {
        let r = kron(a, &KMatrix::identity(p, n.dim())).sub(&kron(&KMatrix::identity(p, m.dim()), b));
        rel = rel.hstack(&r);
    }
    total - rel.rank()
}

#[test]
fn tensor_products_match_balanced_quotient() {
    for (k, entry) in corpus().iter().enumerate() {
        let mods = small_modules(entry, 6, 10 + k as u64);
        for m in &mods {
            for n in &mods {
                let n_op = n.reinterpret_op();
                assert_eq!(tor_dim(m, 0, &n_op).unwrap(), tensor_dim(m, &n_op), "{}", entry.name);
            }
        }
    }
}

fn count_vectors(p: u32, dim: usize, pred: impl Fn(&[u32]) -> bool) -> u64 {
    all_matrices(p, dim, 1).filter(|v| pred(v.data())).count() as u64
}

#[test]
fn cohomology_dimensions_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for entry in corpus().iter().filter(|e| e.ring.p() == 2) {
        for _ in 0..15 {
            let x = random_complex(&entry.ring, RandomCaps { max_rank: 3, max_window: 3 }, &mut rng);
            let d = entry.ring.dim();
            for i in x.padded_degrees() {
                let dim = x.rank(i) * d;
                if dim > 12 || x.rank(i - 1) * d > 12 {
                    continue;
                }
                let next = x.diff(i).realize();
                let cocycles = count_vectors(2, dim, |v| next.mul_vec(v).iter().all(|&c| c == 0));
                let prev = x.diff(i - 1).realize();
                let mut images: Vec<Vec<u32>> = all_matrices(2, x.rank(i - 1) * d, 1).map(|v| prev.mul_vec(v.data())).collect();
                images.sort();
                images.dedup();
                let h = log_p(2, cocycles) - log_p(2, images.len() as u64);
                assert_eq!(x.h(i).dim(), h, "{} degree {i}", entry.name);
            }
        }
    }
}

fn all_ring_matrices(ring: &Ring, rows: usize, cols: usize) -> Vec<RMatrix> {
    let d = ring.dim();
    all_matrices(ring.p(), rows * cols, d)
        .map(|m| {
            let entries: Vec<Vec<u32>> = (0..rows * cols).map(|k| m.row(k).to_vec()).collect();
            RMatrix::from_entries(ring, rows, cols, &entries).unwrap()
        })
        .collect()
}

#[test]
fn splitting_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen = [false; 2];
    for entry in corpus() {
        let d = entry.ring.dim();
        for (rows, cols) in [(1, 1), (1, 2), (2, 1)] {
            if (rows * cols * d) as u32 * entry.ring.p().ilog2() > 12 {
                continue;
            }
            let candidates = all_ring_matrices(&entry.ring, cols, rows);
            for _ in 0..6 {
                let dm = random_matrix(&entry.ring, rows, cols, &mut rng);
                let x = Complex::two_term(&dm, 0);
                let exhaustive = candidates.iter().any(|s| dm.mul(s).mul(&dm) == dm);
                assert_eq!(x.is_split().unwrap(), exhaustive, "{}", entry.name);
                seen[usize::from(exhaustive)] = true;
            }
        }
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn null_homotopy_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = [false; 2];
    for entry in corpus() {
        if entry.ring.dim() > 4 || entry.ring.p() != 2 {
            continue;
        }
        let hs = all_ring_matrices(&entry.ring, 1, 1);
        for _ in 0..8 {
            let dx = random_matrix(&entry.ring, 1, 1, &mut rng);
            let dy = random_matrix(&entry.ring, 1, 1, &mut rng);
            let x = Complex::two_term(&dx, 0);
            let y = Complex::two_term(&dy, 0);
            // f = (f0, f1) with f1 dx = dy f0; enumerate both components.
            for f0 in &hs {
                for f1 in &hs {
                    if f1.mul(&dx) != dy.mul(f0) {
                        continue;
                    }
                    let f = ChainMap::new(&x, &y, |i| match i {
                        0 => f0.clone(),
                        1 => f1.clone(),
                        _ => RMatrix::zeros(&entry.ring, y.rank(i), x.rank(i)),
                    })
                    .unwrap();
                    // A homotopy is h : X^1 → Y^0 with f0 = h dx and f1 = dy h.
                    let exhaustive = hs.iter().any(|h| &h.mul(&dx) == f0 && &dy.mul(h) == f1);
                    assert_eq!(f.is_null_homotopic(), exhaustive, "{}", entry.name);
                    seen[usize::from(exhaustive)] = true;
                }
            }
        }
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn ext_of_residue_field_over_dual_numbers() {
    let entry = &corpus()[0];
    let k = &entry.modules[0].1;
    for j in 0..6 {
        // Hom of the periodic resolution R ← R ← … into k has zero differentials.
        assert_eq!(ext_dim(k, j, k).unwrap(), 1);
        assert_eq!(tor_dim(k, j, &k.reinterpret_op()).unwrap(), 1);
        let r = FPModule::free(&entry.ring, 1);
        assert_eq!(ext_dim(k, j, &r).unwrap(), usize::from(j == 0));
    }
}
