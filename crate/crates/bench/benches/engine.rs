use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stablecx::resolution::ext_regular_dim;
use stablecx::*;
use stablecx_bench::samples;

const ALGEBRAS: [&str; 3] = ["f2_dual_numbers", "f2_upper_triangular", "f2_radical_square_zero"];

fn rank(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (p, n) in [(2u32, 256usize), (3, 128)] {
        let m = KMatrix::from_vec(p, n, n, (0..n * n).map(|_| rng.gen_range(0..p)).collect());
        c.bench_function(&format!("rank F{p} {n}x{n}"), |b| b.iter(|| black_box(&m).rank()));
    }
}

/// A copy of `x` with empty caches.
fn fresh(x: &Complex) -> Complex {
    Complex::new(x.ring(), x.lo(), x.ranks().to_vec(), (x.lo()..x.hi()).map(|i| x.diff(i)).collect()).unwrap()
}

fn complexes(c: &mut Criterion) {
    for name in ALGEBRAS {
        let (_, xs) = samples(name, 8, 1);
        c.bench_function(&format!("is_split {name}"), |b| {
            b.iter(|| xs.iter().map(|x| fresh(x).is_split().unwrap()).filter(|&s| s).count())
        });
        c.bench_function(&format!("syzygy_complex {name}"), |b| {
            b.iter(|| xs.iter().map(|x| syzygy_complex(&fresh(x))).collect::<Vec<_>>())
        });
        c.bench_function(&format!("torsionfree n=2 {name}"), |b| {
            b.iter(|| xs.iter().filter(|x| is_n_torsionfree_complex(&fresh(x), 2).unwrap()).count())
        });
        c.bench_function(&format!("dimensions {name}"), |b| {
            b.iter(|| xs.iter().map(|x| dimensions(&fresh(x), 6).unwrap().pd.value).collect::<Vec<_>>())
        });
    }
}

fn sequences(c: &mut Criterion) {
    let (entry, xs) = samples("f2_exterior", 4, 2);
    let m = entry.modules[0].1.clone();
    c.bench_function("hom sequences f2_exterior", |b| {
        b.iter(|| {
            let mut valid = 0;
            for x in &xs {
                let x = fresh(x);
                for i in x.padded_degrees() {
                    valid += usize::from(ab_long_exact_sequence(&x, &m, i, 8).unwrap().is_valid());
                }
            }
            valid
        })
    });
}

fn ext(c: &mut Criterion) {
    let (entry, _) = samples("f2_radical_square_zero", 0, 0);
    let k = entry.modules[0].1.clone();
    c.bench_function("ext^1..6 of k^4 f2_radical_square_zero", |b| {
        b.iter(|| {
            // Fresh modules so that cached resolutions are not reused.
            let m = k.direct_sum(&k).direct_sum(&k.direct_sum(&k));
            (1..=6).map(|j| ext_regular_dim(&m, j)).sum::<usize>()
        })
    });
}

criterion_group!(benches, rank, complexes, sequences, ext);
criterion_main!(benches);
