//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use signres::f2::F2Vector;
use signres::lattice::{IntVector, LatticePolytope, Support};

pub fn random_f2(rng: &mut ChaCha8Rng, n: usize) -> F2Vector {
    F2Vector::new(n, rng.gen::<u64>())
}

pub fn random_tuple(rng: &mut ChaCha8Rng, n: usize) -> Vec<F2Vector> {
    (0..=n).map(|_| random_f2(rng, n)).collect()
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntVector {
    IntVector::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// Hull of `1..=max_points` random points of `[lo, hi]^n`.
pub fn random_polytope(rng: &mut ChaCha8Rng, n: usize, max_points: usize, lo: i64, hi: i64) -> LatticePolytope {
    let k = rng.gen_range(1..=max_points);
    let pts: Vec<IntVector> = (0..k).map(|_| random_point(rng, n, lo, hi)).collect();
    signres::lattice::convex_hull(&Support::new(pts).unwrap()).unwrap()
}

/// Like [`random_polytope`], but with probability one half all vertices are
/// congruent modulo 2, which makes 2-developed tuples that are not prickly.
pub fn random_mixed_parity_polytope(rng: &mut ChaCha8Rng, n: usize, max_points: usize, hi: i64) -> LatticePolytope {
    if rng.gen_bool(0.5) {
        random_polytope(rng, n, max_points, 0, hi)
    } else {
        let offset = random_point(rng, n, 0, 1);
        let k = rng.gen_range(1..=max_points);
        let pts: Vec<IntVector> =
            (0..k).map(|_| random_point(rng, n, 0, hi / 2).checked_scale(2).unwrap().checked_add(&offset).unwrap()).collect();
        signres::lattice::convex_hull(&Support::new(pts).unwrap()).unwrap()
    }
}

pub fn nonzero_vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntVector {
    loop {
        let v = random_point(rng, n, -bound, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn dense_support(d: i64) -> Support {
    Support::new((0..=d).map(|k| IntVector::from([k]))).unwrap()
}
