//! Randomized invariants across the lattice, subdivision, mixed volume,
//! Vieta and resultant layers.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use signres::f2::{det2, f2_rank, F2Matrix, F2Vector};
use signres::lattice::{
    cell_lattice_volume, convex_hull, determinant, minkowski_sum, minkowski_sum_all, polytope_face, smith_normal_form,
    IntVector, LatticePolytope, Support,
};
use signres::lp::in_convex_hull;
use signres::mvol::{is_2_developed, is_prickly, iota2, mixed_volume_lattice, mixed_volume_lattice_seeded, Verdict};
use signres::resultant::{
    khovanskii_polytopes, leading_coefficient, leading_sign_ratio, resultant_vertices, univariate_resultant, Grading,
    ResultantInput, VertexCheck,
};
use signres::subdivision::{generic_subdivision, RETRY_CAP};
use signres::vieta::{binomial_product_sign, univariate_vieta_check, vieta_sign, BinomialSystem};
use signres::Sign;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn polygon() -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec((-2i64..=3, -2i64..=3), 1..=5)
        .prop_map(|pts| LatticePolytope::from_points(pts.into_iter().map(|(x, y)| [x, y])).unwrap())
}

/// A random matrix in `GL_n(Z)` as a product of elementary moves.
fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<IntVector> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| IntVector::unit(n, i).into_inner()).collect();
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            m[i].iter_mut().for_each(|x| *x = -*x);
        } else {
            let k = if rng.gen_bool(0.5) { 1 } else { -1 };
            let row = m[j].clone();
            m[i].iter_mut().zip(row).for_each(|(x, y)| *x += k * y);
        }
    }
    m.into_iter().map(IntVector::new).collect()
}

fn big_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|r| (0..b[0].len()).map(|j| r.iter().zip(b).map(|(x, row)| x * &row[j]).sum()).collect())
        .collect()
}

fn big_det(m: &[Vec<BigInt>]) -> BigInt {
    let rows: Vec<IntVector> =
        m.iter().map(|r| IntVector::new(r.iter().map(|x| i64::try_from(x).unwrap()).collect())).collect();
    determinant(&rows)
}

fn full_dim(polys: &[LatticePolytope]) -> bool {
    minkowski_sum_all(polys).unwrap().dim() == polys[0].ambient_dim()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_is_idempotent(p in polygon()) {
        prop_assert_eq!(convex_hull(p.vertices()).unwrap(), p);
    }

    #[test]
    fn minkowski_sum_is_commutative_and_associative(p in polygon(), q in polygon(), r in polygon()) {
        let pq = minkowski_sum(&p, &q).unwrap();
        prop_assert_eq!(&pq, &minkowski_sum(&q, &p).unwrap());
        prop_assert_eq!(
            minkowski_sum(&pq, &r).unwrap(),
            minkowski_sum(&p, &minkowski_sum(&q, &r).unwrap()).unwrap()
        );
    }

    #[test]
    fn face_of_sum_is_sum_of_faces(p in polygon(), q in polygon(), v in (-3i64..=3, -3i64..=3)) {
        let v = IntVector::from([v.0, v.1]);
        let sum = minkowski_sum(&p, &q).unwrap();
        let fp = convex_hull(polytope_face(&p, &v).unwrap().points()).unwrap();
        let fq = convex_hull(polytope_face(&q, &v).unwrap().points()).unwrap();
        let face = convex_hull(polytope_face(&sum, &v).unwrap().points()).unwrap();
        prop_assert_eq!(face, minkowski_sum(&fp, &fq).unwrap());
    }

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(
        entries in prop::collection::vec(-6i64..=6, 9), rows in 1usize..=3, cols in 1usize..=3,
    ) {
        let m: Vec<Vec<BigInt>> = (0..rows).map(|i| (0..cols).map(|j| BigInt::from(entries[3 * i + j])).collect()).collect();
        let s = smith_normal_form(&m, cols);
        let d = big_mul(&big_mul(&s.u, &m), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j && i < s.rank() { s.diag[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(x, &want);
            }
        }
        prop_assert!(s.diag.iter().all(|x| x.is_positive()));
        prop_assert!(s.diag.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        prop_assert_eq!(big_det(&s.u).abs(), BigInt::one());
        prop_assert_eq!(big_det(&s.v).abs(), BigInt::one());
        prop_assert_eq!(big_mul(&s.v, &s.v_inv), big_mul(&s.v_inv, &s.v));
    }

    #[test]
    fn volume_is_translation_and_unimodular_invariant(p in polygon(), t in (-5i64..=5, -5i64..=5), seed in any::<u64>()) {
        let vol = p.lattice_volume();
        prop_assert_eq!(cell_lattice_volume(p.vertices().points()), vol);
        prop_assert_eq!(p.translate(&IntVector::from([t.0, t.1])).unwrap().lattice_volume(), vol);
        let u = unimodular(&mut rng(seed), 2);
        prop_assert_eq!(p.map_linear(&u).unwrap().lattice_volume(), vol);
    }

    #[test]
    fn cell_volumes_partition_the_sum(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let polys: Vec<LatticePolytope> = (0..n).map(|_| random_polytope(&mut r, n, 4, 0, 2)).collect();
        prop_assume!(full_dim(&polys));
        let supports: Vec<Support> = polys.iter().map(|p| p.vertices().clone()).collect();
        let sub = generic_subdivision(&supports, seed).unwrap();
        prop_assert!(sub.attempts >= 1 && sub.attempts <= RETRY_CAP);
        prop_assert!(sub.cells.iter().all(|c| c.is_fine()));
        let total: u64 = sub.cells.iter().map(|c| c.lattice_volume()).sum();
        prop_assert_eq!(total, minkowski_sum_all(&polys).unwrap().lattice_volume());
    }

    #[test]
    fn selectors_reproduce_faces(seed in any::<u64>()) {
        let mut r = rng(seed);
        let polys: Vec<LatticePolytope> = (0..2).map(|_| random_polytope(&mut r, 2, 4, 0, 3)).collect();
        prop_assume!(full_dim(&polys));
        let supports: Vec<Support> = polys.iter().map(|p| p.vertices().clone()).collect();
        let sub = generic_subdivision(&supports, seed).unwrap();
        let den = BigInt::from(sub.lifting.denominator);
        for cell in &sub.cells {
            let x = cell.selector();
            for (i, s) in supports.iter().enumerate() {
                let values: Vec<BigRational> = s.iter().enumerate().map(|(k, a)| {
                    let lin: BigRational = a.coords().iter().zip(&x).map(|(&c, xj)| xj * BigInt::from(c)).sum();
                    lin + BigRational::new(BigInt::from(sub.lifting.heights[i][k]), den.clone())
                }).collect();
                let best = values.iter().max().unwrap();
                let argmax: Vec<usize> = (0..s.len()).filter(|&k| &values[k] == best).collect();
                prop_assert_eq!(&argmax, &cell.face_indices()[i]);
            }
        }
    }

    #[test]
    fn mixed_volume_is_seed_free_multilinear_and_translation_invariant(
        p in polygon(), p2 in polygon(), q in polygon(), seed in any::<u64>(), t in (-4i64..=4, -4i64..=4),
    ) {
        let mv = |a: &LatticePolytope, b: &LatticePolytope| mixed_volume_lattice(&[a.clone(), b.clone()]).unwrap();
        let base = mv(&p, &q);
        prop_assert_eq!(mixed_volume_lattice_seeded(&[p.clone(), q.clone()], seed).unwrap(), base);
        prop_assert_eq!(mv(&minkowski_sum(&p, &p2).unwrap(), &q), base + mv(&p2, &q));
        prop_assert_eq!(mv(&p.translate(&IntVector::from([t.0, t.1])).unwrap(), &q), base);
        // lattice_volume measures in the affine lattice of P, so only full-dimensional P qualify
        if p.dim() == 2 {
            prop_assert_eq!(mv(&p, &p), p.lattice_volume());
        }
    }

    #[test]
    fn mv2_is_translation_invariant(seed in any::<u64>(), t in (-4i64..=4, -4i64..=4)) {
        let mut r = rng(seed);
        let polys: Vec<LatticePolytope> = (0..2).map(|_| random_mixed_parity_polytope(&mut r, 2, 4, 3)).collect();
        let zeta = nonzero_vector(&mut r, 2, 2);
        prop_assume!(is_2_developed(&polys, &zeta).unwrap().verdict != Verdict::Neither);
        let moved = vec![polys[0].translate(&IntVector::from([t.0, t.1])).unwrap(), polys[1].clone()];
        prop_assert_eq!(iota2(&polys, &zeta, seed).unwrap().value, iota2(&moved, &zeta, seed ^ 1).unwrap().value);
    }

    #[test]
    fn prickly_implies_developed(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let polys: Vec<LatticePolytope> = (0..n).map(|_| random_polytope(&mut r, n, 3, 0, 2)).collect();
        let zeta = nonzero_vector(&mut r, n, 2);
        let report = is_2_developed(&polys, &zeta).unwrap();
        if is_prickly(&polys, &zeta).unwrap() {
            prop_assert_eq!(report.verdict, Verdict::Prickly);
        }
        prop_assert_eq!(report.witness.is_some(), report.verdict == Verdict::Neither);
    }

    #[test]
    fn binomial_sign_survives_monomial_changes(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let rows: Vec<IntVector> = (0..n).map(|_| random_point(&mut r, n, -3, 3)).collect();
        prop_assume!(!determinant(&rows).is_zero());
        let a = nonzero_vector(&mut r, n, 3);
        let u = unimodular(&mut r, n);
        // exponent rows m -> m U, monomial a -> U^T a
        let rows_u: Vec<IntVector> = rows.iter().map(|m| {
            IntVector::new((0..n).map(|j| (0..n).map(|k| m[k] * u[k][j]).sum()).collect())
        }).collect();
        let a_u = IntVector::new((0..n).map(|j| (0..n).map(|k| u[k][j] * a[k]).sum()).collect());
        let before = binomial_product_sign(&BinomialSystem::new(rows).unwrap(), &a).unwrap();
        let after = binomial_product_sign(&BinomialSystem::new(rows_u).unwrap(), &a_u).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn univariate_vieta_matches_closed_form(d in 1i64..=12, a in -12i64..=12, lo in -5i64..=5, seed in any::<u64>()) {
        prop_assume!(a != 0);
        let p = LatticePolytope::from_points([[lo], [lo + d]]).unwrap();
        let got = vieta_sign(&[p], &IntVector::from([a]), seed).unwrap();
        prop_assert_eq!(got, univariate_vieta_check(d as u64, a).unwrap());
    }

    #[test]
    fn sign_ratio_is_trivial_on_the_diagonal_and_symmetric(
        d0 in 1i64..=2, d1 in 1i64..=2, seed in any::<u64>(),
    ) {
        let input = ResultantInput::new(vec![dense_support(d0).points().to_vec(), dense_support(d1).points().to_vec()]).unwrap();
        let mut r = rng(seed);
        let nc = input.num_coefficients();
        let g = Grading::new(&input, (0..nc).map(|_| r.gen_range(1..=6)).collect()).unwrap();
        let s = Grading::new(&input, (0..nc).map(|_| r.gen_range(1..=6)).collect()).unwrap();
        let res = univariate_resultant(&dense_support(d0), &dense_support(d1)).unwrap();
        prop_assume!(leading_coefficient(&res, g.weights()).is_ok() && leading_coefficient(&res, s.weights()).is_ok());
        let gg = leading_sign_ratio(&input, &g, &g, seed, VertexCheck::Trust).unwrap();
        prop_assert_eq!(gg.ratio, Sign::Plus);
        let gs = leading_sign_ratio(&input, &g, &s, seed, VertexCheck::Trust).unwrap();
        let sg = leading_sign_ratio(&input, &s, &g, seed, VertexCheck::Trust).unwrap();
        prop_assert_eq!(gs.ratio, sg.ratio);
    }

    #[test]
    fn khovanskii_polytopes_contain_the_unlifted_support(
        d0 in 1i64..=3, d1 in 1i64..=3, seed in any::<u64>(),
    ) {
        let input = ResultantInput::new(vec![dense_support(d0).points().to_vec(), dense_support(d1).points().to_vec()]).unwrap();
        let mut r = rng(seed);
        let nc = input.num_coefficients();
        let g = Grading::new(&input, (0..nc).map(|_| r.gen_range(1..=6)).collect()).unwrap();
        let s = Grading::new(&input, (0..nc).map(|_| r.gen_range(1..=6)).collect()).unwrap();
        let k = khovanskii_polytopes(&input, &g, &s).unwrap();
        for (poly, support) in k.polytopes.iter().zip(input.supports()) {
            let verts: Vec<&IntVector> = poly.vertices().iter().collect();
            for a in support.iter() {
                prop_assert!(in_convex_hull(&IntVector::from([a[0], 0]), &verts));
            }
        }
    }

    #[test]
    fn sylvester_matches_root_evaluation(
        r1 in -3i64..=3, r2 in -3i64..=3, lead in -3i64..=3, g in prop::collection::vec(-4i64..=4, 3),
    ) {
        prop_assume!(lead != 0);
        let res = univariate_resultant(&dense_support(2), &dense_support(2)).unwrap();
        let f = [lead * r1 * r2, -lead * (r1 + r2), lead];
        let coeffs: Vec<BigInt> = f.iter().chain(&g).map(|&x| BigInt::from(x)).collect();
        let at = |x: i64| g[0] + g[1] * x + g[2] * x * x;
        let want = BigInt::from(lead * lead * at(r1) * at(r2));
        prop_assert_eq!(res.evaluate(&coeffs), want);
    }
}

#[test]
fn sampled_vertices_are_unit_coefficients_of_the_resultant() {
    for d0 in 1..=3 {
        for d1 in 1..=3 {
            let (f, g) = (dense_support(d0), dense_support(d1));
            let res = univariate_resultant(&f, &g).unwrap();
            let input = ResultantInput::new(vec![f.points().to_vec(), g.points().to_vec()]).unwrap();
            let sampled = resultant_vertices(&input, 40, d0 as u64 * 10 + d1 as u64).unwrap();
            assert!(!sampled.vertices.is_empty());
            for v in &sampled.vertices {
                let m: Vec<u32> = v.iter().map(|&e| e as u32).collect();
                assert_eq!(res.coefficient(&m).abs(), BigInt::one(), "d = ({d0}, {d1}), vertex {v:?}");
            }
        }
    }
}

#[test]
fn det2_vanishes_below_full_rank() {
    for n in 1..=3 {
        for c in 0u64..1 << (n * (n + 1)) {
            let k: Vec<F2Vector> = (0..=n).map(|i| F2Vector::new(n, c >> (i * n))).collect();
            if f2_rank(&F2Matrix::from_rows(k.clone(), n).unwrap()) < n {
                assert_eq!(det2(&k).unwrap(), 0, "{k:?}");
            }
        }
    }
}
