//! Regular mixed subdivisions induced by liftings.
//!
//! A lifting assigns each point of each support a rational height. The upper
//! faces of the lifted Minkowski sum project onto the cells of a subdivision
//! of the Minkowski sum of the hulls, and each cell comes with its
//! decomposition `F_1 + ... + F_m`, `F_i` a subset of the `i`-th support.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{cone_span_basis, det_i128, express, next_combination, IntVector, Support};

/// Common denominator of random heights.
pub const DEFAULT_DENOMINATOR: i64 = 1 << 31;
/// Default exclusive upper bound on random height numerators.
pub const DEFAULT_BOUND: i64 = 1 << 31;
/// Number of seeds tried by [`generic_subdivision`] before giving up.
pub const RETRY_CAP: u32 = 64;

/// Heights `heights[i][k] / denominator` for the `k`-th point (in sorted order)
/// of the `i`-th support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lifting {
    pub heights: Vec<Vec<i64>>,
    pub denominator: i64,
    /// Seed that produced the heights, if they were drawn at random.
    pub seed: Option<u64>,
}

impl Lifting {
    /// Explicit heights with denominator 1.
    pub fn integral(heights: Vec<Vec<i64>>) -> Lifting {
        Lifting { heights, denominator: 1, seed: None }
    }

    fn check(&self, supports: &[Support]) -> Result<()> {
        if self.heights.len() != supports.len() {
            return Err(Error::WrongArity { expected: supports.len(), found: self.heights.len() });
        }
        for (h, s) in self.heights.iter().zip(supports) {
            if h.len() != s.len() {
                return Err(Error::DimensionMismatch { expected: s.len(), found: h.len() });
            }
        }
        if self.denominator <= 0 {
            return Err(Error::InvalidInput("lifting denominator must be positive".into()));
        }
        Ok(())
    }
}

/// Heights drawn uniformly from `{0, 1/D, ..., (bound-1)/D}`, `D = 2^31`.
pub fn random_lifting(supports: &[Support], seed: u64, bound: i64) -> Result<Lifting> {
    if bound < 1 {
        return Err(Error::InvalidInput("lifting bound must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let heights = supports.iter().map(|s| (0..s.len()).map(|_| rng.gen_range(0..bound)).collect()).collect();
    Ok(Lifting { heights, denominator: DEFAULT_DENOMINATOR, seed: Some(seed) })
}

/// Combinatorial type of a cell's decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellType {
    /// Every face is a two-point segment.
    Mixed,
    /// Exactly one face is a single point and the others are segments.
    SemiMixed,
    Other,
}

/// A full-dimensional cell of an induced subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCell {
    faces: Vec<Support>,
    face_indices: Vec<Vec<usize>>,
    dim: usize,
    selector_numer: Vec<i128>,
    selector_denom: i128,
}

impl MixedCell {
    /// The faces `F_1, ..., F_m`.
    pub fn faces(&self) -> &[Support] {
        &self.faces
    }

    /// Positions of each face's points within the sorted support.
    pub fn face_indices(&self) -> &[Vec<usize>] {
        &self.face_indices
    }

    /// Dimension of the cell, which is that of the whole subdivided polytope.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The selector `(v, 1)`: each `F_i` is where `v . a + height(a)` is
    /// maximal over the `i`-th support.
    pub fn selector(&self) -> Vec<BigRational> {
        let den = BigInt::from(self.selector_denom);
        let mut v: Vec<BigRational> =
            self.selector_numer.iter().map(|&x| BigRational::new(BigInt::from(x), den.clone())).collect();
        v.push(BigRational::from_integer(1.into()));
        v
    }

    pub fn cell_type(&self) -> CellType {
        let points = self.faces.iter().filter(|f| f.len() == 1).count();
        let segments = self.faces.iter().filter(|f| f.len() == 2).count();
        if segments == self.faces.len() {
            CellType::Mixed
        } else if points == 1 && segments + 1 == self.faces.len() {
            CellType::SemiMixed
        } else {
            CellType::Other
        }
    }

    /// Faces are affinely independent simplices whose dimensions add up to
    /// the dimension of the cell.
    pub fn is_fine(&self) -> bool {
        self.faces.iter().map(|f| f.len() - 1).sum::<usize>() == self.dim
    }

    /// Lattice-normalized volume of `conv(F_1) + ... + conv(F_m)`.
    pub fn lattice_volume(&self) -> u64 {
        if self.is_fine() {
            fine_cell_volume(&self.faces, self.dim)
        } else {
            crate::lattice::cell_lattice_volume(&minkowski_points(&self.faces))
        }
    }
}

fn minkowski_points(faces: &[Support]) -> Vec<IntVector> {
    faces.iter().fold(vec![IntVector::zero(faces[0].dim())], |acc, f| {
        acc.iter().flat_map(|p| f.iter().map(move |q| p.add(q))).collect()
    })
}

/// `|det(edges)| * d! / prod(k_i!)` for a sum of independent simplices of
/// dimensions `k_i`, with edges expressed in a basis of the spanned lattice.
fn fine_cell_volume(faces: &[Support], d: usize) -> u64 {
    if d == 0 {
        return 1;
    }
    let n = faces[0].dim();
    let edges: Vec<IntVector> = faces.iter().flat_map(|f| f.points()[1..].iter().map(|p| p.sub(&f[0]))).collect();
    let basis = cone_span_basis(&edges, n).expect("edges fit in i64");
    let rows: Vec<Vec<i128>> = edges.iter().map(|e| express(e, &basis).iter().map(|&c| c.into()).collect()).collect();
    let det = det_i128(&rows).expect("cell determinant fits in i128").unsigned_abs();
    let factorial = |k: usize| (1..=k as u128).product::<u128>();
    let multinomial = faces.iter().fold(factorial(d), |acc, f| acc / factorial(f.len() - 1));
    u64::try_from(det * multinomial).expect("cell volume fits in u64")
}

/// All full-dimensional cells of the subdivision induced by `lifting`, sorted
/// by face indices.
pub fn induced_subdivision(supports: &[Support], lifting: &Lifting) -> Result<Vec<MixedCell>> {
    let first = supports.first().ok_or(Error::WrongArity { expected: 1, found: 0 })?;
    let n = first.dim();
    if let Some(s) = supports.iter().find(|s| s.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: s.dim() });
    }
    lifting.check(supports)?;

    let diffs: Vec<IntVector> = supports.iter().flat_map(|s| s.iter().map(move |p| p.sub(&s[0]))).collect();
    let basis = cone_span_basis(&diffs, n)?;
    let d = basis.len();
    // projected coordinates, injective on differences within a support
    let q: Vec<Vec<Vec<i128>>> =
        supports.iter().map(|s| s.iter().map(|p| basis.iter().map(|b| b.dot_unchecked(p)).collect()).collect()).collect();

    let mut search = Search { supports, lifting, q: &q, basis: &basis, d, chosen: Vec::new(), cells: Vec::new() };
    search.compose(0, d)?;
    let mut cells = search.cells;
    cells.sort_by(|a, b| a.face_indices.cmp(&b.face_indices));
    Ok(cells)
}

struct Search<'a> {
    supports: &'a [Support],
    lifting: &'a Lifting,
    q: &'a [Vec<Vec<i128>>],
    basis: &'a [IntVector],
    d: usize,
    chosen: Vec<Vec<usize>>,
    cells: Vec<MixedCell>,
}

impl Search<'_> {
    fn compose(&mut self, i: usize, remaining: usize) -> Result<()> {
        let m = self.supports.len();
        if i == m {
            if remaining == 0 {
                self.solve()?;
            }
            return Ok(());
        }
        let size = self.supports[i].len();
        for k in 0..=remaining.min(size - 1) {
            let mut idx: Vec<usize> = (0..=k).collect();
            loop {
                self.chosen.push(idx.clone());
                self.compose(i + 1, remaining - k)?;
                self.chosen.pop();
                if !next_combination(&mut idx, size) {
                    break;
                }
            }
        }
        Ok(())
    }

    fn solve(&mut self) -> Result<()> {
        let d = self.d;
        let h = &self.lifting.heights;
        let mut e: Vec<Vec<i128>> = Vec::with_capacity(d);
        let mut r: Vec<i128> = Vec::with_capacity(d);
        for (i, s) in self.chosen.iter().enumerate() {
            let base = s[0];
            for &t in &s[1..] {
                e.push((0..d).map(|c| self.q[i][t][c] - self.q[i][base][c]).collect());
                r.push(i128::from(h[i][base]) - i128::from(h[i][t]));
            }
        }
        let mut delta = det_i128(&e).ok_or(Error::Overflow)?;
        if delta == 0 {
            return Ok(());
        }
        // Cramer: x / delta solves e x = r
        let mut x: Vec<i128> = (0..d)
            .map(|j| {
                let m: Vec<Vec<i128>> = e
                    .iter()
                    .zip(&r)
                    .map(|(row, &rv)| row.iter().enumerate().map(|(c, &v)| if c == j { rv } else { v }).collect())
                    .collect();
                det_i128(&m).ok_or(Error::Overflow)
            })
            .collect::<Result<_>>()?;
        if delta < 0 {
            delta = -delta;
            x.iter_mut().for_each(|v| *v = -*v);
        }

        let mut faces_idx = Vec::with_capacity(self.supports.len());
        for (i, s) in self.chosen.iter().enumerate() {
            let scores: Vec<i128> = self.q[i]
                .iter()
                .zip(&h[i])
                .map(|(qa, &ha)| {
                    let lin = qa.iter().zip(&x).try_fold(0i128, |acc, (a, b)| acc.checked_add(a.checked_mul(*b)?));
                    lin.and_then(|l| l.checked_add(delta.checked_mul(i128::from(ha))?)).ok_or(Error::Overflow)
                })
                .collect::<Result<_>>()?;
            let best = *scores.iter().max().expect("support is nonempty");
            let f: Vec<usize> = (0..scores.len()).filter(|&k| scores[k] == best).collect();
            if !s.iter().all(|k| f.contains(k)) {
                return Ok(());
            }
            faces_idx.push(f);
        }
        if self.cells.iter().any(|c| c.face_indices == faces_idx) {
            return Ok(());
        }
        let n = self.supports[0].dim();
        let numer: Vec<i128> = (0..n)
            .map(|c| self.basis.iter().zip(&x).map(|(b, &xk)| i128::from(b[c]) * xk).sum())
            .collect();
        let faces = faces_idx
            .iter()
            .zip(self.supports)
            .map(|(f, s)| Support::new(f.iter().map(|&k| s[k].clone())))
            .collect::<Result<_>>()?;
        self.cells.push(MixedCell {
            faces,
            face_indices: faces_idx,
            dim: d,
            selector_numer: numer,
            selector_denom: delta * i128::from(self.lifting.denominator),
        });
        Ok(())
    }
}

/// Whether every cell is fine.
pub fn is_fine(cells: &[MixedCell]) -> bool {
    cells.iter().all(MixedCell::is_fine)
}

/// A fine subdivision together with the lifting that produced it.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub cells: Vec<MixedCell>,
    pub lifting: Lifting,
    /// Number of liftings tried, at least 1.
    pub attempts: u32,
}

impl Subdivision {
    /// The seed of the successful lifting.
    pub fn seed(&self) -> u64 {
        self.lifting.seed.expect("random lifting")
    }
}

/// Draws liftings from `seed`, `seed + 1`, ... until the induced subdivision
/// is fine.
pub fn generic_subdivision(supports: &[Support], seed: u64) -> Result<Subdivision> {
    let mut s = seed;
    for attempt in 1..=RETRY_CAP {
        let lifting = random_lifting(supports, s, DEFAULT_BOUND)?;
        let cells = induced_subdivision(supports, &lifting)?;
        if is_fine(&cells) {
            return Ok(Subdivision { cells, lifting, attempts: attempt });
        }
        s = s.wrapping_add(1);
    }
    Err(Error::GenericityFailure { attempts: RETRY_CAP, last_seed: s.wrapping_sub(1) })
}
