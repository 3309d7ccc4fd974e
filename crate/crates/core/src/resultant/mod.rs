//! Sparse resultant combinatorics and the sign of ratios of its extreme
//! coefficients.
//!
//! For supports `A_0, ..., A_n` in `Z^n`, the vertices of the Newton polytope
//! of the sparse resultant correspond to coherent mixed subdivisions of
//! `A_0 + ... + A_n`. Given two gradings `gamma`, `sigma` selecting vertices,
//! the ratio of the corresponding coefficients has sign
//! `(-1)^(MV + MV2)`, both read off the Khovanskii polytopes
//! `P_i = conv({(a, gamma_{i,a})} U {(a, -sigma_{i,a})})` in `Z^(n+1)` with
//! `zeta = (0, ..., 0, 1)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{affine_dim, convex_hull, smith_normal_form, IntVector, LatticePolytope, Support};
use crate::mvol::{iota2, is_2_developed, mixed_volume_lattice_seeded};
use crate::subdivision::{generic_subdivision, induced_subdivision, is_fine, CellType, Lifting, MixedCell};
use crate::Sign;

mod sylvester;

pub use sylvester::{leading_coefficient, univariate_resultant, Polynomial};

/// Supports `A_0, ..., A_n` in `Z^n` of codimension `-1` that affinely
/// generate `Z^n`.
///
/// Coefficients `c_{i,a}` are indexed in the declared order of the points;
/// gradings and vertex exponent vectors use that order.
#[derive(Clone, Debug)]
pub struct ResultantInput {
    declared: Vec<Vec<IntVector>>,
    supports: Vec<Support>,
    // declared position -> position in the sorted support
    to_sorted: Vec<Vec<usize>>,
}

impl ResultantInput {
    pub fn new(declared: Vec<Vec<IntVector>>) -> Result<ResultantInput> {
        let invalid = |msg: String| Err(Error::InvalidResultantInput(msg));
        let n = declared.first().and_then(|s| s.first()).map(IntVector::dim).ok_or(Error::EmptySupport)?;
        if declared.len() != n + 1 {
            return Err(Error::WrongArity { expected: n + 1, found: declared.len() });
        }
        let mut supports = Vec::with_capacity(declared.len());
        let mut to_sorted = Vec::with_capacity(declared.len());
        for (i, pts) in declared.iter().enumerate() {
            let s = Support::new(pts.iter().cloned())?;
            if s.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: s.dim() });
            }
            if s.len() != pts.len() {
                return invalid(format!("support {i} has repeated points"));
            }
            to_sorted.push(pts.iter().map(|p| s.points().binary_search(p).expect("point of the support")).collect());
            supports.push(s);
        }
        let c = tuple_codim(&supports);
        if c != -1 {
            return invalid(format!("codimension is {c}, expected -1"));
        }
        let diffs: Vec<Vec<BigInt>> = supports
            .iter()
            .flat_map(|s| s.iter().map(move |p| p.sub(&s[0]).iter().map(|&x| BigInt::from(x)).collect()))
            .collect();
        let snf = smith_normal_form(&diffs, n);
        if snf.rank() != n || snf.diag.iter().any(|d| *d != BigInt::from(1)) {
            return invalid("supports do not affinely generate the lattice".into());
        }
        Ok(ResultantInput { declared, supports, to_sorted })
    }

    pub fn from_coords(supports: &[&[&[i64]]]) -> Result<ResultantInput> {
        ResultantInput::new(supports.iter().map(|s| s.iter().map(|p| IntVector::new(p.to_vec())).collect()).collect())
    }

    /// Dimension `n` of the lattice.
    pub fn dim(&self) -> usize {
        self.supports.len() - 1
    }

    /// Supports in canonical (sorted) order.
    pub fn supports(&self) -> &[Support] {
        &self.supports
    }

    /// Points in declared order.
    pub fn declared(&self) -> &[Vec<IntVector>] {
        &self.declared
    }

    /// Total number of coefficients.
    pub fn num_coefficients(&self) -> usize {
        self.declared.iter().map(Vec::len).sum()
    }

    /// Names `a_0, a_1, ..., b_0, ...` in declared order.
    pub fn coefficient_names(&self) -> Vec<String> {
        self.declared
            .iter()
            .enumerate()
            .flat_map(|(i, s)| {
                let letter = if i < 26 { char::from(b'a' + i as u8).to_string() } else { format!("c{i}_") };
                (0..s.len()).map(move |k| format!("{letter}_{k}"))
            })
            .collect()
    }

    /// Flat coefficient index of the point at sorted position `k` of support `i`.
    fn flat_index(&self, i: usize, k: usize) -> usize {
        let offset: usize = self.declared[..i].iter().map(Vec::len).sum();
        offset + self.to_sorted[i].iter().position(|&s| s == k).expect("point of the support")
    }
}

/// `dim(sum of A_i, i in I) - |I|`.
pub fn codim(supports: &[Support], subset: &[usize]) -> i64 {
    let diffs: Vec<IntVector> =
        subset.iter().flat_map(|&i| supports[i].iter().map(move |p| p.sub(&supports[i][0]))).collect();
    let dim = if diffs.is_empty() { 0 } else { affine_dim(&[vec![IntVector::zero(supports[0].dim())], diffs].concat()) };
    dim as i64 - subset.len() as i64
}

/// Minimum of [`codim`] over nonempty subsets.
pub fn tuple_codim(supports: &[Support]) -> i64 {
    let m = supports.len();
    (1u64..1 << m)
        .map(|mask| codim(supports, &(0..m).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>()))
        .min()
        .unwrap_or(0)
}

/// Strictly positive integer weights on the coefficients, in declared order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    weights: Vec<i64>,
}

impl Grading {
    pub fn new(input: &ResultantInput, weights: Vec<i64>) -> Result<Grading> {
        if weights.len() < input.num_coefficients() {
            let (support, point) = locate(input, weights.len());
            return Err(Error::MissingWeight { support, point });
        }
        if weights.len() > input.num_coefficients() {
            return Err(Error::DimensionMismatch { expected: input.num_coefficients(), found: weights.len() });
        }
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(Grading { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Pairing with an exponent vector.
    pub fn value(&self, exponents: &[u64]) -> i128 {
        self.weights.iter().zip(exponents).map(|(&w, &e)| i128::from(w) * i128::from(e)).sum()
    }

    fn at(&self, input: &ResultantInput, i: usize, k: usize) -> i64 {
        self.weights[input.flat_index(i, k)]
    }
}

fn locate(input: &ResultantInput, flat: usize) -> (usize, usize) {
    let mut rest = flat;
    for (i, s) in input.declared.iter().enumerate() {
        if rest < s.len() {
            return (i, rest);
        }
        rest -= s.len();
    }
    (input.declared.len(), 0)
}

/// A vertex of the Newton polytope of the resultant, as exponents of the
/// coefficients in declared order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ResultantVertex {
    pub exponents: Vec<u64>,
    /// Seed of the lifting that produced it, if random.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Reads a vertex off a fine subdivision: each cell `{a} + E_1 + ... + E_n`
/// with `{a}` from `A_j` and segments `E_k` adds its normalized volume to the
/// exponent of `c_{j,a}`. Other cells contribute nothing.
pub fn vertex_from_cells(input: &ResultantInput, cells: &[MixedCell]) -> Result<Vec<u64>> {
    if !is_fine(cells) {
        return Err(Error::NotFine);
    }
    let mut exps = vec![0u64; input.num_coefficients()];
    for cell in cells.iter().filter(|c| c.cell_type() == CellType::SemiMixed) {
        let j = cell.face_indices().iter().position(|f| f.len() == 1).expect("semi-mixed cell has a point");
        let k = cell.face_indices()[j][0];
        exps[input.flat_index(j, k)] += cell.lattice_volume();
    }
    Ok(exps)
}

/// The vertex picked out by a given lifting; fails with `NotFine` on
/// nongeneric heights.
pub fn resultant_vertex_from_lifting(input: &ResultantInput, lifting: &Lifting) -> Result<ResultantVertex> {
    let cells = induced_subdivision(&input.supports, lifting)?;
    Ok(ResultantVertex { exponents: vertex_from_cells(input, &cells)?, seed: lifting.seed })
}

/// Vertices found by sampling `budget` random liftings.
#[derive(Clone, Debug, Serialize)]
pub struct SampledVertices {
    pub vertices: Vec<Vec<u64>>,
    pub seeds_used: u64,
}

/// Distinct vertices reached from liftings seeded `base_seed`,
/// `base_seed + 1`, ..., sorted.
pub fn resultant_vertices(input: &ResultantInput, budget: u64, base_seed: u64) -> Result<SampledVertices> {
    let mut found = BTreeSet::new();
    for s in 0..budget {
        let sub = generic_subdivision(&input.supports, base_seed.wrapping_add(s))?;
        found.insert(vertex_from_cells(input, &sub.cells)?);
    }
    Ok(SampledVertices { vertices: found.into_iter().collect(), seeds_used: budget })
}

/// The tuple `P_0, ..., P_n` in `Z^(n+1)`.
#[derive(Clone, Debug)]
pub struct KhovanskiiPolytopes {
    pub polytopes: Vec<LatticePolytope>,
    /// The doubled supports `{(a, gamma_a)} U {(a, -sigma_a)}`.
    pub lifted_supports: Vec<Support>,
}

pub fn khovanskii_polytopes(input: &ResultantInput, gamma: &Grading, sigma: &Grading) -> Result<KhovanskiiPolytopes> {
    for g in [gamma, sigma] {
        if g.weights.len() != input.num_coefficients() {
            return Err(Error::DimensionMismatch { expected: input.num_coefficients(), found: g.weights.len() });
        }
    }
    let mut polytopes = Vec::new();
    let mut lifted_supports = Vec::new();
    for (i, s) in input.supports.iter().enumerate() {
        let mut pts = Vec::with_capacity(2 * s.len());
        for (k, a) in s.iter().enumerate() {
            for h in [gamma.at(input, i, k), -sigma.at(input, i, k)] {
                let mut c = a.coords().to_vec();
                c.push(h);
                pts.push(IntVector::new(c));
            }
        }
        let lifted = Support::new(pts)?;
        polytopes.push(convex_hull(&lifted)?);
        lifted_supports.push(lifted);
    }
    Ok(KhovanskiiPolytopes { polytopes, lifted_supports })
}

/// How to confirm that a grading selects a single vertex of the resultant's
/// Newton polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexCheck {
    /// Require a unique maximum among the vertices found from this many
    /// random liftings.
    Sampled(u64),
    /// Assume it.
    Trust,
}

/// Sign of `r_gamma / r_sigma` with the parities it is built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignRatio {
    pub ratio: Sign,
    /// The root count `MV(P_0, ..., P_n)`.
    pub mixed_volume: u64,
    pub mv_parity: u8,
    pub mv2: u8,
    pub seed: u64,
}

/// `(-1)^MV(P) * (-1)^MV2(P; e_{n+1})` for the Khovanskii polytopes of the
/// two gradings.
pub fn leading_sign_ratio(
    input: &ResultantInput,
    gamma: &Grading,
    sigma: &Grading,
    seed: u64,
    check: VertexCheck,
) -> Result<SignRatio> {
    if let VertexCheck::Sampled(budget) = check {
        let sampled = resultant_vertices(input, budget, seed)?;
        for (name, g) in [("gamma", gamma), ("sigma", sigma)] {
            selected_vertex(&sampled.vertices, g).ok_or_else(|| Error::GradingTie(name.into()))?;
        }
    }
    let k = khovanskii_polytopes(input, gamma, sigma)?;
    let n1 = input.dim() + 1;
    let zeta = IntVector::unit(n1, n1 - 1);
    let report = is_2_developed(&k.polytopes, &zeta)?;
    if let Some(witness) = report.witness {
        return Err(Error::NotTwoDeveloped { witness });
    }
    let mixed_volume = mixed_volume_lattice_seeded(&k.polytopes, seed)?;
    let mv2 = iota2(&k.polytopes, &zeta, seed)?.value;
    let mv_parity = (mixed_volume % 2) as u8;
    Ok(SignRatio { ratio: Sign::from_parity(u64::from(mv_parity ^ mv2)), mixed_volume, mv_parity, mv2, seed })
}

/// The unique vertex maximizing the grading, if the maximum is unique.
pub fn selected_vertex<'a>(vertices: &'a [Vec<u64>], g: &Grading) -> Option<&'a Vec<u64>> {
    let best = vertices.iter().map(|v| g.value(v)).max()?;
    let mut top = vertices.iter().filter(|v| g.value(v) == best);
    let first = top.next()?;
    top.next().is_none().then_some(first)
}
