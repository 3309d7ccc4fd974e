//! Exact geometry of lattice point sets and lattice polytopes.

use std::fmt;
use std::ops::{Deref, Index};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp;

mod fan;
mod intmat;
mod snf;
mod volume;

pub use fan::{normal_fan, FaceCone, NormalFan};
pub use intmat::{affine_dim, determinant, rank};
pub(crate) use intmat::det_i128;
pub use snf::{cone_span_basis, hermite_normal_form, integer_kernel, smith_normal_form, SmithForm};
pub use volume::{cell_lattice_volume, facets, lattice_coordinates, Facet};
pub(crate) use volume::{express, next_combination};

/// A point of `Z^n`, also used for integer covectors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(Vec<i64>);

/// Integer covectors share the representation of points.
pub type Covector = IntVector;

impl IntVector {
    pub fn new(coords: Vec<i64>) -> IntVector {
        IntVector(coords)
    }

    pub fn zero(dim: usize) -> IntVector {
        IntVector(vec![0; dim])
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> IntVector {
        let mut v = vec![0; dim];
        v[i] = 1;
        IntVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    fn check_dim(&self, other: &IntVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &IntVector) -> Result<IntVector> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }

    pub fn checked_sub(&self, other: &IntVector) -> Result<IntVector> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }

    pub fn checked_scale(&self, k: i64) -> Result<IntVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }

    /// Pairing of a covector with a point.
    pub fn dot(&self, other: &IntVector) -> Result<i128> {
        self.check_dim(other)?;
        Ok(self.dot_unchecked(other))
    }

    /// Panics on dimension mismatch; for internal use on validated data.
    pub(crate) fn dot_unchecked(&self, other: &IntVector) -> i128 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in dot product");
        self.0.iter().zip(&other.0).map(|(&a, &b)| i128::from(a) * i128::from(b)).sum()
    }

    pub(crate) fn add(&self, other: &IntVector) -> IntVector {
        self.checked_add(other).expect("vector addition")
    }

    pub(crate) fn sub(&self, other: &IntVector) -> IntVector {
        self.checked_sub(other).expect("vector subtraction")
    }
}

impl Deref for IntVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> IntVector {
        IntVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> IntVector {
        IntVector(v.to_vec())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A nonempty finite set of lattice points of a common dimension, iterated in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Support {
    points: Vec<IntVector>,
}

impl Support {
    /// Sorts and deduplicates `points`.
    pub fn new(points: impl IntoIterator<Item = IntVector>) -> Result<Support> {
        let mut points: Vec<IntVector> = points.into_iter().collect();
        let first = points.first().ok_or(Error::EmptySupport)?;
        let dim = first.dim();
        if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        points.sort();
        points.dedup();
        Ok(Support { points })
    }

    /// Convenience constructor from coordinate arrays.
    pub fn from_coords<I, P>(points: I) -> Result<Support>
    where
        I: IntoIterator<Item = P>,
        P: Into<IntVector>,
    {
        Support::new(points.into_iter().map(Into::into))
    }

    pub fn points(&self) -> &[IntVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVector> {
        self.points.iter()
    }

    pub fn contains(&self, p: &IntVector) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Affine dimension of the point set.
    pub fn affine_dim(&self) -> usize {
        affine_dim(&self.points)
    }

    /// All points pairwise congruent modulo 2.
    pub fn is_two_vertex(&self) -> bool {
        let first = &self.points[0];
        self.points
            .iter()
            .all(|p| p.iter().zip(first.iter()).all(|(a, b)| (a - b).rem_euclid(2) == 0))
    }

    /// Applies an integer linear map given by its rows.
    pub fn map_linear(&self, rows: &[IntVector]) -> Result<Support> {
        Support::new(
            self.points
                .iter()
                .map(|p| rows.iter().map(|r| r.dot(p).and_then(narrow)).collect::<Result<Vec<_>>>().map(IntVector))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn translate(&self, t: &IntVector) -> Result<Support> {
        Support::new(self.points.iter().map(|p| p.checked_add(t)).collect::<Result<Vec<_>>>()?)
    }
}

impl Index<usize> for Support {
    type Output = IntVector;

    fn index(&self, i: usize) -> &IntVector {
        &self.points[i]
    }
}

impl<'a> IntoIterator for &'a Support {
    type Item = &'a IntVector;
    type IntoIter = std::slice::Iter<'a, IntVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

pub(crate) fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// A lattice polytope stored by its vertex set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePolytope {
    vertices: Support,
    dim: usize,
}

impl LatticePolytope {
    pub fn vertices(&self) -> &Support {
        &self.vertices
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices.dim()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_two_vertex(&self) -> bool {
        self.vertices.is_two_vertex()
    }

    /// Segment `conv{a, b}`.
    pub fn segment(a: impl Into<IntVector>, b: impl Into<IntVector>) -> Result<LatticePolytope> {
        convex_hull(&Support::new([a.into(), b.into()])?)
    }

    pub fn from_points<I, P>(points: I) -> Result<LatticePolytope>
    where
        I: IntoIterator<Item = P>,
        P: Into<IntVector>,
    {
        convex_hull(&Support::from_coords(points)?)
    }

    pub fn translate(&self, t: &IntVector) -> Result<LatticePolytope> {
        Ok(LatticePolytope { vertices: self.vertices.translate(t)?, dim: self.dim })
    }

    /// Image under a unimodular (or any injective) integer linear map.
    pub fn map_linear(&self, rows: &[IntVector]) -> Result<LatticePolytope> {
        convex_hull(&self.vertices.map_linear(rows)?)
    }

    /// Lattice-normalized volume in the lattice of its affine span.
    pub fn lattice_volume(&self) -> u64 {
        cell_lattice_volume(self.vertices.points())
    }
}

/// A face selected by a covector: the points of a set on which the covector
/// attains its maximum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    points: Support,
    selector: Option<Covector>,
}

impl Face {
    pub fn points(&self) -> &Support {
        &self.points
    }

    pub fn selector(&self) -> Option<&Covector> {
        self.selector.as_ref()
    }

    pub fn is_vertex(&self) -> bool {
        self.points.len() == 1
    }

    pub fn is_two_vertex(&self) -> bool {
        self.points.is_two_vertex()
    }
}

/// Vertex set of the convex hull of `points`.
///
/// A point is kept iff it does not lie in the convex hull of the remaining
/// points, decided by an exact rational feasibility problem.
pub fn convex_hull(points: &Support) -> Result<LatticePolytope> {
    let dim = points.affine_dim();
    if points.len() <= dim + 1 {
        // affinely independent: every point is a vertex
        return Ok(LatticePolytope { vertices: points.clone(), dim });
    }
    let mut keep: Vec<IntVector> = points.points().to_vec();
    let mut i = 0;
    while i < keep.len() {
        let p = keep[i].clone();
        let others: Vec<&IntVector> = keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q).collect();
        if !is_certainly_vertex(&p, &others) && lp::in_convex_hull(&p, &others) {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(LatticePolytope { vertices: Support::new(keep)?, dim })
}

/// Cheap sufficient test: `p` is the unique maximizer of a coordinate or of a
/// coordinate sum/difference.
fn is_certainly_vertex(p: &IntVector, others: &[&IntVector]) -> bool {
    let n = p.dim();
    let mut dirs: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut d = vec![0; n];
            d[i] = s;
            dirs.push(d);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut d = vec![0; n];
                d[i] = s;
                d[j] = t;
                dirs.push(d);
            }
        }
    }
    dirs.iter().any(|d| {
        let d = IntVector::new(d.clone());
        let vp = d.dot_unchecked(p);
        others.iter().all(|q| d.dot_unchecked(q) < vp)
    })
}

/// Minkowski sum `P + Q`.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), found: q.ambient_dim() });
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in p.vertices.iter() {
        for b in q.vertices.iter() {
            sums.push(a.checked_add(b)?);
        }
    }
    convex_hull(&Support::new(sums)?)
}

/// Minkowski sum of a nonempty list of polytopes.
pub fn minkowski_sum_all(polys: &[LatticePolytope]) -> Result<LatticePolytope> {
    let (first, rest) = polys.split_first().ok_or(Error::EmptySupport)?;
    rest.iter().try_fold(first.clone(), |acc, p| minkowski_sum(&acc, p))
}

/// The subset of `points` on which the covector `v` is maximal.
pub fn support_face(points: &Support, v: &Covector) -> Result<Face> {
    if points.dim() != v.dim() {
        return Err(Error::DimensionMismatch { expected: points.dim(), found: v.dim() });
    }
    let values: Vec<i128> = points.iter().map(|p| v.dot_unchecked(p)).collect();
    let max = *values.iter().max().expect("support is nonempty");
    let selected = points.iter().zip(&values).filter(|(_, &x)| x == max).map(|(p, _)| p.clone());
    Ok(Face { points: Support::new(selected)?, selector: Some(v.clone()) })
}

/// Support face of a polytope; its points are the maximizing vertices.
pub fn polytope_face(p: &LatticePolytope, v: &Covector) -> Result<Face> {
    support_face(&p.vertices, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sup(pts: &[&[i64]]) -> Support {
        Support::new(pts.iter().map(|p| IntVector::new(p.to_vec()))).unwrap()
    }

    #[test]
    fn hull_drops_midpoint() {
        let h = convex_hull(&sup(&[&[0, 0], &[1, 0], &[2, 0]])).unwrap();
        assert_eq!(h.vertices(), &sup(&[&[0, 0], &[2, 0]]));
        assert_eq!(h.dim(), 1);
    }

    #[test]
    fn hull_of_singleton() {
        let h = convex_hull(&sup(&[&[0, 0]])).unwrap();
        assert_eq!(h.vertices().len(), 1);
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn hull_removes_duplicates() {
        let h = convex_hull(&sup(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[1, 0]])).unwrap();
        assert_eq!(h.vertices(), &sup(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn hull_drops_interior_points() {
        let h = convex_hull(&sup(&[&[0, 0], &[4, 0], &[0, 4], &[1, 1], &[2, 2], &[1, 2]])).unwrap();
        assert_eq!(h.vertices(), &sup(&[&[0, 0], &[0, 4], &[4, 0]]));
    }

    #[test]
    fn minkowski_examples() {
        let a = LatticePolytope::from_points([[0], [1]]).unwrap();
        let b = LatticePolytope::from_points([[0], [2]]).unwrap();
        let s = minkowski_sum(&a, &b).unwrap();
        assert_eq!(s.vertices(), &sup(&[&[0], &[3]]));

        let sq = LatticePolytope::from_points([[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        let pt = LatticePolytope::from_points([[3, -1]]).unwrap();
        assert_eq!(minkowski_sum(&sq, &pt).unwrap(), sq.translate(&IntVector::from([3, -1])).unwrap());

        let big = minkowski_sum(&sq, &sq).unwrap();
        assert_eq!(big.vertices(), &sup(&[&[0, 0], &[0, 2], &[2, 0], &[2, 2]]));
    }

    #[test]
    fn minkowski_dimension_mismatch() {
        let a = LatticePolytope::from_points([[0], [1]]).unwrap();
        let b = LatticePolytope::from_points([[0, 0]]).unwrap();
        assert!(matches!(minkowski_sum(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn support_face_examples() {
        let sq = sup(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let f = support_face(&sq, &IntVector::from([1, 0])).unwrap();
        assert_eq!(f.points(), &sup(&[&[1, 0], &[1, 1]]));
        let f = support_face(&sq, &IntVector::from([1, 1])).unwrap();
        assert_eq!(f.points(), &sup(&[&[1, 1]]));
        let seg = sup(&[&[0], &[2]]);
        let f = support_face(&seg, &IntVector::from([0])).unwrap();
        assert_eq!(f.points(), &seg);
    }

    #[test]
    fn two_vertex() {
        assert!(sup(&[&[0, 0], &[2, 0]]).is_two_vertex());
        assert!(!sup(&[&[0, 0], &[1, 0]]).is_two_vertex());
        assert!(sup(&[&[-1, 3], &[1, 1], &[5, -7]]).is_two_vertex());
    }
}
