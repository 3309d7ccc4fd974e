//! Face lattice and normal cones of a lattice polytope.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::snf::{from_big, smith_normal_form, to_big};
use super::volume::{facets, lattice_coordinates};
use super::{integer_kernel, IntVector, LatticePolytope};
use crate::error::Result;

/// A face `G` of a polytope together with its normal cone
/// `cone(rays) + lineality`.
#[derive(Clone, Debug)]
pub struct FaceCone {
    /// Vertices of the face.
    pub vertices: Vec<IntVector>,
    /// Outer normals of the facets containing the face.
    pub rays: Vec<IntVector>,
    /// A covector in the relative interior of the cone; it selects exactly
    /// this face.
    pub interior: IntVector,
}

#[derive(Clone, Debug)]
pub struct NormalFan {
    /// Lattice basis of the orthogonal complement of the affine span.
    pub lineality: Vec<IntVector>,
    /// Every nonempty face, the polytope itself included.
    pub faces: Vec<FaceCone>,
}

/// The normal fan of `p`, face by face.
pub fn normal_fan(p: &LatticePolytope) -> Result<NormalFan> {
    let verts = p.vertices().points();
    let n = p.ambient_dim();
    let (coords, basis) = lattice_coordinates(verts);
    let lineality = integer_kernel(&basis, n)?;
    let d = basis.len();
    let whole = FaceCone { vertices: verts.to_vec(), rays: Vec::new(), interior: IntVector::zero(n) };
    if d == 0 {
        return Ok(NormalFan { lineality, faces: vec![whole] });
    }
    let lift = Lifter::new(&basis, n);
    let fs = facets(&coords);
    let normals: Vec<IntVector> = fs.iter().map(|f| lift.lift(&f.normal)).collect::<Result<_>>()?;
    let sets: Vec<BTreeSet<usize>> = fs.iter().map(|f| f.points.iter().copied().collect()).collect();

    // close the facets under intersection, level by level
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut level: Vec<BTreeSet<usize>> = sets.clone();
    let mut all: Vec<BTreeSet<usize>> = Vec::new();
    while !level.is_empty() {
        let mut next = Vec::new();
        for g in level {
            if !seen.insert(g.iter().copied().collect()) {
                continue;
            }
            for s in &sets {
                let h: BTreeSet<usize> = g.intersection(s).copied().collect();
                if !h.is_empty() && h.len() < g.len() {
                    next.push(h);
                }
            }
            all.push(g);
        }
        level = next;
    }

    let mut faces = vec![whole];
    for g in all {
        let rays: Vec<IntVector> =
            sets.iter().zip(&normals).filter(|(s, _)| g.is_subset(s)).map(|(_, v)| v.clone()).collect();
        let interior = rays.iter().skip(1).try_fold(rays[0].clone(), |acc, r| acc.checked_add(r))?;
        faces.push(FaceCone { vertices: g.iter().map(|&i| verts[i].clone()).collect(), rays, interior });
    }
    // larger faces first, then by selecting covector, for reproducible output
    faces.sort_by(|a, b| b.vertices.len().cmp(&a.vertices.len()).then_with(|| b.interior.cmp(&a.interior)));
    Ok(NormalFan { lineality, faces })
}

/// Lifts covectors on a saturated sublattice with basis `B` to covectors on
/// `Z^n`, i.e. solves `B w = a`.
struct Lifter {
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    r: usize,
}

impl Lifter {
    fn new(basis: &[IntVector], n: usize) -> Lifter {
        let s = smith_normal_form(&to_big(basis), n);
        debug_assert!(s.diag.iter().all(|x| *x == BigInt::from(1)), "basis must be saturated");
        Lifter { u: s.u, v: s.v, r: s.diag.len() }
    }

    fn lift(&self, a: &IntVector) -> Result<IntVector> {
        let n = self.v.len();
        let mut y = vec![BigInt::zero(); n];
        for (i, yi) in y.iter_mut().enumerate().take(self.r) {
            *yi = self.u[i].iter().zip(a.iter()).map(|(x, &c)| x * BigInt::from(c)).sum();
        }
        let w: Vec<BigInt> = self.v.iter().map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum()).collect();
        Ok(from_big(&[w])?.remove(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::polytope_face;

    #[test]
    fn square_fan() {
        let sq = LatticePolytope::from_points([[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        let fan = normal_fan(&sq).unwrap();
        assert!(fan.lineality.is_empty());
        // 1 polygon + 4 edges + 4 vertices
        assert_eq!(fan.faces.len(), 9);
        for f in &fan.faces {
            let sel = polytope_face(&sq, &f.interior).unwrap();
            assert_eq!(sel.points().points(), &f.vertices[..]);
        }
    }

    #[test]
    fn tilted_segment_fan() {
        let seg = LatticePolytope::from_points([[0, 0, 0], [2, 1, 3]]).unwrap();
        let fan = normal_fan(&seg).unwrap();
        assert_eq!(fan.lineality.len(), 2);
        assert_eq!(fan.faces.len(), 3);
        for f in &fan.faces {
            let sel = polytope_face(&seg, &f.interior).unwrap();
            assert_eq!(sel.points().points(), &f.vertices[..]);
            for l in &fan.lineality {
                assert_eq!(l.dot(&IntVector::from([2, 1, 3])).unwrap(), 0);
            }
        }
    }
}
