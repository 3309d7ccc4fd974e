//! Lattice mixed volume, the 2-intersection number and the 2-mixed volume.
//!
//! The 2-mixed volume `MV2(P_1, ..., P_n; zeta)` of lattice polytopes in
//! `Z^n` is the `F2` sum, over the mixed cells `E_1 + ... + E_n` of a generic
//! fine mixed subdivision of their vertex sets, of the 2-determinant of the
//! edge vectors and `zeta` taken modulo 2. It does not depend on the
//! subdivision when the tuple is 2-developed with respect to `zeta`: every
//! covector `v` with `v . zeta` odd selects a 2-vertex face of some `P_i`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::{det2, reduce_mod2};
use crate::lattice::{
    cone_span_basis, det_i128, minkowski_sum_all, normal_fan, polytope_face, Covector, IntVector, LatticePolytope,
    Support,
};
use crate::subdivision::{generic_subdivision, CellType, MixedCell, Subdivision};

fn check_square_tuple(polys: &[LatticePolytope]) -> Result<usize> {
    let first = polys.first().ok_or(Error::WrongArity { expected: 1, found: 0 })?;
    let n = first.ambient_dim();
    if let Some(p) = polys.iter().find(|p| p.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.ambient_dim() });
    }
    if polys.len() != n {
        return Err(Error::WrongArity { expected: n, found: polys.len() });
    }
    Ok(n)
}

fn vertex_supports(polys: &[LatticePolytope]) -> Vec<Support> {
    polys.iter().map(|p| p.vertices().clone()).collect()
}

/// Edge vectors `b - a` of the segments of a mixed cell.
fn edges(cell: &MixedCell) -> Vec<IntVector> {
    cell.faces().iter().map(|f| f[1].sub(&f[0])).collect()
}

/// `n! MV(P_1, ..., P_n)`, the number of roots of a generic system with these
/// Newton polytopes, using the lifting drawn from seed 0.
pub fn mixed_volume_lattice(polys: &[LatticePolytope]) -> Result<u64> {
    mixed_volume_lattice_seeded(polys, 0)
}

/// As [`mixed_volume_lattice`], with an explicit lifting seed. The value does
/// not depend on the seed.
pub fn mixed_volume_lattice_seeded(polys: &[LatticePolytope], seed: u64) -> Result<u64> {
    let n = check_square_tuple(polys)?;
    let sub = generic_subdivision(&vertex_supports(polys), seed)?;
    Ok(mixed_volume_of_cells(&sub.cells, n))
}

/// Sum of `|det(edges)|` over the mixed cells; zero if the cells are not
/// full-dimensional.
pub fn mixed_volume_of_cells(cells: &[MixedCell], n: usize) -> u64 {
    cells
        .iter()
        .filter(|c| c.dim() == n && c.cell_type() == CellType::Mixed)
        .map(|c| {
            let rows: Vec<Vec<i128>> = edges(c).iter().map(|e| e.iter().map(|&x| x.into()).collect()).collect();
            det_i128(&rows).expect("edge determinant fits in i128").unsigned_abs()
        })
        .sum::<u128>()
        .try_into()
        .expect("mixed volume fits in u64")
}

/// `F2` sum of `det2(e_1, ..., e_n, zeta)` over the mixed cells. Cells with a
/// single-point face meet no transverse intersection point and contribute
/// nothing.
pub fn intersection_number_2(cells: &[MixedCell], zeta: &IntVector) -> Result<u8> {
    let n = zeta.dim();
    let z = reduce_mod2(zeta);
    let mut total = 0u8;
    for cell in cells {
        if cell.faces().len() != n {
            return Err(Error::WrongArity { expected: n, found: cell.faces().len() });
        }
        if let Some(f) = cell.faces().iter().find(|f| f.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: f.dim() });
        }
        if cell.faces().iter().any(|f| f.len() == 1) {
            continue;
        }
        if cell.cell_type() != CellType::Mixed {
            return Err(Error::NonTransverse);
        }
        let mut k: Vec<_> = edges(cell).iter().map(reduce_mod2).collect();
        k.push(z);
        total ^= det2(&k)?;
    }
    Ok(total)
}

/// Arguments of the 2-mixed volume.
#[derive(Clone, Debug)]
pub struct MV2Query {
    pub polytopes: Vec<LatticePolytope>,
    pub zeta: IntVector,
}

impl MV2Query {
    pub fn new(polytopes: Vec<LatticePolytope>, zeta: IntVector) -> Result<MV2Query> {
        let n = check_square_tuple(&polytopes)?;
        if zeta.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: zeta.dim() });
        }
        Ok(MV2Query { polytopes, zeta })
    }
}

/// A 2-mixed volume together with the subdivision it was read from.
#[derive(Clone, Debug)]
pub struct MV2Value {
    pub value: u8,
    pub subdivision: Subdivision,
}

/// The 2-mixed volume, after checking that the tuple is 2-developed.
pub fn mv2(query: &MV2Query, seed: u64) -> Result<u8> {
    mv2_detailed(query, seed).map(|v| v.value)
}

pub fn mv2_detailed(query: &MV2Query, seed: u64) -> Result<MV2Value> {
    let report = is_2_developed(&query.polytopes, &query.zeta)?;
    if let Some(witness) = report.witness {
        return Err(Error::NotTwoDeveloped { witness });
    }
    iota2(&query.polytopes, &query.zeta, seed)
}

/// The 2-intersection number of a generic subdivision of the vertex sets,
/// without the developedness check.
pub fn iota2(polys: &[LatticePolytope], zeta: &IntVector, seed: u64) -> Result<MV2Value> {
    let n = check_square_tuple(polys)?;
    if zeta.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: zeta.dim() });
    }
    let subdivision = generic_subdivision(&vertex_supports(polys), seed)?;
    let value = if subdivision.cells.iter().all(|c| c.dim() == n) {
        intersection_number_2(&subdivision.cells, zeta)?
    } else {
        // lower-dimensional sums have no mixed cells
        0
    };
    Ok(MV2Value { value, subdivision })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Prickly,
    TwoDeveloped,
    Neither,
}

/// Outcome of [`is_2_developed`]; `witness` is present iff the verdict is
/// [`Verdict::Neither`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DevelopednessReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Covector>,
}

/// Whether every covector not orthogonal to `zeta` selects a vertex of some
/// `P_i`.
pub fn is_prickly(polys: &[LatticePolytope], zeta: &IntVector) -> Result<bool> {
    Ok(prickly_witness(polys, zeta)?.is_none())
}

/// A covector `v` with `v . zeta != 0` selecting no vertex, if one exists.
pub fn prickly_witness(polys: &[LatticePolytope], zeta: &IntVector) -> Result<Option<Covector>> {
    if zeta.is_zero() {
        return Err(Error::ZeroVector);
    }
    find_bad_cone(polys, zeta, |f| f.len() == 1, Parity::NonZero)
}

/// Decides whether the tuple is 2-developed with respect to `zeta`, and
/// whether it is even prickly.
pub fn is_2_developed(polys: &[LatticePolytope], zeta: &IntVector) -> Result<DevelopednessReport> {
    if let Some(witness) = find_bad_cone(polys, zeta, Support::is_two_vertex, Parity::Odd)? {
        return Ok(DevelopednessReport { verdict: Verdict::Neither, witness: Some(witness) });
    }
    let prickly = !zeta.is_zero() && prickly_witness(polys, zeta)?.is_none();
    let verdict = if prickly { Verdict::Prickly } else { Verdict::TwoDeveloped };
    Ok(DevelopednessReport { verdict, witness: None })
}

#[derive(Clone, Copy)]
enum Parity {
    Odd,
    NonZero,
}

impl Parity {
    fn bad(self, x: i128) -> bool {
        match self {
            Parity::Odd => x.rem_euclid(2) == 1,
            Parity::NonZero => x != 0,
        }
    }
}

/// Walks the normal cones of the Minkowski sum. On a cone where no component
/// face is `good`, the integer points of the relative interior are `v0 + L`
/// for an interior point `v0` and the lattice `L` of the cone's span, and
/// their values on `zeta` modulo 2 are those of `L`. A bad basis vector `b`
/// is pushed into the relative interior as `b + 2M v0`.
fn find_bad_cone(
    polys: &[LatticePolytope],
    zeta: &IntVector,
    good: impl Fn(&Support) -> bool,
    parity: Parity,
) -> Result<Option<Covector>> {
    let n = polys.first().ok_or(Error::WrongArity { expected: 1, found: 0 })?.ambient_dim();
    if let Some(p) = polys.iter().find(|p| p.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.ambient_dim() });
    }
    if zeta.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: zeta.dim() });
    }
    let sum = minkowski_sum_all(polys)?;
    let fan = normal_fan(&sum)?;
    for cone in &fan.faces {
        let v0 = &cone.interior;
        let components: Vec<Support> =
            polys.iter().map(|p| polytope_face(p, v0).map(|f| f.points().clone())).collect::<Result<_>>()?;
        if components.iter().any(&good) {
            continue;
        }
        let gens: Vec<IntVector> = cone.rays.iter().chain(&fan.lineality).cloned().collect();
        let basis = cone_span_basis(&gens, n)?;
        let Some(b) = basis.iter().find(|b| parity.bad(b.dot_unchecked(zeta))) else { continue };
        let step = v0.checked_scale(2)?;
        let mut v = b.clone();
        loop {
            let same = polys
                .iter()
                .zip(&components)
                .map(|(p, c)| polytope_face(p, &v).map(|f| f.points() == c))
                .collect::<Result<Vec<bool>>>()?;
            if same.iter().all(|&s| s) {
                return Ok(Some(v));
            }
            v = v.checked_add(&step)?;
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivision::{induced_subdivision, Lifting};

    fn poly<const N: usize>(pts: &[[i64; N]]) -> LatticePolytope {
        LatticePolytope::from_points(pts.iter().copied()).unwrap()
    }

    fn square() -> LatticePolytope {
        poly(&[[0, 0], [1, 0], [0, 1], [1, 1]])
    }

    #[test]
    fn mixed_volume_examples() {
        let a = poly(&[[0, 0], [1, 0]]);
        let b = poly(&[[0, 0], [0, 1]]);
        assert_eq!(mixed_volume_lattice(&[a, b]).unwrap(), 1);
        assert_eq!(mixed_volume_lattice(&[square(), square()]).unwrap(), 2);
        for d in 1..6 {
            assert_eq!(mixed_volume_lattice(&[poly(&[[0], [d]])]).unwrap(), d as u64);
        }
    }

    #[test]
    fn mixed_volume_arity() {
        assert!(matches!(mixed_volume_lattice(&[square()]), Err(Error::WrongArity { .. })));
    }

    #[test]
    fn iota2_single_cell() {
        let s = vec![Support::from_coords([[0, 0], [1, 0]]).unwrap(), Support::from_coords([[0, 0], [1, 1]]).unwrap()];
        let cells = induced_subdivision(&s, &Lifting::integral(vec![vec![0, 0], vec![0, 0]])).unwrap();
        assert_eq!(cells.len(), 1);
        assert_eq!(intersection_number_2(&cells, &IntVector::from([1, 0])).unwrap(), 1);
        assert_eq!(intersection_number_2(&cells, &IntVector::from([2, 4])).unwrap(), 0);
    }

    #[test]
    fn iota2_rejects_degenerate_cells() {
        let s = vec![Support::from_coords([[0, 0], [1, 0], [2, 0]]).unwrap(), Support::from_coords([[0, 0], [0, 1]]).unwrap()];
        let cells = induced_subdivision(&s, &Lifting::integral(vec![vec![0, 0, 0], vec![0, 0]])).unwrap();
        assert_eq!(intersection_number_2(&cells, &IntVector::from([1, 0])), Err(Error::NonTransverse));
    }

    #[test]
    fn mv2_univariate() {
        for d in 1..6i64 {
            for a in -3..4i64 {
                let q = MV2Query::new(vec![poly(&[[0], [d]])], IntVector::from([a])).unwrap();
                match mv2(&q, 0) {
                    Ok(v) => assert_eq!(i64::from(v), (d * a).rem_euclid(2)),
                    Err(Error::NotTwoDeveloped { .. }) => panic!("segments in Z^1 are 2-developed"),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn prickly_examples() {
        assert!(is_prickly(&[poly(&[[0], [1]])], &IntVector::from([1])).unwrap());
        let w = prickly_witness(&[square(), square()], &IntVector::from([1, 1])).unwrap();
        assert_eq!(w, Some(IntVector::from([1, 0])));
        assert!(is_prickly(&[poly(&[[1, 1]]), poly(&[[0, 3]])], &IntVector::from([1, 1])).unwrap());
        assert_eq!(is_prickly(&[square(), square()], &IntVector::from([0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn developed_examples() {
        let r = is_2_developed(&[square(), square()], &IntVector::from([1, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::Neither);
        assert_eq!(r.witness, Some(IntVector::from([1, 0])));

        let even = [poly(&[[0, 0], [2, 0]]), poly(&[[0, 0], [0, 2]])];
        for z in [[1, 0], [0, 1], [1, 1], [3, 5]] {
            let r = is_2_developed(&even, &IntVector::from(z)).unwrap();
            assert_ne!(r.verdict, Verdict::Neither);
        }
        let r = is_2_developed(&[poly(&[[0], [1]])], &IntVector::from([1])).unwrap();
        assert_eq!(r.verdict, Verdict::Prickly);
    }

    #[test]
    fn mv2_rejects_undeveloped() {
        let q = MV2Query::new(vec![square(), square()], IntVector::from([1, 1])).unwrap();
        assert_eq!(mv2(&q, 0), Err(Error::NotTwoDeveloped { witness: IntVector::from([1, 0]) }));
    }
}
