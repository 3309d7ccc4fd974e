//! Facets and lattice-normalized volumes.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::intmat::{det_i128, primitive};
use super::snf::{cone_span_basis, to_big};
use super::{affine_dim, IntVector};

/// A facet `{x : normal . x = offset}` of a full-dimensional point set, with
/// `normal . x <= offset` on the whole set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive outer normal.
    pub normal: IntVector,
    pub offset: i128,
    /// Indices of the input points lying on the facet.
    pub points: Vec<usize>,
}

/// Coordinates of `points - points[0]` in a basis of the saturated lattice
/// spanned by those differences, together with that basis (rows).
pub fn lattice_coordinates(points: &[IntVector]) -> (Vec<IntVector>, Vec<IntVector>) {
    let Some(p0) = points.first() else { return (Vec::new(), Vec::new()) };
    let n = p0.dim();
    let diffs: Vec<IntVector> = points.iter().map(|p| p.sub(p0)).collect();
    let basis = cone_span_basis(&diffs, n).expect("coordinates fit in i64");
    let coords = diffs.iter().map(|x| express(x, &basis)).collect();
    (coords, basis)
}

/// Coefficients of `x` in an echelon basis with `x` in its span.
pub(crate) fn express(x: &IntVector, basis: &[IntVector]) -> IntVector {
    let mut rest: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
    let rows = to_big(basis);
    let mut coef = Vec::with_capacity(basis.len());
    for row in &rows {
        let piv = row.iter().position(|c| !c.is_zero()).expect("basis rows are nonzero");
        let q = &rest[piv] / &row[piv];
        debug_assert!((&q * &row[piv]) == rest[piv], "point is not in the lattice span");
        for (r, b) in rest.iter_mut().zip(row) {
            *r -= &q * b;
        }
        coef.push(i64::try_from(&q).expect("coordinate fits in i64"));
    }
    debug_assert!(rest.iter().all(Zero::is_zero), "point is not in the span");
    IntVector::new(coef)
}

/// Facets of a full-dimensional point set in `Z^d`, `d >= 1`, by brute force
/// over `d`-subsets.
pub fn facets(points: &[IntVector]) -> Vec<Facet> {
    let d = points.first().map_or(0, IntVector::dim);
    assert!(d >= 1, "facets need dimension at least 1");
    debug_assert_eq!(affine_dim(points), d, "point set must be full-dimensional");
    if d == 1 {
        let (lo, hi) = points.iter().fold((i64::MAX, i64::MIN), |(lo, hi), p| (lo.min(p[0]), hi.max(p[0])));
        let on = |t: i64| points.iter().enumerate().filter(|(_, p)| p[0] == t).map(|(i, _)| i).collect();
        return vec![
            Facet { normal: IntVector::from([1]), offset: hi.into(), points: on(hi) },
            Facet { normal: IntVector::from([-1]), offset: (-lo).into(), points: on(lo) },
        ];
    }
    let mut out: Vec<Facet> = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        if let Some(f) = facet_through(points, &idx) {
            if !out.iter().any(|g| g.normal == f.normal) {
                out.push(f);
            }
        }
        if !next_combination(&mut idx, points.len()) {
            break;
        }
    }
    out
}

fn facet_through(points: &[IntVector], idx: &[usize]) -> Option<Facet> {
    let d = points[0].dim();
    let base = &points[idx[0]];
    let w: Vec<Vec<i128>> = idx[1..].iter().map(|&i| points[i].sub(base).iter().map(|&c| c.into()).collect()).collect();
    // generalized cross product of the d-1 difference vectors
    let mut normal = Vec::with_capacity(d);
    for k in 0..d {
        let minor: Vec<Vec<i128>> =
            w.iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect()).collect();
        let m = det_i128(&minor).expect("facet normal fits in i128");
        normal.push(BigInt::from(if k % 2 == 0 { m } else { -m }));
    }
    if normal.iter().all(Zero::is_zero) {
        return None;
    }
    let normal: Vec<i64> = primitive(&normal).iter().map(|x| i64::try_from(x).expect("normal fits in i64")).collect();
    let mut normal = IntVector::new(normal);
    let h = normal.dot_unchecked(base);
    let vals: Vec<i128> = points.iter().map(|p| normal.dot_unchecked(p)).collect();
    let (above, below) = vals.iter().fold((false, false), |(a, b), &v| (a || v > h, b || v < h));
    if above && below {
        return None;
    }
    let mut offset = h;
    if above {
        normal = normal.checked_scale(-1).expect("negation");
        offset = -h;
    }
    let on = vals.iter().enumerate().filter(|(_, &v)| v == h).map(|(i, _)| i).collect();
    Some(Facet { normal, offset, points: on })
}

pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Normalized volume `d! vol` of `conv(points)` in the lattice of its affine
/// span, where `d` is its affine dimension. A point has volume 1.
pub fn cell_lattice_volume(points: &[IntVector]) -> u64 {
    if points.is_empty() {
        return 0;
    }
    let (coords, basis) = lattice_coordinates(points);
    let d = basis.len();
    if d == 0 {
        return 1;
    }
    let v = normalized_volume(&coords, d);
    u64::try_from(v).expect("volume fits in u64")
}

fn normalized_volume(coords: &[IntVector], d: usize) -> BigInt {
    if d == 1 {
        let lo = coords.iter().map(|p| p[0]).min().unwrap();
        let hi = coords.iter().map(|p| p[0]).max().unwrap();
        return BigInt::from(hi - lo);
    }
    if coords.len() == d + 1 {
        let base = &coords[0];
        let rows: Vec<Vec<i128>> =
            coords[1..].iter().map(|p| p.sub(base).iter().map(|&c| c.into()).collect()).collect();
        return BigInt::from(det_i128(&rows).expect("simplex volume fits in i128")).abs();
    }
    // pyramid decomposition from the first point
    let apex = &coords[0];
    let mut total = BigInt::zero();
    for f in facets(coords) {
        let dist = f.offset - f.normal.dot_unchecked(apex);
        if dist == 0 {
            continue;
        }
        let pts: Vec<IntVector> = f.points.iter().map(|&i| coords[i].clone()).collect();
        total += BigInt::from(dist) * BigInt::from(cell_lattice_volume(&pts));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<IntVector> {
        v.iter().map(|r| IntVector::new(r.to_vec())).collect()
    }

    // twice the area, by the shoelace formula on a convex polygon
    fn shoelace2(poly: &[(i64, i64)]) -> i64 {
        let n = poly.len();
        (0..n).map(|i| poly[i].0 * poly[(i + 1) % n].1 - poly[(i + 1) % n].0 * poly[i].1).sum::<i64>().abs()
    }

    #[test]
    fn volumes() {
        assert_eq!(cell_lattice_volume(&pts(&[&[3, 3]])), 1);
        assert_eq!(cell_lattice_volume(&pts(&[&[0, 0], &[4, 6]])), 2);
        assert_eq!(cell_lattice_volume(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])), 2);
        assert_eq!(cell_lattice_volume(&pts(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0]])), 4);
        let cube: Vec<IntVector> =
            (0..8).map(|m| IntVector::new(vec![m & 1, (m >> 1) & 1, (m >> 2) & 1])).collect();
        assert_eq!(cell_lattice_volume(&cube), 6);
        // a hexagon in a tilted plane of Z^3
        let hex = [(0, 0), (2, 0), (3, 1), (3, 3), (1, 2), (0, 1)];
        let lifted: Vec<IntVector> = hex.iter().map(|&(x, y)| IntVector::new(vec![x, y, x + 2 * y])).collect();
        assert_eq!(cell_lattice_volume(&lifted) as i64, shoelace2(&hex));
    }

    #[test]
    fn square_facets() {
        let f = facets(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(f.len(), 4);
        for g in &f {
            assert_eq!(g.points.len(), 2);
        }
    }
}
