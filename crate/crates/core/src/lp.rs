//! Exact feasibility of `A x = b, x >= 0` by a phase-one simplex over the
//! rationals with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::IntVector;

/// A nonnegative solution of `A x = b`, if any.
pub fn feasible(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    // tableau columns: n structural, m artificial, then the right-hand side
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for x in &a[i] {
            let v = BigRational::from_integer(x.clone());
            row.push(if flip { -v } else { v });
        }
        for k in 0..m {
            row.push(if k == i { BigRational::one() } else { BigRational::zero() });
        }
        row.push(BigRational::from_integer(b[i].abs()));
        t.push(row);
    }
    // objective: minimize the sum of artificials, kept as reduced costs
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(e) = (0..n + m).find(|&j| t[m][j].is_negative()) else { break };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][e].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let r = &t[i][width - 1] / &t[i][e];
                    let s = &t[l][width - 1] / &t[l][e];
                    r < s || (r == s && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        let l = leave.expect("phase one objective is bounded below");
        pivot(&mut t, l, e);
        basis[l] = e;
    }
    if !t[m][width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<BigRational>], l: usize, e: usize) {
    let p = t[l][e].clone();
    for x in t[l].iter_mut() {
        *x /= &p;
    }
    let prow = t[l].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == l || row[e].is_zero() {
            continue;
        }
        let f = row[e].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

/// Whether `p` is a convex combination of `others`.
pub fn in_convex_hull(p: &IntVector, others: &[&IntVector]) -> bool {
    if others.is_empty() {
        return false;
    }
    let n = p.dim();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|k| others.iter().map(|q| BigInt::from(q[k])).collect()).collect();
    a.push(vec![BigInt::one(); others.len()]);
    let mut b: Vec<BigInt> = p.iter().map(|&c| BigInt::from(c)).collect();
    b.push(BigInt::one());
    feasible(&a, &b).is_some()
}
