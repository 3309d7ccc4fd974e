//! Smith and Hermite normal forms, lattice spans and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intmat::to_i64;
use super::IntVector;
use crate::error::{Error, Result};

pub type BigMatrix = Vec<Vec<BigInt>>;

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: BigMatrix,
    pub v: BigMatrix,
    pub v_inv: BigMatrix,
    /// The nonzero invariant factors, all positive.
    pub diag: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

fn identity(n: usize) -> BigMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

struct Work {
    a: BigMatrix,
    u: BigMatrix,
    v: BigMatrix,
    v_inv: BigMatrix,
}

impl Work {
    // row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let rk = m[k].clone();
            for (x, y) in m[i].iter_mut().zip(&rk) {
                *x -= q * y;
            }
        }
    }

    fn row_swap(&mut self, i: usize, k: usize) {
        self.a.swap(i, k);
        self.u.swap(i, k);
    }

    fn row_neg(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -&*x;
            }
        }
    }

    // col_j -= q * col_k, so V_inv gets row_k += q * row_j
    fn col_sub(&mut self, j: usize, k: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let y = row[k].clone();
                row[j] -= q * y;
            }
        }
        let rj = self.v_inv[j].clone();
        for (x, y) in self.v_inv[k].iter_mut().zip(&rj) {
            *x += q * y;
        }
    }

    fn col_swap(&mut self, j: usize, k: usize) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                row.swap(j, k);
            }
        }
        self.v_inv.swap(j, k);
    }
}

/// Smith normal form of an `m x n` integer matrix given by rows.
pub fn smith_normal_form(rows: &[Vec<BigInt>], n: usize) -> SmithForm {
    let m = rows.len();
    let mut w = Work { a: rows.to_vec(), u: identity(m), v: identity(n), v_inv: identity(n) };
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&w.a, t) else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_sub(i, t, &q);
                    dirty |= !w.a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_sub(j, t, &q);
                    dirty |= !w.a[t][j].is_zero();
                }
            }
            if dirty {
                let (pi, pj) = smallest_nonzero(&w.a, t).expect("pivot region is nonzero");
                w.row_swap(t, pi);
                w.col_swap(t, pj);
                continue;
            }
            let p = w.a[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    // pull the offending row up and reduce again
                    let minus_one = -BigInt::one();
                    w.row_sub(t, i, &minus_one);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.row_neg(t);
        }
        diag.push(w.a[t][t].clone());
    }
    SmithForm { u: w.u, v: w.v, v_inv: w.v_inv, diag }
}

fn smallest_nonzero(a: &BigMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: nonzero rows
/// only, positive pivots, entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>], n: usize) -> BigMatrix {
    let mut a: BigMatrix = rows.to_vec();
    let mut r = 0;
    for c in 0..n {
        loop {
            let nz: Vec<usize> = (r..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            let Some(&p) = nz.iter().min_by_key(|&&i| a[i][c].abs()) else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[r][c]);
                    let pr = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x -= &q * y;
                    }
                    done &= a[i][c].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if !q.is_zero() {
                    let pr = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x -= &q * y;
                    }
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    a
}

pub(crate) fn to_big(rows: &[IntVector]) -> BigMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub(crate) fn from_big(rows: &[Vec<BigInt>]) -> Result<Vec<IntVector>> {
    rows.iter()
        .map(|r| r.iter().map(|x| to_i64(x).ok_or(Error::Overflow)).collect::<Result<Vec<_>>>().map(IntVector::new))
        .collect()
}

/// A basis of `span(vectors) ∩ Z^dim`, in Hermite normal form.
pub fn cone_span_basis(vectors: &[IntVector], dim: usize) -> Result<Vec<IntVector>> {
    if let Some(bad) = vectors.iter().find(|v| v.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
    }
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let snf = smith_normal_form(&to_big(vectors), dim);
    let basis: BigMatrix = snf.v_inv[..snf.rank()].to_vec();
    from_big(&hermite_normal_form(&basis, dim))
}

/// A basis of the integer kernel `{x in Z^n : M x = 0}` for `M` given by rows.
pub fn integer_kernel(rows: &[IntVector], n: usize) -> Result<Vec<IntVector>> {
    if rows.is_empty() {
        return Ok((0..n).map(|i| IntVector::unit(n, i)).collect());
    }
    let snf = smith_normal_form(&to_big(rows), n);
    let r = snf.rank();
    let cols: BigMatrix = (r..n).map(|j| snf.v.iter().map(|row| row[j].clone()).collect()).collect();
    from_big(&hermite_normal_form(&cols, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[&[i64]]) -> BigMatrix {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(a: &BigMatrix, b: &BigMatrix) -> BigMatrix {
        let k = b.len();
        let n = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|r| (0..n).map(|j| (0..k).map(|t| &r[t] * &b[t][j]).sum()).collect())
            .collect()
    }

    fn check_snf(m: &[&[i64]], n: usize, expect: &[i64]) {
        let a = big(m);
        let s = smith_normal_form(&a, n);
        let d = mul(&mul(&s.u, &a), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j && i < s.rank() { s.diag[i].clone() } else { BigInt::zero() };
                assert_eq!(x, &want);
            }
        }
        assert_eq!(mul(&s.v, &s.v_inv), identity(n));
        assert_eq!(s.diag, expect.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
    }

    #[test]
    fn snf_examples() {
        check_snf(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]], 3, &[2, 6, 12]);
        check_snf(&[&[2, 0], &[0, 3]], 2, &[1, 6]);
        check_snf(&[&[1, 2], &[2, 4]], 2, &[1]);
        check_snf(&[&[0, 0, 0]], 3, &[]);
        check_snf(&[&[4], &[6]], 1, &[2]);
    }

    #[test]
    fn hnf_example() {
        let h = hermite_normal_form(&big(&[&[2, 4], &[3, 5]]), 2);
        assert_eq!(h, big(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn span_basis_saturates() {
        let v = [IntVector::from([2, 2, 0]), IntVector::from([0, 2, 2])];
        let b = cone_span_basis(&v, 3).unwrap();
        assert_eq!(b, vec![IntVector::from([1, 0, -1]), IntVector::from([0, 1, 1])]);
        let b = cone_span_basis(&[IntVector::from([3, 6])], 2).unwrap();
        assert_eq!(b, vec![IntVector::from([1, 2])]);
    }

    #[test]
    fn kernel_example() {
        let k = integer_kernel(&[IntVector::from([1, 1, 1])], 3).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v.iter().sum::<i64>(), 0);
        }
        let k = integer_kernel(&[IntVector::from([2, 4])], 2).unwrap();
        assert_eq!(k, vec![IntVector::from([2, -1])]);
    }
}
