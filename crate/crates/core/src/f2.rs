//! Linear algebra over `F2` and the 2-determinant.
//!
//! The 2-determinant of `n + 1` vectors `k_1, ..., k_{n+1}` in `F2^n` is zero
//! when they have rank below `n`. Otherwise they satisfy a unique nonzero
//! relation `sum lambda_i k_i = 0`, and the value is `lambda_1 + ... +
//! lambda_{n+1} + 1`. [`det2`] evaluates it through the pairwise determinant
//! expansion and [`det2_oracle`] straight from the relation.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::IntVector;

/// Largest supported dimension; vectors are single machine words.
pub const MAX_DIM: usize = 64;

/// A vector in `F2^len`, coordinate `i` stored in bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct F2Vector {
    bits: u64,
    len: usize,
}

impl F2Vector {
    /// Panics if `len > 64`; excess high bits are dropped.
    pub fn new(len: usize, bits: u64) -> F2Vector {
        assert!(len <= MAX_DIM, "F2 vectors hold at most {MAX_DIM} coordinates");
        F2Vector { bits: bits & mask(len), len }
    }

    pub fn zero(len: usize) -> F2Vector {
        F2Vector::new(len, 0)
    }

    /// From a slice of 0/1 entries (any odd value counts as 1).
    pub fn from_bits(bits: &[u8]) -> F2Vector {
        let word = bits.iter().enumerate().fold(0u64, |w, (i, &b)| w | (u64::from(b & 1) << i));
        F2Vector::new(bits.len(), word)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len, "index out of range");
        ((self.bits >> i) & 1) as u8
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinatewise product.
    pub fn hadamard(&self, other: &F2Vector) -> F2Vector {
        F2Vector { bits: self.bits & other.bits, len: self.len }
    }

    /// Standard inner product.
    pub fn dot(&self, other: &F2Vector) -> u8 {
        ((self.bits & other.bits).count_ones() & 1) as u8
    }
}

impl std::ops::Add for F2Vector {
    type Output = F2Vector;

    fn add(self, rhs: F2Vector) -> F2Vector {
        assert_eq!(self.len, rhs.len, "dimension mismatch");
        F2Vector { bits: self.bits ^ rhs.bits, len: self.len }
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        f.write_str(")")
    }
}

fn mask(len: usize) -> u64 {
    if len == 64 { u64::MAX } else { (1u64 << len) - 1 }
}

/// A dense bit matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Matrix {
    rows: Vec<F2Vector>,
    cols: usize,
}

impl F2Matrix {
    pub fn from_rows(rows: Vec<F2Vector>, cols: usize) -> Result<F2Matrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
        }
        Ok(F2Matrix { rows, cols })
    }

    /// The matrix whose columns are `cols`.
    pub fn from_columns(cols: &[F2Vector], nrows: usize) -> Result<F2Matrix> {
        if let Some(c) = cols.iter().find(|c| c.len() != nrows) {
            return Err(Error::DimensionMismatch { expected: nrows, found: c.len() });
        }
        let rows = (0..nrows)
            .map(|i| {
                let bits = cols.iter().enumerate().fold(0u64, |w, (j, c)| w | (u64::from(c.get(i)) << j));
                F2Vector::new(cols.len(), bits)
            })
            .collect();
        Ok(F2Matrix { rows, cols: cols.len() })
    }

    pub fn identity(n: usize) -> F2Matrix {
        F2Matrix { rows: (0..n).map(|i| F2Vector::new(n, 1 << i)).collect(), cols: n }
    }

    pub fn zero(rows: usize, cols: usize) -> F2Matrix {
        F2Matrix { rows: vec![F2Vector::zero(cols); rows], cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let bits = self.rows.iter().enumerate().fold(0u64, |w, (i, r)| w | (u64::from(r.dot(v)) << i));
        F2Vector::new(self.rows.len(), bits)
    }
}

/// Coordinatewise parity.
pub fn reduce_mod2(v: &IntVector) -> F2Vector {
    let bits = v.iter().enumerate().fold(0u64, |w, (i, &c)| w | (((c & 1) as u64) << i));
    F2Vector::new(v.dim(), bits)
}

fn rank_of(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut x = r;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

pub fn f2_rank(m: &F2Matrix) -> usize {
    rank_of(&m.rows.iter().map(|r| r.bits).collect::<Vec<_>>())
}

/// Determinant of a square matrix, `0` or `1`.
pub fn f2_det(m: &F2Matrix) -> Result<u8> {
    if m.nrows() != m.cols {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.cols });
    }
    Ok(u8::from(f2_rank(m) == m.cols))
}

fn check_tuple(k: &[F2Vector]) -> Result<usize> {
    if k.len() < 2 {
        return Err(Error::WrongArity { expected: 2, found: k.len() });
    }
    let n = k.len() - 1;
    if let Some(v) = k.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    Ok(n)
}

/// 2-determinant by the pairwise expansion: the sum over `i < j` of the
/// determinant of the remaining vectors followed by `k_i * k_j`.
pub fn det2(k: &[F2Vector]) -> Result<u8> {
    let n = check_tuple(k)?;
    let mut total = 0u8;
    let mut cols: Vec<u64> = Vec::with_capacity(n);
    for i in 0..=n {
        for j in i + 1..=n {
            cols.clear();
            cols.extend((0..=n).filter(|&t| t != i && t != j).map(|t| k[t].bits));
            cols.push(k[i].bits & k[j].bits);
            // det(M) = det(M^T), so the columns can be eliminated as rows
            total ^= u8::from(rank_of(&cols) == n);
        }
    }
    Ok(total)
}

/// 2-determinant straight from its definition via the kernel relation.
pub fn det2_oracle(k: &[F2Vector]) -> Result<u8> {
    let n = check_tuple(k)?;
    // value bits below n, relation tag bits from n upward
    let tagged: Vec<(u64, u128)> = k.iter().enumerate().map(|(i, v)| (v.bits, 1u128 << i)).collect();
    let mut pivots: Vec<(u64, u128)> = Vec::new();
    let mut relations: Vec<u128> = Vec::new();
    for (mut x, mut tag) in tagged {
        for &(p, t) in &pivots {
            let top = 63 - p.leading_zeros();
            if x >> top & 1 == 1 {
                x ^= p;
                tag ^= t;
            }
        }
        if x == 0 {
            relations.push(tag);
        } else {
            pivots.push((x, tag));
        }
    }
    if pivots.len() < n {
        return Ok(0);
    }
    debug_assert_eq!(relations.len(), 1);
    let lambda = relations[0];
    Ok(((lambda.count_ones() + 1) & 1) as u8)
}

/// Block formula: `det2(head, tail) = det2(head) * det(pi(tail))`, where
/// `head` has `m + 1` vectors of rank `m` and `pi` projects onto a complement
/// of their span.
pub fn det2_block(head: &[F2Vector], tail: &[F2Vector]) -> Result<u8> {
    if head.len() < 2 {
        return Err(Error::WrongArity { expected: 2, found: head.len() });
    }
    let m = head.len() - 1;
    let n = head[0].len();
    if let Some(v) = head.iter().chain(tail).find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    if m + tail.len() != n {
        return Err(Error::WrongArity { expected: n - m, found: tail.len() });
    }
    // reduced echelon basis of span(head), pivot at the lowest set bit
    let mut basis: Vec<u64> = Vec::new();
    for v in head {
        let mut x = v.bits;
        for &b in &basis {
            if x >> b.trailing_zeros() & 1 == 1 {
                x ^= b;
            }
        }
        if x != 0 {
            let p = x.trailing_zeros();
            for b in basis.iter_mut() {
                if *b >> p & 1 == 1 {
                    *b ^= x;
                }
            }
            basis.push(x);
        }
    }
    if basis.len() != m {
        return Err(Error::RankPrecondition { expected: m, found: basis.len() });
    }
    let pivot_cols: Vec<u32> = basis.iter().map(|b| b.trailing_zeros()).collect();
    let free_cols: Vec<u32> = (0..n as u32).filter(|c| !pivot_cols.contains(c)).collect();
    let gather = |x: u64, cols: &[u32]| cols.iter().enumerate().fold(0u64, |w, (i, &c)| w | ((x >> c & 1) << i));

    // head in coordinates of its own span: pivot entries are the coefficients
    let head_m: Vec<F2Vector> = head.iter().map(|v| F2Vector::new(m, gather(v.bits, &pivot_cols))).collect();
    let first = det2(&head_m)?;
    // tail modulo span(head), read off on the free coordinates
    let projected: Vec<u64> = tail
        .iter()
        .map(|v| {
            let x = basis.iter().fold(v.bits, |x, &b| if x >> b.trailing_zeros() & 1 == 1 { x ^ b } else { x });
            gather(x, &free_cols)
        })
        .collect();
    let second = u8::from(rank_of(&projected) == n - m);
    Ok(first & second)
}
