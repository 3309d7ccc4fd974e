//! The multivariate Vieta sign and its exact oracles.
//!
//! For a nondegenerate system `f_1 = ... = f_n = 0` whose Newton polytopes
//! form an `a`-prickly tuple and whose vertex coefficients are all 1, the
//! product of `x^a` over all roots in the torus is `(-1)^MV2(P_1, ..., P_n; a)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{determinant, smith_normal_form, IntVector, LatticePolytope};
use crate::mvol::{iota2, prickly_witness};
use crate::Sign;

/// The system `x^{m_i} + 1 = 0`, `i = 1..n`, with `m_i` the rows of the
/// exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialSystem {
    exponents: Vec<IntVector>,
}

impl BinomialSystem {
    /// Rejects non-square or singular exponent matrices.
    pub fn new(exponents: Vec<IntVector>) -> Result<BinomialSystem> {
        let n = exponents.len();
        if let Some(r) = exponents.iter().find(|r| r.dim() != n) {
            return Err(Error::NotSquare { rows: n, cols: r.dim() });
        }
        if n == 0 || determinant(&exponents).is_zero() {
            return Err(Error::SingularSystem);
        }
        Ok(BinomialSystem { exponents })
    }

    pub fn exponents(&self) -> &[IntVector] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    /// Number of roots, `|det M|`.
    pub fn root_count(&self) -> BigInt {
        num_traits::Signed::abs(&determinant(&self.exponents))
    }

    /// Newton segments `[0, m_i]`.
    pub fn newton_segments(&self) -> Vec<LatticePolytope> {
        let n = self.dim();
        self.exponents
            .iter()
            .map(|m| LatticePolytope::segment(IntVector::zero(n), m.clone()).expect("nonempty segment"))
            .collect()
    }
}

/// The product of `x^a` over all roots of the binomial system, evaluated
/// exactly.
///
/// Writing roots as `x = exp(2 pi i theta)`, the system reads
/// `M theta = (1/2, ..., 1/2)` modulo `Z^n`. Diagonalizing `U M V = D`
/// splits the solution set into a grid, and the sum of `a . theta` over it
/// is a rational number modulo 1 that must be `0` or `1/2`.
pub fn binomial_product_sign(sys: &BinomialSystem, a: &IntVector) -> Result<Sign> {
    let n = sys.dim();
    if a.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.dim() });
    }
    let rows: Vec<Vec<BigInt>> = sys.exponents.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let snf = smith_normal_form(&rows, n);
    if snf.rank() != n {
        return Err(Error::SingularSystem);
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let count: BigInt = snf.diag.iter().product();
    let mut total = BigRational::zero();
    for (j, d) in snf.diag.iter().enumerate() {
        // (U h)_j with h = (1/2, ..., 1/2)
        let uh = BigRational::from_integer(snf.u[j].iter().sum::<BigInt>()) * &half;
        // c_j = (V^T a)_j
        let c: BigInt = (0..n).map(|i| &snf.v[i][j] * BigInt::from(a[i])).sum();
        let shift = BigRational::new(d - BigInt::one(), BigInt::from(2));
        total += BigRational::from_integer(c * (&count / d)) * (uh + shift);
    }
    let frac = total.clone() - BigRational::from_integer(total.floor().to_integer());
    if frac.is_zero() {
        Ok(Sign::Plus)
    } else if frac == half {
        Ok(Sign::Minus)
    } else {
        Err(Error::Consistency(format!("root product has angle {frac}, expected 0 or 1/2")))
    }
}

/// `(-1)^MV2(P_1, ..., P_n; a)` for an `a`-prickly tuple.
pub fn vieta_sign(polys: &[LatticePolytope], a: &IntVector, seed: u64) -> Result<Sign> {
    if let Some(witness) = prickly_witness(polys, a)? {
        return Err(Error::NotPrickly { witness });
    }
    Ok(Sign::from_parity(iota2(polys, a, seed)?.value.into()))
}

/// Classical Vieta: for `f` of degree `d` with `f(0) = 1` and leading
/// coefficient 1, the product of `x^a` over the roots is `(-1)^(d a)`.
pub fn univariate_vieta_check(d: u64, a: i64) -> Result<Sign> {
    if d == 0 {
        return Err(Error::InvalidInput("degree must be positive".into()));
    }
    Ok(Sign::from_parity(u64::from(d.is_odd() && a.is_odd())))
}
