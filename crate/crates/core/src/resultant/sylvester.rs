//! Exact univariate resultants as polynomials in the coefficient symbols.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Support;

/// A polynomial with integer coefficients in named variables, stored as a map
/// from exponent vectors to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(variables: Vec<String>) -> Polynomial {
        Polynomial { variables, terms: BTreeMap::new() }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms(variables: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Result<Polynomial> {
        let mut p = Polynomial::zero(variables);
        for (m, c) in terms {
            if m.len() != p.variables.len() {
                return Err(Error::DimensionMismatch { expected: p.variables.len(), found: m.len() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn variable(variables: &[String], i: usize) -> Polynomial {
        let mut m = vec![0; variables.len()];
        m[i] = 1;
        Polynomial { variables: variables.to_vec(), terms: BTreeMap::from([(m, BigInt::one())]) }
    }

    fn add_term(&mut self, m: Vec<u32>, c: BigInt) {
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by exponent vector, largest first.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &[u32]) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self) -> Polynomial {
        Polynomial { variables: self.variables.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.variables.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    /// Value at an integer point.
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.variables.len(), "one value per variable");
        self.terms
            .iter()
            .map(|(m, c)| m.iter().zip(values).fold(c.clone(), |acc, (&e, v)| acc * num_traits::pow(v.clone(), e as usize)))
            .sum()
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.iter().all(|&e| e == 0) {
                factors.push(abs.to_string());
            }
            for (v, &e) in self.variables.iter().zip(m) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// The largest `d` with `support = {0, 1, ..., d}` in `Z^1`.
fn dense_degree(s: &Support) -> Result<usize> {
    if s.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: s.dim() });
    }
    if s.iter().enumerate().any(|(k, p)| p[0] != k as i64) {
        return Err(Error::NonDenseSupport);
    }
    Ok(s.len() - 1)
}

/// Determinant of the Sylvester matrix of `f = sum a_k x^k` and
/// `g = sum b_k x^k`, i.e. `a_{d0}^{d1} prod g(roots of f)`, in the variables
/// `a_0, ..., a_{d0}, b_0, ..., b_{d1}`.
pub fn univariate_resultant(f_support: &Support, g_support: &Support) -> Result<Polynomial> {
    let d0 = dense_degree(f_support)?;
    let d1 = dense_degree(g_support)?;
    if d0 + d1 == 0 {
        return Err(Error::InvalidResultantInput("both polynomials are constants".into()));
    }
    let vars: Vec<String> = (0..=d0).map(|k| format!("a_{k}")).chain((0..=d1).map(|k| format!("b_{k}"))).collect();
    let size = d0 + d1;
    // entry (r, c) as a variable index, rows of f then rows of g, highest degree first
    let mut matrix: Vec<Vec<Option<usize>>> = vec![vec![None; size]; size];
    for r in 0..d1 {
        for k in 0..=d0 {
            matrix[r][r + d0 - k] = Some(k);
        }
    }
    for r in 0..d0 {
        for k in 0..=d1 {
            matrix[d1 + r][r + d1 - k] = Some(d0 + 1 + k);
        }
    }
    let cols: Vec<usize> = (0..size).collect();
    Ok(expand(&matrix, 0, &cols, &vars))
}

/// Laplace expansion along row `row` over the remaining columns.
fn expand(matrix: &[Vec<Option<usize>>], row: usize, cols: &[usize], vars: &[String]) -> Polynomial {
    if cols.is_empty() {
        let mut one = Polynomial::zero(vars.to_vec());
        one.add_term(vec![0; vars.len()], BigInt::one());
        return one;
    }
    let mut total = Polynomial::zero(vars.to_vec());
    for (pos, &c) in cols.iter().enumerate() {
        let Some(v) = matrix[row][c] else { continue };
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = expand(matrix, row + 1, &rest, vars);
        if minor.is_zero() {
            continue;
        }
        let term = Polynomial::variable(vars, v).mul(&minor);
        total = if pos % 2 == 0 { total.add(&term) } else { total.add(&term.neg()) };
    }
    total
}

/// The monomial of `r` maximizing `<w, exponent>` and its coefficient.
pub fn leading_coefficient(r: &Polynomial, w: &[i64]) -> Result<(Vec<u32>, BigInt)> {
    if w.len() != r.variables.len() {
        return Err(Error::DimensionMismatch { expected: r.variables.len(), found: w.len() });
    }
    if w.iter().any(|&x| x <= 0) {
        return Err(Error::NonPositiveWeight);
    }
    let value = |m: &[u32]| m.iter().zip(w).map(|(&e, &x)| i128::from(e) * i128::from(x)).sum::<i128>();
    let best = r.terms.keys().map(|m| value(m)).max().ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    let top: Vec<(&Vec<u32>, &BigInt)> = r.terms.iter().filter(|(m, _)| value(m) == best).collect();
    if top.len() > 1 {
        return Err(Error::GradingTie(format!("{w:?}")));
    }
    Ok((top[0].0.clone(), top[0].1.clone()))
}
