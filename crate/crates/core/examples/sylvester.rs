//! Expanding a univariate resultant symbolically and reading off the
//! coefficient selected by a weight vector.

use signres::resultant::{leading_coefficient, univariate_resultant};
use signres::lattice::{IntVector, Support};

fn dense(d: i64) -> signres::Result<Support> {
    Support::new((0..=d).map(|k| IntVector::from([k])))
}

fn main() -> signres::Result<()> {
    let r = univariate_resultant(&dense(1)?, &dense(2)?)?;
    println!("Res(f, g) = {r}");
    let (mono, coeff) = leading_coefficient(&r, &[2, 1, 1, 1, 2])?;
    println!("leading term for weights (2,1,1,1,2): {coeff} * {mono:?}");

    let r = univariate_resultant(&dense(2)?, &dense(2)?)?;
    println!("two quadratics: {} terms", r.terms().count());
    Ok(())
}
