//! Signs of monomials multiplied over all roots of a system, from exact
//! binomial root counting and from the 2-mixed volume.

use signres::lattice::{IntVector, LatticePolytope};
use signres::mvol::{mv2, MV2Query};
use signres::vieta::{binomial_product_sign, univariate_vieta_check, vieta_sign, BinomialSystem};
use signres::Sign;

fn main() -> signres::Result<()> {
    // x^2 y = 1, x y^3 = 1
    let sys = BinomialSystem::new(vec![IntVector::from([2, 1]), IntVector::from([1, 3])])?;
    for a in [[1, 0], [0, 1], [1, 1], [2, -1]] {
        let a = IntVector::from(a);
        let direct = binomial_product_sign(&sys, &a)?;
        let mv2 = mv2(&MV2Query::new(sys.newton_segments(), a.clone())?, 0)?;
        println!("{} roots, monomial {a}: product sign {direct}, (-1)^MV2 = {}", sys.root_count(), Sign::from_parity(mv2.into()));
    }

    // x^5 + ... = 0: the product of the roots has sign (-1)^5 times a ratio of coefficients
    let quintic = LatticePolytope::from_points([[0], [5]])?;
    let sign = vieta_sign(&[quintic], &IntVector::from([1]), 0)?;
    println!("degree 5, monomial x: {sign} (closed form {})", univariate_vieta_check(5, 1)?);
    Ok(())
}
