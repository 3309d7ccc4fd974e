//! Deciding prickliness and 2-developedness, with witnesses when they fail.

use signres::lattice::{IntVector, LatticePolytope};
use signres::mvol::{is_2_developed, mv2, MV2Query};

fn main() -> signres::Result<()> {
    let square = LatticePolytope::from_points([[0, 0], [1, 0], [0, 1], [1, 1]])?;
    let segment = LatticePolytope::segment([0, 0], [1, 1])?;
    let cases = [
        ("two unit squares", vec![square.clone(), square.clone()], [1, 1]),
        ("square and diagonal", vec![square.clone(), segment.clone()], [1, 0]),
        ("two segments", vec![LatticePolytope::segment([0, 0], [1, 0])?, segment], [1, 1]),
    ];
    for (name, polys, zeta) in cases {
        let zeta = IntVector::from(zeta);
        let report = is_2_developed(&polys, &zeta)?;
        print!("{name}, zeta {zeta}: {:?}", report.verdict);
        if let Some(w) = &report.witness {
            print!(" (witness {w})");
        }
        match mv2(&MV2Query::new(polys, zeta)?, 0) {
            Ok(v) => println!(", MV2 = {v}"),
            Err(e) => println!(", MV2 refused: {e}"),
        }
    }
    Ok(())
}
