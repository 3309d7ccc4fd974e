//! The 2-mixed volume does not depend on the lifting, while the individual
//! subdivisions do.

use signres::lattice::{IntVector, LatticePolytope};
use signres::mvol::{mv2_detailed, MV2Query};

fn main() -> signres::Result<()> {
    let p0 = LatticePolytope::from_points([[0, 2], [1, 1], [0, -2], [1, -2]])?;
    let p1 = LatticePolytope::from_points([[0, 1], [1, 1], [2, 2], [0, -1], [1, -2], [2, -1]])?;
    let query = MV2Query::new(vec![p0, p1], IntVector::from([0, 1]))?;
    for seed in 0..8 {
        let v = mv2_detailed(&query, seed)?;
        let mixed = v.subdivision.cells.iter().filter(|c| c.cell_type() == signres::subdivision::CellType::Mixed).count();
        println!("seed {seed}: {} cells, {mixed} mixed, MV2 = {}", v.subdivision.cells.len(), v.value);
    }
    Ok(())
}
