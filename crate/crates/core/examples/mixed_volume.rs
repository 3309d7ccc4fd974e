//! Mixed volumes from a random fine mixed subdivision, with the cells shown.

use signres::lattice::{minkowski_sum_all, LatticePolytope, Support};
use signres::mvol::{mixed_volume_lattice, mixed_volume_of_cells};
use signres::subdivision::generic_subdivision;

fn main() -> signres::Result<()> {
    let triangle = LatticePolytope::from_points([[0, 0], [2, 0], [0, 2]])?;
    let square = LatticePolytope::from_points([[0, 0], [1, 0], [0, 1], [1, 1]])?;
    let polys = [triangle, square];

    let supports: Vec<Support> = polys.iter().map(|p| p.vertices().clone()).collect();
    let sub = generic_subdivision(&supports, 3)?;
    println!("lifting seed {} after {} attempt(s)", sub.seed(), sub.attempts);
    for cell in &sub.cells {
        let faces: Vec<String> = cell.faces().iter().map(|f| format!("{:?}", f.points())).collect();
        println!("  {:?} volume {}: {}", cell.cell_type(), cell.lattice_volume(), faces.join(" + "));
    }
    let total: u64 = sub.cells.iter().map(|c| c.lattice_volume()).sum();
    println!("cells cover volume {total} = {}", minkowski_sum_all(&polys)?.lattice_volume());
    println!("MV = {} (from these cells: {})", mixed_volume_lattice(&polys)?, mixed_volume_of_cells(&sub.cells, 2));
    Ok(())
}
