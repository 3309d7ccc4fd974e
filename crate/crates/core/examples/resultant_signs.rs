//! Vertices of a resultant's Newton polytope and the sign ratio of two of its
//! extreme coefficients, computed without expanding the resultant.

use signres::resultant::{leading_sign_ratio, resultant_vertices, Grading, ResultantInput, VertexCheck};

fn main() -> signres::Result<()> {
    // a_0 + a_1 x and b_0 + b_1 x + b_2 x^2
    let input = ResultantInput::from_coords(&[&[&[0], &[1]], &[&[0], &[1], &[2]]])?;
    let names = input.coefficient_names();
    let sampled = resultant_vertices(&input, 100, 0)?;
    for v in &sampled.vertices {
        let mono: Vec<String> = names.iter().zip(v).filter(|(_, &e)| e > 0).map(|(n, e)| format!("{n}^{e}")).collect();
        println!("vertex {}", mono.join(" "));
    }

    let gamma = Grading::new(&input, vec![2, 1, 1, 1, 2])?;
    for (name, w) in [("sigma", vec![1, 2, 2, 1, 1]), ("delta", vec![2, 2, 1, 2, 1])] {
        let other = Grading::new(&input, w)?;
        let r = leading_sign_ratio(&input, &gamma, &other, 0, VertexCheck::Sampled(100))?;
        println!("gamma/{name}: {} (MV {}, MV2 {})", r.ratio, r.mixed_volume, r.mv2);
    }
    Ok(())
}
