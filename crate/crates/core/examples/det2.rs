//! The mod-2 invariant of `n + 1` vectors in `F2^n`, against its kernel
//! relation characterization and the block formula.

use signres::f2::{det2, det2_block, det2_oracle, F2Vector};

fn main() -> signres::Result<()> {
    let k = [F2Vector::from_bits(&[1, 0]), F2Vector::from_bits(&[0, 1]), F2Vector::from_bits(&[1, 1])];
    println!("det2(e1, e2, e1+e2) = {}", det2(&k)?);
    println!("relation oracle     = {}", det2_oracle(&k)?);

    // the head spans a line, the tail completes it to F2^2
    let head = [F2Vector::from_bits(&[1, 1]), F2Vector::from_bits(&[1, 1])];
    let tail = [F2Vector::from_bits(&[1, 0])];
    println!("block formula {} vs full {}", det2_block(&head, &tail)?, det2(&[head[0], head[1], tail[0]])?);

    let mut ones = 0u32;
    for c in 0u64..1 << 12 {
        let k: Vec<F2Vector> = (0..4).map(|i| F2Vector::new(3, c >> (3 * i))).collect();
        assert_eq!(det2(&k)?, det2_oracle(&k)?);
        ones += u32::from(det2(&k)?);
    }
    println!("F2^3: {ones} of 4096 tuples have det2 = 1");
    Ok(())
}
