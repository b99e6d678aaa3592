//! Block formulas for powers of a companion matrix, compared with actual
//! powers. The corner entry is zero below the top power and -c_k at it.

use exact_charpoly::identities::{companion_tail_sum, predicted_power_blocks};
use exact_charpoly::{CompanionSpec, Field, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = CompanionSpec::from_ints(Field::Rationals, &[2, -1, 3, 5])?;
    let a = Matrix::companion(&spec);
    let k = spec.degree();
    println!("A =\n{}", a.to_plain());
    for i in 1..k {
        let [_, x, y, z] = predicted_power_blocks(&a, i)?;
        let (w1, x1, y1, z1) = a.power(i + 1)?.split2x2(1)?;
        println!(
            "A^{}: corner {}, other blocks match formula: {}",
            i + 1,
            w1.entry(1, 1),
            x1 == x && y1 == y && z1 == z
        );
    }
    println!("tail sum =\n{}", companion_tail_sum(&spec)?.to_plain());
    Ok(())
}
