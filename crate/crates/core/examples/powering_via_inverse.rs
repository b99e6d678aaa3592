//! All powers I, A, ..., A^(m-1) from the inverse of one unipotent block
//! matrix, without any division.

use exact_charpoly::field::count_ops;
use exact_charpoly::principles::{pow_via_inverse, Witness};
use exact_charpoly::{Field, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gf2 = Field::Prime(2);
    let a = Matrix::from_ints(gf2, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])?;
    let (w, ops) = count_ops(|| pow_via_inverse(&a, 5));
    let Witness::PowerList(powers) = w? else { unreachable!() };
    for (i, p) in powers.iter().enumerate() {
        assert_eq!(p, &a.power(i)?);
        println!("A^{i} =\n{}", p.to_plain());
    }
    println!("inversions used: {}", ops.inversions);
    Ok(())
}
