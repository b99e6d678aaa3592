//! The three characteristic polynomial routes side by side, and where the
//! power-sum route stops working.

use exact_charpoly::charpoly::{charpoly, Algorithm};
use exact_charpoly::field::count_ops;
use exact_charpoly::{Field, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = Matrix::from_ints(Field::Rationals, &[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]])?;
    println!("A =\n{}", a.to_plain());
    for alg in Algorithm::ALL {
        let (p, ops) = count_ops(|| charpoly(&a, alg));
        let p = p?;
        println!("{:>9}: {p}  ({} scalar ops, {} inversions)", alg.name(), ops.total(), ops.inversions);
    }

    // Over GF(3) the power-sum route needs 1/3, which does not exist.
    let b = Matrix::from_ints(Field::Prime(3), &[&[1, 2, 0], &[0, 1, 1], &[2, 0, 1]])?;
    println!("\nover GF(3):");
    for alg in Algorithm::ALL {
        match charpoly(&b, alg) {
            Ok(p) => println!("{:>9}: {p}", alg.name()),
            Err(e) => println!("{:>9}: {e}", alg.name()),
        }
    }
    Ok(())
}
