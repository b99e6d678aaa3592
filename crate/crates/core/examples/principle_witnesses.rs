//! Constructive witnesses: a kernel vector for too many columns, the
//! minimal annihilating polynomial, and the inverse-or-zero-divisor split.

use exact_charpoly::principles::{
    annihilating_poly, dependence_to_inverse_or_zero, inverse_or_zero_divisor, kernel_vector, Dependence,
};
use exact_charpoly::{Field, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rationals;
    let v = Matrix::from_ints(q, &[&[1, 2, 3], &[4, 5, 6]])?;
    if let Dependence::Dependent(w) = kernel_vector(&v) {
        let x = w.matrix().expect("kernel vector");
        println!("3 vectors in Q^2 are dependent: x =\n{}V x = 0: {}", x.to_plain(), v.mul(x)?.is_zero());
    }

    let d = Matrix::from_ints(q, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]])?;
    println!("\nminimal annihilator of diag(2, 2, 3): {}", annihilating_poly(&d)?);

    for a in [Matrix::from_ints(q, &[&[2, 1], &[1, 1]])?, Matrix::from_ints(q, &[&[1, 2], &[2, 4]])?] {
        let w = inverse_or_zero_divisor(&a)?;
        let b = w.matrix().expect("matrix witness");
        let via_kernels = dependence_to_inverse_or_zero(&a)?;
        println!(
            "\n{} (kernel route agrees: {})\nB =\n{}A B =\n{}",
            w.kind(),
            w.kind() == via_kernels.kind(),
            b.to_plain(),
            a.mul(b)?.to_plain()
        );
    }
    Ok(())
}
