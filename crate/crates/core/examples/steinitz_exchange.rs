//! Exchanging an independent set into a spanning set without losing span.

use exact_charpoly::elimination::rank;
use exact_charpoly::principles::steinitz_exchange;
use exact_charpoly::{Field, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rationals;
    // four vectors spanning Q^3, and two independent ones to bring in
    let t = Matrix::from_ints(q, &[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, 1]])?;
    let e = Matrix::from_ints(q, &[&[1, 0], &[1, 1], &[0, 1]])?;
    let x = steinitz_exchange(&t, &e)?;
    println!("removed columns {:?}\nT' =\n{}rank {} of 3", x.removed, x.exchanged.to_plain(), rank(&x.exchanged));

    let thin = Matrix::from_ints(q, &[&[1], &[0], &[0]])?;
    println!("non-spanning input: {}", steinitz_exchange(&thin, &e).unwrap_err());
    Ok(())
}
