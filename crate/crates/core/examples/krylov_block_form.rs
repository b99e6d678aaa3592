//! Krylov subspaces: the local minimal polynomial of a standard vector and
//! the block-triangular form it induces.

use exact_charpoly::charpoly::{charpoly, Algorithm};
use exact_charpoly::principles::{invariant_block_form, krylov_local_poly};
use exact_charpoly::{Field, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rationals;
    // e_1 spans a 2-dimensional invariant subspace, e_3 the whole space
    let a = Matrix::from_ints(q, &[&[0, -6, 1], &[1, 5, 0], &[0, 0, 7]])?;
    let p = charpoly(&a, Algorithm::Berkowitz)?;
    println!("charpoly(A) = {p}");

    for i in 1..=3 {
        let r = krylov_local_poly(&a, i)?;
        let (quot, rem) = p.poly().divmod(&r.g)?;
        println!("e_{i}: k = {}, g = {}, charpoly / g = {quot} rem {rem}", r.k, r.g);
    }

    let bf = invariant_block_form(&a, 1)?;
    println!("\nblock form for e_1 (k = {}):\n{}", bf.k(), bf.form.to_plain());
    println!("zero block: {}", bf.upper_right().is_zero());
    println!("charpoly(W) = {}", charpoly(&bf.w, Algorithm::Berkowitz)?);
    println!("charpoly(E) = {}", charpoly(&bf.e, Algorithm::Berkowitz)?);
    Ok(())
}
