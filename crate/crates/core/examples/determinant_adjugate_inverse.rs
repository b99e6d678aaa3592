//! Determinant, adjugate and inverse read off one characteristic polynomial.

use exact_charpoly::charpoly::{adjoint_from, charpoly, determinant_from, inverse, Algorithm};
use exact_charpoly::{Error, Field, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rationals;
    let a = Matrix::from_ints(q, &[&[4, 1, 2], &[0, 3, -1], &[1, 0, 5]])?;
    let p = charpoly(&a, Algorithm::Berkowitz)?;
    let det = determinant_from(&p);
    let adj = adjoint_from(&a, &p)?;
    println!("p = {p}\ndet = {det}\nadj =\n{}", adj.to_plain());

    let check = a.mul(&adj)?;
    println!("A * adj(A) = det * I: {}", check == Matrix::identity(q, 3).scale(&det)?);
    println!("inverse =\n{}", inverse(&a, Algorithm::Berkowitz)?.to_plain());

    let singular = Matrix::from_ints(q, &[&[1, 2], &[2, 4]])?;
    assert_eq!(inverse(&singular, Algorithm::Berkowitz), Err(Error::Singular));
    println!("singular input: {}", Error::Singular);
    Ok(())
}
