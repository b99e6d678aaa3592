//! Plain and JSON matrix formats, and positioned parse errors.

use exact_charpoly::cli::{parse_matrices, parse_matrix, serialize_matrix, Format};
use exact_charpoly::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rationals;
    let a = parse_matrix("2 3\n1 -2 1/2\n0 4 7\n", Format::Plain, q)?;
    let json = serialize_matrix(&a, Format::Json);
    print!("plain:\n{}json:\n{json}", serialize_matrix(&a, Format::Plain));
    assert_eq!(parse_matrix(&json, Format::Json, q)?, a);

    let pair = parse_matrices("1 1\n5\n\n1 2\n3 4\n", Format::Plain, q)?;
    println!("two blocks parsed: {}x{} and {}x{}", pair[0].rows(), pair[0].cols(), pair[1].rows(), pair[1].cols());

    for bad in ["2 2\n1 2\n3\n", "1 2\n1 x\n"] {
        println!("{:?} -> {}", bad, parse_matrix(bad, Format::Plain, q).unwrap_err());
    }
    let gf = parse_matrix("1 1\n9\n", Format::Plain, Field::Prime(5))?;
    println!("9 over GF(5) reads as {}", gf.entry(1, 1));
    Ok(())
}
