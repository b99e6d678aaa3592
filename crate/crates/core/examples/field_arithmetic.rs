//! Exact scalars: rationals and prime fields, with operation counting.

use exact_charpoly::field::count_ops;
use exact_charpoly::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rationals;
    let a = q.parse_element("3/4")?;
    let b = q.parse_element("-5/6")?;
    println!("Q:      {a} + {b} = {}, {a} * {b} = {}, 1/({a}) = {}", &a + &b, &a * &b, a.inv()?);

    let gf7: Field = "gf:7".parse()?;
    let x = gf7.from_integer(3);
    println!("GF(7):  3^-1 = {}, 1/3 parses as {}", x.inv()?, gf7.parse_element("1/3")?);

    // word-sized modulus: products go through 128-bit intermediates
    let big = Field::prime(18_446_744_073_709_551_557)?;
    let y = big.from_integer(-1);
    println!("{big}: (-1)^2 = {}", &y * &y);

    let (_, ops) = count_ops(|| (1..=10).fold(q.one(), |acc, k| &acc * &q.from_integer(k)));
    println!("10! took {} multiplications", ops.multiplications);

    println!("gf:91 -> {}", "gf:91".parse::<Field>().unwrap_err());
    Ok(())
}
