//! Every matrix satisfies its own characteristic polynomial, over any field.

use exact_charpoly::charpoly::{charpoly, Algorithm};
use exact_charpoly::corpus::Corpus;
use exact_charpoly::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for field in [Field::Rationals, Field::Prime(2), Field::Prime(101)] {
        let mut corpus = Corpus::new(field, 42, 0);
        let mut checked = 0;
        for n in 1..=6 {
            let a = corpus.square(n);
            let p = charpoly(&a, Algorithm::Berkowitz)?;
            assert!(p.poly().eval_matrix(&a)?.is_zero(), "p(A) != 0 over {field}");
            checked += 1;
        }
        println!("{field}: p(A) = 0 for {checked} random matrices, n = 1..6");
    }
    Ok(())
}
