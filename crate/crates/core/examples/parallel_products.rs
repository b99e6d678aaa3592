//! Product schedules: sequential folding, balanced trees, and balanced trees
//! on the rayon pool. All three give bit-identical results.

use std::time::Instant;

use exact_charpoly::charpoly::{charpoly_with, Algorithm};
use exact_charpoly::corpus::Corpus;
use exact_charpoly::matrix::chain_product;
use exact_charpoly::{Field, ProductMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut corpus = Corpus::new(Field::Rationals, 7, 0);
    let factors: Vec<_> = (0..16).map(|_| corpus.square(6)).collect();
    let reference = chain_product(&factors, ProductMode::Sequential)?;
    let a = corpus.square(14);

    for mode in [ProductMode::Sequential, ProductMode::BalancedTree, ProductMode::ParallelTree] {
        assert_eq!(chain_product(&factors, mode)?, reference);
        let start = Instant::now();
        let p = charpoly_with(&a, Algorithm::Berkowitz, mode)?;
        println!("{:>13}: berkowitz n=14 in {:?}, constant term {}", mode.name(), start.elapsed(), p.coeff(0));
    }
    Ok(())
}
