//! Kostka numbers as vacuum expectations of spectral-free X_{i,j} words.

use tetralattice::pfunc::{vacuum_expectation, OperatorWord};
use tetralattice::symfun::{kostka, Partition};

fn main() -> tetralattice::Result<()> {
    let lambda = Partition::new(vec![3, 1])?;
    let m = 2;
    let n = lambda.parts()[0] as usize + m - 1;
    println!("lambda = {:?}", lambda.parts());
    for alpha in [[4u32, 0], [3, 1], [2, 2], [1, 3], [0, 4]] {
        let factors: Vec<(usize, usize)> = (0..m)
            .map(|k| {
                (
                    lambda.parts()[k] as usize + m - 1 - k,
                    alpha[k] as usize + m - 1 - k,
                )
            })
            .collect();
        let lattice = vacuum_expectation(&OperatorWord::xijs(n, &factors))?;
        println!(
            "alpha = {alpha:?}: lattice {lattice:>2}   tableaux {}",
            kostka(&lambda, &alpha)
        );
    }
    Ok(())
}
