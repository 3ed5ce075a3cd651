//! The set partitions of shape `(2,1,1,1,1)` minimally meeting `123|456`,
//! with their words, interlacing counts and `inv` statistics.

use qprofile::qarith::QPoly;
use qprofile::setpart::{enumerate_partitions, SetPartition};
use qprofile::shapes::Stat;
use qprofile::{Composition, Partition};

fn main() -> qprofile::Result<()> {
    let alpha: Composition = "3,3".parse()?;
    let shape: Partition = "2,1,1,1,1".parse()?;
    println!("A_alpha = {}", SetPartition::canonical(&alpha));
    println!("{:<14} {:<8} {:>4} {:>4}", "A", "w(A)", "i_a", "inv_a");
    let mut total = QPoly::zero();
    for a in enumerate_partitions(6, Some(&shape), Some(&alpha)) {
        let i = a.interlacings(Some(&alpha));
        let phi = a.phi_alpha(Stat::Inv, &alpha)?;
        println!("{a:<14} {:<8} {i:>4} {phi:>4}", a.word().to_string());
        total += &QPoly::q_pow(i + phi);
    }
    println!("sum of q^(i_a + inv_a) = {total}");

    let fig: SetPartition = "127|36|45".parse()?;
    println!();
    println!("arcs of {fig} (the last arc of each block ends at {}):", fig.n() + 1);
    for arc in fig.arcs() {
        println!(
            "  block {} arc {}: ({}, {})",
            arc.block + 1,
            arc.index,
            arc.left,
            arc.right
        );
    }
    println!("i({fig}) = {}", fig.interlacings(None));
    Ok(())
}
