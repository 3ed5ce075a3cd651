//! Garsia-Remmel q-rook numbers: the statistic on a placement, the
//! rectangular closed form and the convolution for appended rectangles.

use qprofile::setpart::SetPartition;
use qprofile::stirlrook::{
    partition_to_placement, rectangle, rho_stat, rook_convolution, rook_number, rook_rectangular, staircase,
    FerrersBoard,
};

fn main() -> qprofile::Result<()> {
    let a: SetPartition = "14|235".parse()?;
    let board = staircase(5);
    let placement = partition_to_placement(&a);
    let cells: Vec<_> = placement.cells().collect();
    println!(
        "{a} on {board}: rooks at (column, row) {cells:?}, rho = {}",
        rho_stat(&placement, &board)?
    );

    println!();
    let (a, b) = (3, 4);
    for m in 0..=3 {
        println!(
            "r_{m}(B({a}^{b})): brute force {}, closed form {}",
            rook_number(&rectangle(a, b), m),
            rook_rectangular(a, b, m)
        );
    }

    println!();
    let base: FerrersBoard = "1,2".parse()?;
    let joined = base.with_rectangle(3, 2)?;
    for m in 0..=3 {
        println!(
            "r_{m}({joined}): brute force {}, convolution {}",
            rook_number(&joined, m),
            rook_convolution(&base, 3, 2, m)
        );
    }
    Ok(())
}
