//! Crossing numbers of chord diagrams by three routes.

use qprofile::bpoly::{perfect_matchings, touchard, TouchardMethod};

fn main() -> qprofile::Result<()> {
    for m in 1..=6 {
        let values = TouchardMethod::ALL
            .iter()
            .map(|&method| touchard(m, method))
            .collect::<qprofile::Result<Vec<_>>>()?;
        let agree = values.iter().all(|v| *v == values[0]);
        println!(
            "T_{m}(q) = {}  (routes agree: {agree}, T_{m}(1) = {})",
            values[0],
            values[0].eval_i64(1)
        );
    }
    println!();
    println!("chord diagrams on 6 points and their crossings:");
    for matching in perfect_matchings(3) {
        println!("  {matching}: {}", matching.interlacings(None));
    }
    Ok(())
}
