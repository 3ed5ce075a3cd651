//! q-Stirling numbers `S_q(n, m; nu)` by every route, against Carlitz
//! numbers for `nu = (1^n)`.

use qprofile::stirlrook::{carlitz, stirling_direct, stirling_q, StirlingMethod};
use qprofile::Partition;

fn main() -> qprofile::Result<()> {
    let n = 5;
    for nu in ["1,1,1,1,1", "2,1,1,1", "2,2,1", "3,2"] {
        let nu: Partition = nu.parse()?;
        println!("nu = {nu}");
        for m in 1..=n {
            let values = StirlingMethod::ALL
                .iter()
                .map(|&method| stirling_q(n, m, &nu, method))
                .collect::<qprofile::Result<Vec<_>>>()?;
            let agree = values.iter().all(|v| *v == values[0]);
            println!(
                "  m={m}: {}  (routes agree: {agree}, partitions counted: {})",
                values[0],
                stirling_direct(n, m, &nu)?
            );
        }
    }
    println!();
    for m in 1..=n {
        println!("Carlitz S_q({n}, {m}) = {}", carlitz(n, m));
    }
    Ok(())
}
