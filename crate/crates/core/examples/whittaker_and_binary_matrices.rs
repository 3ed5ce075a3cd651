//! q-Whittaker coefficients, their relation to `b_mu,nu`, and the count of
//! 0-1 matrices with prescribed margins.

use qprofile::bpoly::{b_from_whittaker, binmat_bruteforce, binmat_count, kostka, StripTables};
use qprofile::shapes::partitions_of;

fn main() -> qprofile::Result<()> {
    let mut tables = StripTables::new();
    println!("a_mu,nu(q) and b_mu,nu(q) for n = 4:");
    let parts = partitions_of(4);
    for mu in &parts {
        for nu in &parts {
            let a = tables.a(mu, nu)?;
            if a.is_zero() {
                continue;
            }
            let b = b_from_whittaker(mu, nu, &a);
            let k = kostka(mu, &nu.as_composition());
            println!("  mu={mu:<10} nu={nu:<10} K={k}\n    a = {a}\n    b = {b}");
        }
    }

    println!();
    println!("0-1 matrices with row sums lambda and column sums nu, n = 5:");
    let parts = partitions_of(5);
    for lambda in &parts {
        for nu in &parts {
            let m = binmat_count(lambda, nu)?;
            let brute = binmat_bruteforce(lambda.parts(), nu.parts());
            if brute > 0 {
                println!("  lambda={lambda:<12} nu={nu:<12} {m:>4} (brute force {brute})");
            }
        }
    }
    Ok(())
}
