//! `b_mu,nu(q)` by every route, the two-parameter refinement, and a small
//! table of values.

use qprofile::bpoly::{b_tilde, b_via_setpartitions, b_via_tableaux, StripTables};
use qprofile::shapes::{partitions_of, Stat};
use qprofile::{Composition, Partition};

fn main() -> qprofile::Result<()> {
    let mu: Partition = "5,1".parse()?;
    let nu: Composition = "3,3".parse()?;

    println!("b_{mu},{nu}(q):");
    println!("  tableaux       {}", b_via_tableaux(&mu, &nu));
    for phi in Stat::ALL {
        println!("  setpart-{phi:<6} {}", b_via_setpartitions(&mu, &nu, phi)?);
    }
    let mut tables = StripTables::new();
    println!("  recursion      {}", tables.b(&mu, &"3,3".parse()?)?);
    println!("  b~(q,t)        {}", b_tilde(&mu, &nu, Stat::Inv)?);

    println!();
    println!("b_mu,nu(q) for |mu| = |nu| = 4:");
    let parts = partitions_of(4);
    for mu in &parts {
        for nu in &parts {
            let b = tables.b(mu, nu)?;
            if !b.is_zero() {
                println!("  mu={mu:<10} nu={nu:<10} {b}");
            }
        }
    }
    Ok(())
}
