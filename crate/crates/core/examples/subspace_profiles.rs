//! Counting subspaces by profile: the closed form for diagonal operators,
//! its pivot decomposition, brute force over small fields, and the
//! irreducible and nilpotent cases.

use qprofile::profiles::{
    at, companion, eta, jordan_block, pivot_sets, profile_histogram, sigma_bruteforce, sigma_diagonal,
    sigma_irreducible, sigma_pivot, sigma_regular_nilpotent, smallest_irreducible, DiagonalSpec, PivotSet,
};
use qprofile::{Composition, Partition};

fn main() -> qprofile::Result<()> {
    let mu: Partition = "5,1".parse()?;
    let nu: Composition = "3,3".parse()?;
    let sigma = sigma_diagonal(&mu, &nu);
    println!("sigma_{mu}(diag of type {nu}) = {sigma}");
    for p in [2, 3, 5] {
        let delta = DiagonalSpec::block_scalar(&nu, p)?.to_matrix(p)?;
        println!(
            "  p={p}: formula {}, brute force {}",
            at(&sigma, p),
            sigma_bruteforce(&mu, &delta)?
        );
    }
    println!("  by pivot set:");
    for c in pivot_sets(6, mu.first()) {
        let part = sigma_pivot(&mu, &nu, &c);
        if !part.is_zero() {
            println!("    C={:?}: {part}", c.as_slice());
        }
    }

    let alpha: Composition = "2,3,2,2,3".parse()?;
    let c = PivotSet::new(vec![1, 2, 4, 7, 8])?;
    let d = PivotSet::new(vec![1, 2, 3, 5])?;
    println!();
    println!(
        "eta_{alpha}(C={:?}, D={:?}) = {}",
        c.as_slice(),
        d.as_slice(),
        eta(&alpha, &c, &d)?
    );

    let n = 3;
    let p = 2;
    let f = smallest_irreducible(n, p)?;
    let irreducible = profile_histogram(&companion(&f, p)?)?;
    let nilpotent = profile_histogram(&jordan_block(n, p)?)?;
    println!();
    println!("n={n}, p={p}: irreducible (x^k coefficients {f:?}) and regular nilpotent");
    for (mu, count) in &irreducible {
        println!(
            "  irreducible mu={mu:<8} {count:>3}  formula {}",
            sigma_irreducible(mu, n)
        );
    }
    for (mu, count) in &nilpotent {
        println!(
            "  nilpotent   mu={mu:<8} {count:>3}  formula {}",
            sigma_regular_nilpotent(mu)
        );
    }
    Ok(())
}
