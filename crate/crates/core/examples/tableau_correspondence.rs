//! From set partitions to standard tableaux and on to semistandard ones,
//! with the fibres of `S_alpha` and the weights `r_q` and `s_q`.

use qprofile::setpart::SetPartition;
use qprofile::tableaux::{apply_s_alpha, enumerate_ssyt, fiber_of_s_alpha, flatten_sort, r_values, r_weight, s_weight};
use qprofile::{Composition, Partition};

fn main() -> qprofile::Result<()> {
    let a: SetPartition = "16|2|348|57|9".parse()?;
    let alpha: Composition = "3,3,3".parse()?;
    let t_hat = flatten_sort(&a);
    let t = apply_s_alpha(&t_hat, &alpha)?;
    println!("A = {a}, shape {}", a.shape());
    println!("T(A) = {t_hat}");
    println!("S_alpha(T(A)) = {t}  (alpha = {alpha})");
    println!("r values: {:?}", r_values(&t));
    println!("r_q = {}, s_q = {}", r_weight(&t), s_weight(&t, &alpha)?);

    let mu: Partition = "5,1".parse()?;
    let alpha: Composition = "3,3".parse()?;
    println!();
    println!("SSYT({mu}, {alpha}) and the fibres of S_alpha:");
    for t in enumerate_ssyt(&mu, &alpha) {
        let fiber: Vec<String> = fiber_of_s_alpha(&t, &alpha)?.iter().map(|f| f.to_string()).collect();
        println!(
            "  {t:<10} r_q = {:<14} fibre {}",
            r_weight(&t).to_string(),
            fiber.join(", ")
        );
    }
    Ok(())
}
