//! On the size boundary |λ| = |μ| + |τ| the reduced coefficients collapse to
//! Littlewood-Richardson coefficients. Both LR routes are shown: the
//! character inner product and the lattice-word tableau count.
//!
//! Run with `cargo run --example lr_boundary`.

use kron::{littlewood_richardson, lr_tableau_count, partitions_of, reduced_kronecker, Partition};

fn main() -> Result<(), kron::Error> {
    let mu: Partition = "2,1".parse()?;
    let tau: Partition = "2,1".parse()?;

    println!("restriction multiplicities c^λ for μ = {mu}, τ = {tau}:");
    for lam in partitions_of(mu.size() + tau.size()) {
        let by_characters = littlewood_richardson(&lam, &mu, &tau)?;
        let by_tableaux = lr_tableau_count(&lam, &mu, &tau)?;
        let reduced = reduced_kronecker(&lam, &mu, &tau);
        assert_eq!(by_characters, by_tableaux);
        assert_eq!(by_characters, reduced);
        if by_characters != 0.into() {
            println!("  λ = {:<12} c = ḡ = {by_characters}", lam.to_string());
        }
    }

    // The classic multiplicity-two instance.
    let lam: Partition = "3,2,1".parse()?;
    println!(
        "\nc^({lam})_({mu}),({tau}) = {} (both routes agree)",
        littlewood_richardson(&lam, &mu, &tau)?
    );
    Ok(())
}
