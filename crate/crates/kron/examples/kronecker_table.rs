//! The Kronecker coefficients of one symmetric group: the multiplicities
//! g^λ_{μ,τ} of λ in μ ⊗ τ, computed from characters.
//!
//! Run with `cargo run --example kronecker_table`.

use kron::{kronecker, partitions_of};

fn main() {
    let n = 4;
    let shapes = partitions_of(n);

    println!("tensor product decompositions in S_{n}:");
    for mu in &shapes {
        for tau in &shapes {
            let mut pieces = Vec::new();
            for lam in &shapes {
                let g = kronecker(lam, mu, tau).expect("equal sizes");
                match g.to_string().as_str() {
                    "0" => {}
                    "1" => pieces.push(format!("({lam})")),
                    k => pieces.push(format!("{k}·({lam})")),
                }
            }
            println!("  ({mu}) ⊗ ({tau}) = {}", pieces.join(" + "));
        }
    }
}
