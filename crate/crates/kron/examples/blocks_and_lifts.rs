//! Block combinatorics at a fixed integer parameter: which diagrams share a
//! class, the chain a class forms, how indecomposables lift to the generic
//! parameter, Hom dimensions inside a block, and object status.
//!
//! Run with `cargo run --example blocks_and_lifts`.

use kron::deligne::{class_chain, hom_dim, lift, locate_in_class, object_status, ClassPosition};
use kron::{partitions_up_to, Partition};

fn main() -> Result<(), kron::Error> {
    let n = 5;

    println!("positions of small diagrams at parameter n = {n}:");
    for lam in partitions_up_to(4) {
        match locate_in_class(&lam, n) {
            ClassPosition::Trivial => {
                println!(
                    "  {:<8} trivial class, {:?}",
                    lam.to_string(),
                    object_status(&lam, n)
                );
            }
            ClassPosition::NonTrivial { minimal, index } => {
                println!(
                    "  {:<8} element {index} of the chain of ({minimal}), {:?}",
                    lam.to_string(),
                    object_status(&lam, n)
                );
            }
        }
    }

    let minimal: Partition = "2,1".parse()?;
    let chain = class_chain(&minimal, n, 4)?;
    println!("\nchain of ({minimal}) at n = {n}:");
    for (i, element) in chain.elements().iter().enumerate() {
        let lifted: Vec<String> = lift(element, n).iter().map(|p| format!("({p})")).collect();
        println!(
            "  λ^({i}) = {:<8} lifts to {}",
            element.to_string(),
            lifted.join(" ⊕ ")
        );
    }

    println!("\nHom dimensions along that chain:");
    let elements = chain.elements();
    for a in elements {
        let row: Vec<String> = elements
            .iter()
            .map(|b| hom_dim(a, b, n).to_string())
            .collect();
        println!("  ({a}): {}", row.join(" "));
    }
    Ok(())
}
