//! Young-diagram arithmetic: the text encoding, row transforms, and the
//! hook-length dimension formula.
//!
//! Run with `cargo run --example diagrams`.

use kron::Partition;

fn main() -> Result<(), kron::Error> {
    let lam: Partition = "6,5,4,1".parse()?;
    println!("λ = {lam}   |λ| = {}, rows = {}", lam.size(), lam.len());

    // Pad with a new top row so the total is 23 cells, then undo it.
    let padded = lam.add_top_row(23)?;
    println!("padded to 23 cells: {padded}");
    println!("top row removed again: {}", padded.remove_top_row());

    // Excising row i drops that row and lengthens all earlier rows by one.
    let u: Partition = "3,2,1".parse()?;
    for i in 1..=4 {
        println!("{u} with row {i} excised: {}", u.excise_row(i));
    }

    // The class sequence (t - |λ|, λ_1 - 1, λ_2 - 2, ...) at t = 5.
    let small: Partition = "2,1".parse()?;
    println!(
        "class sequence of {small} at t = 5: {:?}",
        small.class_sequence(5, 6).entries()
    );

    // Hook-length dimensions of the irreducibles of S_5.
    println!("\ndimensions of the irreducibles of S_5:");
    for shape in kron::partitions_of(5) {
        println!("  {:<12} {}", shape.to_string(), shape.irrep_dim());
    }
    Ok(())
}
