//! Stabilization: pad three fixed diagrams with growing top rows and watch
//! the Kronecker coefficients climb to their stable value, the reduced
//! coefficient.
//!
//! Run with `cargo run --example stabilization`.

use kron::coefficients::{stabilization_sequence, stable_start};
use kron::{reduced_kronecker, Partition};

fn main() -> Result<(), kron::Error> {
    let triples = [
        ("1", "1", "1"),
        ("2", "1", "1"),
        ("2,1", "2,1", "2,1"),
        ("2", "2", "2"),
        ("3,1", "2,1", "2"),
    ];

    for (a, b, c) in triples {
        let lam: Partition = a.parse()?;
        let mu: Partition = b.parse()?;
        let tau: Partition = c.parse()?;
        let start = stable_start(&lam, &mu, &tau);
        let window = stabilization_sequence(&lam, &mu, &tau, start, start + 8)?;

        let rendered: Vec<String> = window
            .samples
            .iter()
            .map(|(n, g)| format!("g@{n}={g}"))
            .collect();
        println!("(λ; μ; τ) = ({lam}; {mu}; {tau})");
        println!("  {}", rendered.join("  "));
        println!(
            "  constant from n = {}, reduced value = {}\n",
            window.n_stable,
            reduced_kronecker(&lam, &mu, &tau)
        );
    }
    Ok(())
}
