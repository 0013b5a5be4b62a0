//! Dimension polynomials of indecomposables: exact rational coefficients,
//! integer values at integers, and nonnegative integer roots exactly at the
//! parameters where the diagram's class is trivial.
//!
//! Run with `cargo run --example dimension_polynomials`.

use kron::deligne::{dimension_polynomial, is_trivial_class, trivial_parameters};
use kron::partitions_up_to;

fn main() {
    for lam in partitions_up_to(4) {
        let poly = dimension_polynomial(&lam);
        let coeffs: Vec<String> = poly
            .coefficients()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.to_string().eq("0"))
            .map(|(k, c)| format!("{c}·T^{k}"))
            .collect();
        let roots = poly.nonnegative_integer_roots();
        println!("λ = {:<10} P = {}", lam.to_string(), coeffs.join(" + "));
        println!(
            "             roots {roots:?} = trivial parameters {:?}",
            trivial_parameters(&lam)
        );
        for &d in &roots {
            assert!(is_trivial_class(&lam, d));
        }

        // Sample a few integer values; they are the padded dimensions.
        let start = lam.min_parameter();
        let values: Vec<String> = (start..start + 5)
            .map(|n| format!("P({n})={}", poly.eval(n)))
            .collect();
        println!("             {}\n", values.join("  "));
    }
}
