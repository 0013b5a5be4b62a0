//! Run the identity verification suites and print their reports, one JSON
//! document per suite. A clean run prints zero violations everywhere.
//!
//! Run with `cargo run --example verify_identities`.

use kron::identities::*;

fn main() {
    let reports = [
        check_alternating_sum(3, 4),
        check_maximum_and_sandwich(3, 4),
        check_dagger_identity(4),
        check_trivial_class_vanishing(3, 8),
        check_projective_pairing(3, 8),
        check_symmetry(3),
        check_murnaghan_littlewood(4),
        check_lr_boundary(4),
        check_dimension_roots(4),
    ];

    let mut all_clean = true;
    for report in &reports {
        println!("{}", report.to_json_string());
        all_clean &= report.passed();
    }
    println!(
        "\n{} suites, {}",
        reports.len(),
        if all_clean {
            "all clean"
        } else {
            "VIOLATIONS FOUND"
        }
    );
}
