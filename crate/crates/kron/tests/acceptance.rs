//! Acceptance suite: one test per criterion, each printing a PASS line when
//! its checks hold. All values are exact integers; comparisons are equality,
//! never tolerance. Run with `cargo test --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use kron::cache::{compute_for_key, write_gbar_table_file, CacheKey, CoeffCache};
use kron::coefficients::{stabilization_sequence, stable_start};
use kron::identities::*;
use kron::{
    conjugacy_classes, dimension_polynomial, kronecker, littlewood_richardson, lr_tableau_count,
    mn_character, partition::factorial, partitions_of, partitions_up_to, reduced_kronecker,
    tensor_multiplicity, trivial_parameters, Partition,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn pass(label: &str) {
    println!("criterion {label}: PASS");
}

fn assert_clean(report: &VerificationReport) {
    assert!(
        report.passed(),
        "{report}; first violations: {:?}",
        &report.violations[..report.violations.len().min(5)]
    );
}

#[test]
fn criterion_01_worked_row_example() {
    let lam = p(&[6, 5, 4, 1]);
    let padded = lam.add_top_row(23).unwrap();
    assert_eq!(padded, p(&[7, 6, 5, 4, 1]));
    assert_eq!(padded.size(), 23);
    assert_eq!(padded.remove_top_row(), lam);
    pass("1 (worked row example)");
}

#[test]
fn criterion_02_oracle_sanity() {
    let started = Instant::now();
    // Sum of squared dimensions is the group order.
    for n in 0..=10 {
        let total: BigInt = partitions_of(n)
            .iter()
            .map(|lam| {
                let dim = lam.irrep_dim();
                &dim * &dim
            })
            .sum();
        assert_eq!(total, factorial(n), "sum of squares in S_{n}");
    }
    // Column orthogonality and row orthonormality.
    for n in 0..=8 {
        let classes = conjugacy_classes(n);
        let shapes = partitions_of(n);
        let order = factorial(n);
        for a in &classes {
            for b in &classes {
                let sum: BigInt = shapes
                    .iter()
                    .map(|lam| {
                        mn_character(lam, &a.cycle_type).unwrap()
                            * mn_character(lam, &b.cycle_type).unwrap()
                    })
                    .sum();
                if a.cycle_type == b.cycle_type {
                    assert_eq!(sum, &order / &a.size, "column norm at {}", a.cycle_type);
                } else {
                    assert!(
                        sum.is_zero(),
                        "columns {} vs {}",
                        a.cycle_type,
                        b.cycle_type
                    );
                }
            }
        }
        for lam in &shapes {
            let norm: BigInt = classes
                .iter()
                .map(|c| {
                    let chi = mn_character(lam, &c.cycle_type).unwrap();
                    &c.size * &chi * &chi
                })
                .sum();
            assert_eq!(norm, order, "row norm of {lam}");
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}, bound is 10 s");
    pass(&format!("2 (oracle sanity, {elapsed:.2?})"));
}

#[test]
fn criterion_03_symmetry() {
    let started = Instant::now();
    let report = check_symmetry(4);
    assert_clean(&report);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, bound is 60 s");
    pass(&format!(
        "3 (symmetry, {} cases, {elapsed:.2?})",
        report.cases
    ));
}

#[test]
fn criterion_04_murnaghan_littlewood() {
    let report = check_murnaghan_littlewood(5);
    assert_clean(&report);
    pass(&format!("4 (size triangle, {} cases)", report.cases));
}

#[test]
fn criterion_05_stabilization_and_monotonicity() {
    let started = Instant::now();
    let shapes = partitions_up_to(4);
    let mut cases = 0u64;
    for lam in &shapes {
        for mu in &shapes {
            for tau in &shapes {
                let n0 = stable_start(lam, mu, tau);
                let window = stabilization_sequence(lam, mu, tau, n0, n0 + 8).unwrap();
                assert!(
                    window.samples.windows(2).all(|w| w[0].1 <= w[1].1),
                    "({lam}; {mu}; {tau}) is not weakly increasing: {:?}",
                    window.samples
                );
                let stable = reduced_kronecker(lam, mu, tau);
                for (n, value) in &window.samples {
                    if *n >= window.n_stable {
                        assert_eq!(
                            value, &stable,
                            "({lam}; {mu}; {tau}) at n = {n} differs from the stable value"
                        );
                    }
                }
                cases += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}, bound is 5 min");
    pass(&format!(
        "5 (stabilization, {cases} windows, {elapsed:.2?})"
    ));
}

#[test]
fn criterion_06_alternating_sum() {
    // Worked instances first: the chain of (1) gives 1 - 1 = 0 at n = 2 and
    // 1 - 0 = 1 at n = 3.
    let one = p(&[1]);
    let g2 = kronecker(&p(&[1, 1]), &p(&[1, 1]), &p(&[1, 1])).unwrap();
    assert_eq!(g2, BigInt::zero());
    let g3 = kronecker(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap();
    assert_eq!(g3, BigInt::one());
    assert_eq!(reduced_kronecker(&one, &one, &one), BigInt::one());
    assert_eq!(reduced_kronecker(&p(&[2]), &one, &one), BigInt::one());

    let report = check_alternating_sum(3, 4);
    assert_clean(&report);
    pass(&format!("6 (alternating sum, {} cases)", report.cases));
}

#[test]
fn criterion_07_maximum_and_sandwich() {
    let report = check_maximum_and_sandwich(3, 4);
    assert_clean(&report);
    pass(&format!("7 (maximum and sandwich, {} cases)", report.cases));
}

#[test]
fn criterion_08_dagger_identity() {
    let mut cases = 0u64;
    for n in 0..=6 {
        let report = check_dagger_identity(n);
        assert_clean(&report);
        cases += report.cases;
    }
    pass(&format!("8 (row-excision identity, {cases} cases)"));
}

#[test]
fn criterion_09_trivial_class_vanishing() {
    // Worked instance: μ = (2) is trivial at n = 3 and the chain of (1)
    // contributes 1 - 1 + 0.
    let mu = p(&[2]);
    assert!(kron::is_trivial_class(&mu, 3));
    assert_eq!(reduced_kronecker(&p(&[1]), &mu, &p(&[1])), BigInt::one());
    assert_eq!(reduced_kronecker(&p(&[3]), &mu, &p(&[1])), BigInt::one());

    let report = check_trivial_class_vanishing(3, 8);
    assert_clean(&report);
    pass(&format!(
        "9 (trivial-class vanishing, {} cases)",
        report.cases
    ));
}

#[test]
fn criterion_10_projective_pairing() {
    // Worked instance: n = 2, μ = τ = (2) at chain index 1, λ = (1); both
    // sides vanish.
    let side = kronecker(&p(&[1, 1]), &p(&[1, 1]), &p(&[1, 1])).unwrap();
    assert_eq!(side, BigInt::zero());

    let report = check_projective_pairing(3, 8);
    assert_clean(&report);
    pass(&format!("10 (projective pairing, {} cases)", report.cases));
}

#[test]
fn criterion_11_lr_boundary() {
    assert_eq!(
        littlewood_richardson(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
        BigInt::from(2)
    );
    assert_eq!(
        lr_tableau_count(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
        BigInt::from(2)
    );
    let report = check_lr_boundary(5);
    assert_clean(&report);
    pass(&format!(
        "11 (restriction boundary, {} cases)",
        report.cases
    ));
}

#[test]
fn criterion_12_dimension_polynomial_roots() {
    let started = Instant::now();
    let quadratic = dimension_polynomial(&p(&[2]));
    let coeffs: Vec<String> = quadratic
        .coefficients()
        .iter()
        .map(|c| c.to_string())
        .collect();
    assert_eq!(coeffs, ["0", "-3/2", "1/2"]);
    assert_eq!(quadratic.nonnegative_integer_roots(), [0, 3]);
    assert_eq!(
        trivial_parameters(&p(&[2])).into_iter().collect::<Vec<_>>(),
        [0, 3]
    );

    let report = check_dimension_roots(5);
    assert_clean(&report);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}, bound is 30 s");
    pass(&format!(
        "12 (dimension roots, {} cases, {elapsed:.2?})",
        report.cases
    ));
}

#[test]
fn criterion_13_integer_parameter_multiplicities() {
    let shapes = partitions_up_to(3);
    let mut cases = 0u64;
    for lam in &shapes {
        for mu in &shapes {
            for tau in &shapes {
                let n0 = stable_start(lam, mu, tau);
                for n in 0..=n0 + 4 {
                    // Must compute (and be nonnegative) at every parameter.
                    let structural = tensor_multiplicity(mu, tau, lam, n).unwrap();
                    assert!(structural >= BigInt::zero());
                    if n >= n0 {
                        let direct = kronecker(
                            &lam.add_top_row(n).unwrap(),
                            &mu.add_top_row(n).unwrap(),
                            &tau.add_top_row(n).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(structural, direct, "({lam}; {mu}; {tau}) at n = {n}");
                    }
                    cases += 1;
                }
            }
        }
    }
    pass(&format!(
        "13 (integer-parameter multiplicities, {cases} cases)"
    ));
}

#[test]
fn criterion_14_cache_transparency_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let cache_path = dir.path().join("cache.jsonl");

    // Round-trip at least 100 distinct keys through disk and compare with
    // fresh computation.
    let shapes = partitions_up_to(3);
    let mut keys = Vec::new();
    'fill: for lam in &shapes {
        for mu in &shapes {
            for tau in &shapes {
                keys.push(CacheKey::gbar(lam, mu, tau));
                if keys.len() >= 120 {
                    break 'fill;
                }
            }
        }
    }
    assert!(keys.len() >= 100);
    let mut cache = CoeffCache::open(&cache_path).unwrap();
    for key in &keys {
        let value = compute_for_key(key).unwrap();
        cache.put(key.clone(), &value).unwrap();
    }
    let reloaded = CoeffCache::open(&cache_path).unwrap();
    for key in &keys {
        let stored = reloaded.get(key).expect("key survived the round trip");
        assert_eq!(
            stored,
            compute_for_key(key).unwrap().to_string(),
            "cache transparency for {key:?}"
        );
    }

    // Cold and warm table runs are byte-identical.
    let table_path = dir.path().join("table.csv");
    let table_cache_path = dir.path().join("table-cache.jsonl");
    let mut cold = CoeffCache::open(&table_cache_path).unwrap();
    write_gbar_table_file(3, &table_path, &mut cold).unwrap();
    let first = std::fs::read(&table_path).unwrap();
    let mut warm = CoeffCache::open(&table_cache_path).unwrap();
    assert!(!warm.is_empty());
    write_gbar_table_file(3, &table_path, &mut warm).unwrap();
    let second = std::fs::read(&table_path).unwrap();
    assert_eq!(first, second, "warm rerun changed the table bytes");

    pass(&format!(
        "14 (cache transparency, {} keys; warm rerun byte-identical)",
        keys.len()
    ));
}
