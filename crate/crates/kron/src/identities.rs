//! Falsifiable verification suites: every structural identity between the
//! coefficient families and the block combinatorics, run over exhaustively
//! enumerated desk-scale inputs and reported with the violating cases.
//!
//! Suites enumerate partitions in reverse-lexicographic order and triples
//! lexicographically, so reports are reproducible run to run.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use serde::{Deserialize, Serialize};

use crate::characters::{partitions_of, partitions_up_to};
use crate::coefficients::{
    kronecker, littlewood_richardson, lr_tableau_count, reduced_kronecker, stable_kronecker_value,
    stable_start,
};
use crate::deligne::{
    alternating_chain_sum, chain_gbar_terms, dimension_polynomial, is_trivial_class,
    locate_in_class, trivial_parameters, ClassChain, ClassPosition,
};

/// One failing input of a suite, with both sides rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification suite. The suite passes exactly when
/// `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            cases: 0,
            violations: Vec::new(),
        }
    }

    fn check<T: PartialEq + fmt::Display>(
        &mut self,
        input: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.violations.push(Violation {
                input: input(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn absorb(&mut self, sub: VerificationReport) {
        self.cases += sub.cases;
        for mut violation in sub.violations {
            violation.input = format!("{}: {}", sub.suite, violation.input);
            self.violations.push(violation);
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("reports are plain data")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {}: {} cases, {} violations",
            self.suite,
            self.cases,
            self.violations.len()
        )
    }
}

/// Checks that the padded Kronecker coefficient is recovered from the
/// reduced ones by the alternating sum over the chain of `λ`:
/// `g^{λ̃(n)}_{μ̃(n),τ̃(n)} = Σ_i (-1)^i ḡ^{λ^(i)}_{μ,τ}`,
/// for all triples of sizes at most `max_size` and `n` running from the
/// first admissible parameter `N` to `N + n_above`.
pub fn check_alternating_sum(max_size: usize, n_above: i64) -> VerificationReport {
    let mut report = VerificationReport::new("alternating_sum");
    let shapes = partitions_up_to(max_size);
    for lam in &shapes {
        for mu in &shapes {
            for tau in &shapes {
                let start = stable_start(lam, mu, tau);
                for n in start..=start + n_above {
                    let direct = kronecker(
                        &lam.add_top_row(n).unwrap(),
                        &mu.add_top_row(n).unwrap(),
                        &tau.add_top_row(n).unwrap(),
                    )
                    .unwrap();
                    let mut chain =
                        ClassChain::new(lam.clone(), n).expect("n >= N keeps lam minimal");
                    let alternating = alternating_chain_sum(&mut chain, 0, mu, tau);
                    report.check(
                        || format!("lam={lam} mu={mu} tau={tau} n={n}"),
                        direct,
                        alternating,
                    );
                }
            }
        }
    }
    report
}

/// Checks that the reduced coefficient bounds the padded sequence from above
/// and that the partial sums `P_k = Σ_{i≤k} (-1)^i ḡ^{λ^(i)}_{μ,τ}` sandwich
/// the Kronecker coefficient: `P_{2k+1} ≤ g ≤ P_{2k}`.
///
/// The even partial sums overshoot and the odd ones undershoot because
/// `P_k - g = (-1)^k [μ ⊗ τ : λ^(k+1)]` at parameter `n`, and that bracket
/// is a multiplicity, hence nonnegative. (Stated the other way around the
/// sandwich already fails at `P_0 = ḡ ≥ g`.)
pub fn check_maximum_and_sandwich(max_size: usize, n_above: i64) -> VerificationReport {
    let mut report = VerificationReport::new("maximum_and_sandwich");
    let shapes = partitions_up_to(max_size);
    for lam in &shapes {
        for mu in &shapes {
            for tau in &shapes {
                let start = stable_start(lam, mu, tau);
                for n in start..=start + n_above {
                    let g = kronecker(
                        &lam.add_top_row(n).unwrap(),
                        &mu.add_top_row(n).unwrap(),
                        &tau.add_top_row(n).unwrap(),
                    )
                    .unwrap();
                    report.check(
                        || format!("lam={lam} mu={mu} tau={tau} n={n} (maximum)"),
                        true,
                        reduced_kronecker(lam, mu, tau) >= g,
                    );
                    let mut chain =
                        ClassChain::new(lam.clone(), n).expect("n >= N keeps lam minimal");
                    let terms = chain_gbar_terms(&mut chain, 0, mu, tau);
                    let mut partial = BigInt::zero();
                    for (k, term) in terms.into_iter().enumerate() {
                        if k % 2 == 0 {
                            partial += term;
                            report.check(
                                || format!("lam={lam} mu={mu} tau={tau} n={n} k={k}: g <= P_{k}"),
                                true,
                                g <= partial,
                            );
                        } else {
                            partial -= term;
                            report.check(
                                || format!("lam={lam} mu={mu} tau={tau} n={n} k={k}: P_{k} <= g"),
                                true,
                                partial <= g,
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

/// Checks the same-size reformulation of the alternating sum: for all
/// `λ, μ, τ` of `n`,
/// `g^λ_{μ,τ} = Σ_{i≥1} (-1)^{i+1} ḡ^{λ†i}_{μ̄,τ̄}`,
/// where `λ†i` excises row `i` and the bars remove top rows. Also checks the
/// structural fact behind it: the excision sequence `{λ†i}_{i≥1}` is exactly
/// the chain of `λ̄` at `n`.
pub fn check_dagger_identity(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("dagger_identity");
    let shapes = partitions_of(n);

    for lam in &shapes {
        let bar = lam.remove_top_row();
        let mut chain = ClassChain::new(bar.clone(), n as i64)
            .expect("a top-row removal is always minimal at its original size");
        for i in 1..=lam.len() + 4 {
            report.check(
                || format!("lam={lam} n={n} i={i} (excision vs chain)"),
                lam.excise_row(i),
                chain.element(i - 1).clone(),
            );
        }
    }

    for lam in &shapes {
        for mu in &shapes {
            for tau in &shapes {
                let mu_bar = mu.remove_top_row();
                let tau_bar = tau.remove_top_row();
                let bound = mu_bar.size() + tau_bar.size();
                let mut sum = BigInt::zero();
                for i in 1.. {
                    let excised = lam.excise_row(i);
                    if excised.size() > bound {
                        debug_assert!(lam.excise_row(i + 1).size() > excised.size());
                        break;
                    }
                    let term = reduced_kronecker(&excised, &mu_bar, &tau_bar);
                    if i % 2 == 1 {
                        sum += term;
                    } else {
                        sum -= term;
                    }
                }
                let direct = kronecker(lam, mu, tau).unwrap();
                report.check(|| format!("lam={lam} mu={mu} tau={tau} n={n}"), direct, sum);
            }
        }
    }
    report
}

/// Checks that the alternating sum over any chain vanishes against a
/// trivial-class tensor factor: if `μ` sits in a trivial class at `n`, then
/// `Σ_i (-1)^i ḡ^{λ^(i)}_{μ,τ} = 0` for every minimal `λ` and every `τ`.
pub fn check_trivial_class_vanishing(max_size: usize, n_max: i64) -> VerificationReport {
    let mut report = VerificationReport::new("trivial_class_vanishing");
    let shapes = partitions_up_to(max_size);
    for n in 0..=n_max {
        for mu in &shapes {
            if !is_trivial_class(mu, n) {
                continue;
            }
            for tau in &shapes {
                for lam in &shapes {
                    if n < lam.min_parameter() {
                        continue;
                    }
                    let mut chain =
                        ClassChain::new(lam.clone(), n).expect("minimality checked above");
                    let sum = alternating_chain_sum(&mut chain, 0, mu, tau);
                    report.check(
                        || format!("mu={mu} n={n} tau={tau} lam={lam}"),
                        BigInt::zero(),
                        sum,
                    );
                }
            }
        }
    }
    report
}

/// Checks the signed pairing for projective tensor factors: with
/// `μ = μ^(k)` and `τ = τ^(l)` in nontrivial classes and `λ` minimal at `n`,
/// `Σ_i (-1)^i ḡ^{λ^(i)}_{μ,τ} = (-1)^{k+l} g^{λ̃(n)}_{μ^(0)~(n), τ^(0)~(n)}`.
pub fn check_projective_pairing(max_size: usize, n_max: i64) -> VerificationReport {
    let mut report = VerificationReport::new("projective_pairing");
    let shapes = partitions_up_to(max_size);
    for n in 0..=n_max {
        for mu in &shapes {
            let ClassPosition::NonTrivial {
                minimal: mu_min,
                index: k,
            } = locate_in_class(mu, n)
            else {
                continue;
            };
            for tau in &shapes {
                let ClassPosition::NonTrivial {
                    minimal: tau_min,
                    index: l,
                } = locate_in_class(tau, n)
                else {
                    continue;
                };
                for lam in &shapes {
                    if n < lam.min_parameter() {
                        continue;
                    }
                    let mut chain =
                        ClassChain::new(lam.clone(), n).expect("minimality checked above");
                    let lhs = alternating_chain_sum(&mut chain, 0, mu, tau);
                    let base = kronecker(
                        &lam.add_top_row(n).unwrap(),
                        &mu_min.add_top_row(n).unwrap(),
                        &tau_min.add_top_row(n).unwrap(),
                    )
                    .unwrap();
                    let rhs = if (k + l) % 2 == 0 { base } else { -base };
                    report.check(
                        || format!("lam={lam} mu={mu} (k={k}) tau={tau} (l={l}) n={n}"),
                        rhs,
                        lhs,
                    );
                }
            }
        }
    }
    report
}

/// Checks that the reduced coefficient is invariant under all six orderings
/// of its three diagrams.
pub fn check_symmetry(max_size: usize) -> VerificationReport {
    let mut report = VerificationReport::new("symmetry");
    let shapes = partitions_up_to(max_size);
    for lam in &shapes {
        for mu in &shapes {
            for tau in &shapes {
                let base = reduced_kronecker(lam, mu, tau);
                let orderings = [
                    (lam, tau, mu),
                    (mu, lam, tau),
                    (mu, tau, lam),
                    (tau, lam, mu),
                    (tau, mu, lam),
                ];
                for (a, b, c) in orderings {
                    report.check(
                        || format!("lam={lam} mu={mu} tau={tau} vs ({a}; {b}; {c})"),
                        base.clone(),
                        reduced_kronecker(a, b, c),
                    );
                }
            }
        }
    }
    report
}

/// Checks the size-triangle vanishing by direct stable evaluation, without
/// the shortcut: whenever one size exceeds the sum of the other two, the
/// stable value is zero.
pub fn check_murnaghan_littlewood(max_size: usize) -> VerificationReport {
    let mut report = VerificationReport::new("murnaghan_littlewood");
    let shapes = partitions_up_to(max_size);
    for lam in &shapes {
        for mu in &shapes {
            for tau in &shapes {
                let (a, b, c) = (lam.size(), mu.size(), tau.size());
                if a <= b + c && b <= a + c && c <= a + b {
                    continue;
                }
                report.check(
                    || format!("lam={lam} mu={mu} tau={tau}"),
                    BigInt::zero(),
                    stable_kronecker_value(lam, mu, tau),
                );
            }
        }
    }
    report
}

/// Checks that on the size boundary `|λ| = |μ| + |τ|` the reduced
/// coefficient equals the restriction coefficient, with the character and
/// tableau routes for the latter also agreeing. Equivalently: the top-degree
/// structure constants of the size-filtered coefficient ring are the
/// Littlewood-Richardson numbers of the ring of symmetric functions.
pub fn check_lr_boundary(max_total: usize) -> VerificationReport {
    let mut report = VerificationReport::new("lr_boundary");
    for total in 0..=max_total {
        for mu_size in 0..=total {
            for mu in partitions_of(mu_size) {
                for tau in partitions_of(total - mu_size) {
                    for lam in partitions_of(total) {
                        let by_characters = littlewood_richardson(&lam, &mu, &tau).unwrap();
                        let by_tableaux = lr_tableau_count(&lam, &mu, &tau).unwrap();
                        report.check(
                            || format!("lam={lam} mu={mu} tau={tau} (two routes)"),
                            by_characters.clone(),
                            by_tableaux,
                        );
                        report.check(
                            || format!("lam={lam} mu={mu} tau={tau} (boundary)"),
                            by_characters,
                            reduced_kronecker(&lam, &mu, &tau),
                        );
                    }
                }
            }
        }
    }
    report
}

/// Checks the three-way equivalence for every diagram and small parameter:
/// the dimension polynomial vanishes at `d` ⇔ the class at `d` is trivial ⇔
/// `d` lies in the closed-form parameter set.
pub fn check_dimension_roots(max_size: usize) -> VerificationReport {
    let mut report = VerificationReport::new("dimension_roots");
    for lam in partitions_up_to(max_size) {
        let poly = dimension_polynomial(&lam);
        let criterion = trivial_parameters(&lam);
        for d in 0..=2 * lam.size() as i64 + 2 {
            let root = poly.eval(d).is_zero();
            let trivial = is_trivial_class(&lam, d);
            report.check(
                || format!("lam={lam} d={d} (root vs trivial class)"),
                root,
                trivial,
            );
            report.check(
                || format!("lam={lam} d={d} (trivial class vs closed form)"),
                trivial,
                criterion.contains(&d),
            );
        }
    }
    report
}

/// Runs the symmetry, size-triangle, boundary and dimension-root suites at
/// one size cap and merges the outcome into a single report.
pub fn check_global(max_size: usize) -> VerificationReport {
    let mut report = VerificationReport::new("global");
    report.absorb(check_symmetry(max_size));
    report.absorb(check_murnaghan_littlewood(max_size));
    report.absorb(check_lr_boundary(max_size));
    report.absorb(check_dimension_roots(max_size));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::stable_parameter;
    use crate::partition::Partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn alternating_sum_worked_instances() {
        let one = p(&[1]);
        // n = 2: chain (1) ⊂ (2) ⊂ (2,2) ⊂ ..., terms 1, 1, truncated.
        let mut chain = ClassChain::new(one.clone(), 2).unwrap();
        assert_eq!(
            chain_gbar_terms(&mut chain, 0, &one, &one),
            [BigInt::from(1), BigInt::from(1)]
        );
        assert_eq!(
            alternating_chain_sum(&mut chain, 0, &one, &one),
            BigInt::zero()
        );
        // n = 3: chain (1) ⊂ (3) ⊂ ..., second term already outside.
        let mut chain = ClassChain::new(one.clone(), 3).unwrap();
        assert_eq!(
            alternating_chain_sum(&mut chain, 0, &one, &one),
            BigInt::from(1)
        );
    }

    #[test]
    fn alternating_sum_suite_is_clean() {
        let report = check_alternating_sum(2, 3);
        assert!(report.passed(), "{report}: {:?}", report.violations);
        assert!(report.cases > 0);
    }

    #[test]
    fn sandwich_worked_instances() {
        // λ=μ=τ=(1), n=2: P_0 = 1, P_1 = 0 and g = 0 sits in [P_1, P_0].
        let report = check_maximum_and_sandwich(1, 1);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn dagger_identity_small_groups() {
        for n in 0..=4 {
            let report = check_dagger_identity(n);
            assert!(report.passed(), "n={n}: {:?}", report.violations);
        }
    }

    #[test]
    fn excision_sequence_is_the_chain_of_the_bar() {
        for n in 0..=7usize {
            for lam in crate::characters::partitions_of(n) {
                let mut chain = ClassChain::new(lam.remove_top_row(), n as i64).unwrap();
                for i in 1..=lam.len() + 4 {
                    assert_eq!(&lam.excise_row(i), chain.element(i - 1), "{lam} at i = {i}");
                }
            }
        }
    }

    #[test]
    fn trivial_class_vanishing_worked_instance() {
        // μ=(2) is trivial at n=3; chain of λ=(1) gives 1 - 1 + 0 = 0.
        let mu = p(&[2]);
        assert!(is_trivial_class(&mu, 3));
        assert_eq!(reduced_kronecker(&p(&[1]), &mu, &p(&[1])), BigInt::from(1));
        assert_eq!(reduced_kronecker(&p(&[3]), &mu, &p(&[1])), BigInt::from(1));
        let mut chain = ClassChain::new(p(&[1]), 3).unwrap();
        assert_eq!(
            alternating_chain_sum(&mut chain, 0, &mu, &p(&[1])),
            BigInt::zero()
        );
        let report = check_trivial_class_vanishing(2, 5);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn projective_pairing_worked_instance() {
        // n=2, μ=τ=(2)=(1)^(1): both sides vanish.
        let two = p(&[2]);
        assert_eq!(
            locate_in_class(&two, 2),
            ClassPosition::NonTrivial {
                minimal: p(&[1]),
                index: 1
            }
        );
        let mut chain = ClassChain::new(p(&[1]), 2).unwrap();
        assert_eq!(
            alternating_chain_sum(&mut chain, 0, &two, &two),
            BigInt::zero()
        );
        let report = check_projective_pairing(2, 5);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn global_suite_small() {
        let report = check_global(2);
        assert!(report.passed(), "{:?}", report.violations);
        let empty_only = check_global(0);
        assert!(empty_only.passed());
    }

    #[test]
    fn reports_serialize_with_the_agreed_fields() {
        let mut report = VerificationReport::new("demo");
        report.check(|| "x=1".to_string(), BigInt::from(1), BigInt::from(2));
        let json: serde_json::Value = serde_json::from_str(&report.to_json_string()).unwrap();
        assert_eq!(json["suite"], "demo");
        assert_eq!(json["cases"], 1);
        assert_eq!(json["violations"][0]["input"], "x=1");
        assert_eq!(json["violations"][0]["expected"], "1");
        assert_eq!(json["violations"][0]["actual"], "2");
    }

    #[test]
    fn stable_parameter_dominates_row_bounds() {
        let shapes = partitions_up_to(3);
        for lam in &shapes {
            for mu in &shapes {
                for tau in &shapes {
                    let n = stable_parameter(lam, mu, tau);
                    assert!(n >= lam.min_parameter());
                    assert!(n >= mu.min_parameter());
                    assert!(n >= tau.min_parameter());
                }
            }
        }
    }
}
