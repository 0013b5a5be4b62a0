//! The three coefficient families: Kronecker coefficients `g`, their stable
//! (reduced) values `ḡ`, and Littlewood-Richardson coefficients `c`.
//!
//! `ḡ^λ_{μ,τ}` is evaluated by padding all three diagrams with a top row at
//! an explicit parameter past the stabilization threshold and computing the
//! plain Kronecker coefficient there; the alternating-sum route is kept in
//! the verification suites as a cross-check, never as the definition.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::characters::{triple_inner, CharacterTable};
use crate::error::Error;
use crate::partition::{factorial, Partition};

/// The Kronecker coefficient `g^λ_{μ,τ}`: the multiplicity of the
/// irreducible `λ` in `μ ⊗ τ`, for three partitions of one `n`.
pub fn kronecker(lam: &Partition, mu: &Partition, tau: &Partition) -> Result<BigInt, Error> {
    triple_inner(lam, mu, tau)
}

/// First parameter at which all three diagrams admit a new top row:
/// `max(|λ|+λ_1, |μ|+μ_1, |τ|+τ_1)`.
pub fn stable_start(lam: &Partition, mu: &Partition, tau: &Partition) -> i64 {
    lam.min_parameter()
        .max(mu.min_parameter())
        .max(tau.min_parameter())
}

/// A parameter at which the padded Kronecker sequence has certainly reached
/// its stable value: `max(|μ|+|τ|+μ_1+τ_1, N)` with `N` from
/// [`stable_start`].
pub fn stable_parameter(lam: &Partition, mu: &Partition, tau: &Partition) -> i64 {
    let pair_bound = (mu.size() + tau.size() + mu.first() + tau.first()) as i64;
    pair_bound.max(stable_start(lam, mu, tau))
}

/// The padded Kronecker coefficient at the stable parameter, with no
/// size-triangle shortcut. [`reduced_kronecker`] is the entry point; this
/// route is public so the vanishing outside the triangle can be verified
/// rather than assumed.
///
/// # Panics
///
/// Panics if the stable parameter exceeds the supported symmetric-group
/// bound.
pub fn stable_kronecker_value(lam: &Partition, mu: &Partition, tau: &Partition) -> BigInt {
    let n = stable_parameter(lam, mu, tau);
    let padded = |d: &Partition| {
        d.add_top_row(n)
            .expect("the stable parameter dominates every row bound")
    };
    match kronecker(&padded(lam), &padded(mu), &padded(tau)) {
        Ok(value) => value,
        Err(err) => panic!("stable evaluation of ({lam}; {mu}; {tau}) at n = {n} failed: {err}"),
    }
}

/// The reduced Kronecker coefficient `ḡ^λ_{μ,τ}`: the eventual constant
/// value of the padded Kronecker sequence. Returns 0 outright when the three
/// sizes violate a triangle inequality.
///
/// # Panics
///
/// Panics if the stable evaluation would need a symmetric group beyond the
/// supported bound.
pub fn reduced_kronecker(lam: &Partition, mu: &Partition, tau: &Partition) -> BigInt {
    let (a, b, c) = (lam.size(), mu.size(), tau.size());
    if a > b + c || b > a + c || c > a + b {
        return BigInt::zero();
    }
    // The verification suites re-request the same triples constantly; values
    // are memoized process-wide, like the character tables.
    type Memo = Mutex<HashMap<(Partition, Partition, Partition), BigInt>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lam.clone(), mu.clone(), tau.clone());
    if let Some(value) = memo.lock().unwrap().get(&key) {
        return value.clone();
    }
    let value = stable_kronecker_value(lam, mu, tau);
    memo.lock().unwrap().insert(key, value.clone());
    value
}

/// The Littlewood-Richardson coefficient `c^λ_{μ,τ}`: the multiplicity of
/// `μ ⊠ τ` in the restriction of `λ` from `S_{|λ|}` to `S_{|μ|} × S_{|τ|}`,
/// for `|λ| = |μ| + |τ|`.
///
/// Computed by the character inner product over pairs of classes; in builds
/// with debug assertions the independent tableau count
/// ([`lr_tableau_count`]) is checked to agree.
pub fn littlewood_richardson(
    lam: &Partition,
    mu: &Partition,
    tau: &Partition,
) -> Result<BigInt, Error> {
    if lam.size() != mu.size() + tau.size() {
        return Err(Error::SizeMismatch(format!(
            "restriction coefficient needs |λ| = |μ| + |τ|, got {lam}; {mu}; {tau}"
        )));
    }
    let lam_table = CharacterTable::for_group(lam.size())?;
    let mu_table = CharacterTable::for_group(mu.size())?;
    let tau_table = CharacterTable::for_group(tau.size())?;

    let mut sum = BigInt::zero();
    for mu_class in mu_table.classes() {
        for tau_class in tau_table.classes() {
            let merged = merge_cycle_types(&mu_class.cycle_type, &tau_class.cycle_type);
            sum += &mu_class.size
                * &tau_class.size
                * lam_table.value(lam, &merged)?
                * mu_table.value(mu, &mu_class.cycle_type)?
                * tau_table.value(tau, &tau_class.cycle_type)?;
        }
    }
    let (value, rem) = sum.div_rem(&(factorial(mu.size()) * factorial(tau.size())));
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "restriction sum for ({lam}; {mu}; {tau}) is not divisible by |μ|!·|τ|!"
        )));
    }
    debug_assert_eq!(
        value,
        lr_tableau_count(lam, mu, tau)?,
        "character and tableau routes disagree on ({lam}; {mu}; {tau})"
    );
    Ok(value)
}

/// Union of two cycle types: all parts together, sorted decreasingly.
fn merge_cycle_types(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_sorted(parts)
}

/// Independent Littlewood-Richardson route: the number of skew semistandard
/// tableaux of shape `λ/μ` and content `τ` whose reverse reading word is a
/// lattice word.
pub fn lr_tableau_count(lam: &Partition, mu: &Partition, tau: &Partition) -> Result<BigInt, Error> {
    if lam.size() != mu.size() + tau.size() {
        return Err(Error::SizeMismatch(format!(
            "tableau count needs |λ| = |μ| + |τ|, got {lam}; {mu}; {tau}"
        )));
    }
    if !lam.contains(mu) {
        return Ok(BigInt::zero());
    }

    // Cells of the skew shape in reverse reading order: rows top to bottom,
    // each row right to left. Filling in this order lets the lattice
    // condition be enforced one letter at a time.
    let mut cells = Vec::new();
    for row in 0..lam.len() {
        for col in (mu.get(row)..lam.get(row)).rev() {
            cells.push((row, col));
        }
    }

    let letters = tau.len();
    let mut grid = vec![vec![0usize; lam.first()]; lam.len()];
    let mut counts = vec![0usize; letters];

    fn fill(
        cells: &[(usize, usize)],
        at: usize,
        lam: &Partition,
        mu: &Partition,
        tau: &Partition,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> BigInt {
        let Some(&(row, col)) = cells.get(at) else {
            return BigInt::from(1);
        };
        let mut total = BigInt::zero();
        for letter in 1..=tau.len() {
            if counts[letter - 1] >= tau.get(letter - 1) {
                continue;
            }
            // Lattice: after placing, every prefix holds at least as many
            // copies of `letter - 1` as of `letter`.
            if letter > 1 && counts[letter - 2] <= counts[letter - 1] {
                continue;
            }
            // Rows weakly increase left to right.
            if col + 1 < lam.get(row) && letter > grid[row][col + 1] {
                continue;
            }
            // Columns strictly increase, against filled cells only.
            if row > 0 && col >= mu.get(row - 1) && letter <= grid[row - 1][col] {
                continue;
            }
            grid[row][col] = letter;
            counts[letter - 1] += 1;
            total += fill(cells, at + 1, lam, mu, tau, grid, counts);
            counts[letter - 1] -= 1;
            grid[row][col] = 0;
        }
        total
    }

    Ok(fill(&cells, 0, lam, mu, tau, &mut grid, &mut counts))
}

/// The sampled padded Kronecker sequence of one triple.
#[derive(Clone, Debug)]
pub struct StabilizationWindow {
    pub lam: Partition,
    pub mu: Partition,
    pub tau: Partition,
    /// First parameter at which all three padded diagrams exist.
    pub n_start: i64,
    /// From this parameter on, the value equals the reduced coefficient.
    pub n_stable: i64,
    /// `(n, g)` pairs for consecutive `n`.
    pub samples: Vec<(i64, BigInt)>,
}

/// Samples `g` along the padded sequence for `n` in `[n_from, n_to]`.
/// `n_from` must not precede the window start.
pub fn stabilization_sequence(
    lam: &Partition,
    mu: &Partition,
    tau: &Partition,
    n_from: i64,
    n_to: i64,
) -> Result<StabilizationWindow, Error> {
    let n_start = stable_start(lam, mu, tau);
    if n_from < n_start {
        return Err(Error::BoundViolation {
            context: "stabilization window",
            n: n_from,
            min: n_start,
        });
    }
    let mut samples = Vec::new();
    for n in n_from..=n_to {
        let value = kronecker(
            &lam.add_top_row(n)?,
            &mu.add_top_row(n)?,
            &tau.add_top_row(n)?,
        )?;
        samples.push((n, value));
    }
    Ok(StabilizationWindow {
        lam: lam.clone(),
        mu: mu.clone(),
        tau: tau.clone(),
        n_start,
        n_stable: stable_parameter(lam, mu, tau),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::partitions_up_to;
    use num_traits::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(
            kronecker(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            kronecker(&p(&[3]), &p(&[3]), &p(&[2, 1])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            kronecker(&p(&[2, 2]), &p(&[3, 1]), &p(&[3, 1])).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn littlewood_richardson_examples() {
        assert_eq!(
            littlewood_richardson(&p(&[2]), &p(&[1]), &p(&[1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            littlewood_richardson(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            littlewood_richardson(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            BigInt::from(2)
        );
        assert!(matches!(
            littlewood_richardson(&p(&[3]), &p(&[1]), &p(&[1])),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn lr_routes_agree_exhaustively() {
        let shapes = partitions_up_to(6);
        for lam in &shapes {
            for mu in &shapes {
                for tau in &shapes {
                    if lam.size() != mu.size() + tau.size() {
                        continue;
                    }
                    assert_eq!(
                        littlewood_richardson(lam, mu, tau).unwrap(),
                        lr_tableau_count(lam, mu, tau).unwrap(),
                        "({lam}; {mu}; {tau})"
                    );
                }
            }
        }
    }

    #[test]
    fn reduced_kronecker_examples() {
        assert_eq!(
            reduced_kronecker(&p(&[1]), &p(&[1]), &p(&[1])),
            BigInt::one()
        );
        assert_eq!(
            reduced_kronecker(&p(&[3]), &p(&[1]), &p(&[1])),
            BigInt::zero()
        );
        let shapes = partitions_up_to(3);
        for mu in &shapes {
            for tau in &shapes {
                let got = reduced_kronecker(&Partition::empty(), mu, tau);
                let want = if mu == tau {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                assert_eq!(got, want, "unit object against ({mu}; {tau})");
            }
        }
    }

    #[test]
    fn reduced_kronecker_is_well_defined_past_the_stable_parameter() {
        let shapes = partitions_up_to(4);
        for lam in &shapes {
            for mu in &shapes {
                for tau in &shapes {
                    let n = stable_parameter(lam, mu, tau);
                    for extra in 0..=1 {
                        let m = n + extra;
                        let value = kronecker(
                            &lam.add_top_row(m).unwrap(),
                            &mu.add_top_row(m).unwrap(),
                            &tau.add_top_row(m).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(
                            value,
                            stable_kronecker_value(lam, mu, tau),
                            "({lam}; {mu}; {tau}) at n = {m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn stabilization_examples() {
        let window = stabilization_sequence(&p(&[1]), &p(&[1]), &p(&[1]), 2, 5).unwrap();
        let values: Vec<i64> = window
            .samples
            .iter()
            .map(|(_, v)| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(window.samples[0].0, 2);
        assert_eq!(values, [0, 1, 1, 1]);
        assert_eq!(window.n_start, 2);
        assert_eq!(window.n_stable, 4);

        // Tensoring with the unit: every padded value is [λ = μ] = 1.
        let window = stabilization_sequence(&p(&[1]), &p(&[1]), &Partition::empty(), 2, 4).unwrap();
        let values: Vec<i64> = window
            .samples
            .iter()
            .map(|(_, v)| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(values, [1, 1, 1]);
        assert_eq!(
            reduced_kronecker(&p(&[1]), &p(&[1]), &Partition::empty()),
            BigInt::one()
        );

        let window = stabilization_sequence(&p(&[2]), &p(&[1]), &p(&[1]), 4, 7).unwrap();
        let values: Vec<i64> = window
            .samples
            .iter()
            .map(|(_, v)| i64::try_from(v).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*values.last().unwrap(), 1);
        assert_eq!(
            reduced_kronecker(&p(&[2]), &p(&[1]), &p(&[1])),
            BigInt::one()
        );
    }

    #[test]
    fn stabilization_rejects_early_start() {
        assert!(matches!(
            stabilization_sequence(&p(&[2]), &p(&[1]), &p(&[1]), 3, 6),
            Err(Error::BoundViolation { .. })
        ));
    }
}
