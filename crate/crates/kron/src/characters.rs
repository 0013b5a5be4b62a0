//! Symmetric-group character theory, used as the independent brute-force
//! oracle for every coefficient in the crate.
//!
//! Characters are computed by the Murnaghan-Nakayama border-strip recursion,
//! with strips located through beta-sets (first-column hook lengths). Values
//! are memoized per group order on (remaining shape, remaining cycle type);
//! cycles are consumed largest-first so the remaining cycle type is always a
//! suffix of the original one.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partition::{factorial, Partition};

/// Largest symmetric group the oracle accepts. Everything in the test suites
/// stays well below this; the bound exists to fail loudly instead of
/// grinding on an infeasible group order.
pub const MAX_SYMMETRIC_GROUP: usize = 40;

/// A conjugacy class of `S_n`: its cycle type and the number of elements,
/// `n! / z_ρ` with `z_ρ = Π i^{m_i} m_i!`.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: BigInt,
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order:
/// `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every size up to `max_size`, ordered by size and then
/// reverse-lexicographically. This is the enumeration order of every
/// verification suite.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

/// The centralizer order `z_ρ = Π i^{m_i} m_i!` of a cycle type.
fn centralizer_order(cycle_type: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut run = 0usize;
    let parts = cycle_type.parts();
    for (i, &part) in parts.iter().enumerate() {
        run += 1;
        z *= BigInt::from(part);
        if i + 1 == parts.len() || parts[i + 1] != part {
            z *= factorial(run);
            run = 0;
        }
    }
    z
}

/// The conjugacy classes of `S_n`, cycle types in reverse-lexicographic
/// order.
pub fn conjugacy_classes(n: usize) -> Vec<ConjugacyClass> {
    let order = factorial(n);
    partitions_of(n)
        .into_iter()
        .map(|cycle_type| {
            let (size, rem) = order.div_rem(&centralizer_order(&cycle_type));
            debug_assert!(rem.is_zero());
            ConjugacyClass { cycle_type, size }
        })
        .collect()
}

/// Lazily filled character values for one symmetric group.
///
/// Rows are computed on demand; once a value is present it never changes.
/// The memo map is shared behind a mutex, so concurrent callers either find
/// a finished value or compute it themselves.
pub struct CharacterTable {
    n: usize,
    classes: Vec<ConjugacyClass>,
    memo: Mutex<HashMap<(Partition, Partition), BigInt>>,
}

fn registry() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

impl CharacterTable {
    /// The table for `S_n`, built once per process and shared.
    pub fn for_group(n: usize) -> Result<Arc<CharacterTable>, Error> {
        if n > MAX_SYMMETRIC_GROUP {
            return Err(Error::GroupTooLarge {
                n,
                max: MAX_SYMMETRIC_GROUP,
            });
        }
        let mut registry = registry().lock().unwrap();
        Ok(Arc::clone(registry.entry(n).or_insert_with(|| {
            Arc::new(CharacterTable {
                n,
                classes: conjugacy_classes(n),
                memo: Mutex::new(HashMap::new()),
            })
        })))
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    /// The character value `χ^λ(ρ)`.
    pub fn value(&self, lam: &Partition, rho: &Partition) -> Result<BigInt, Error> {
        if lam.size() != self.n || rho.size() != self.n {
            return Err(Error::SizeMismatch(format!(
                "character of S_{} evaluated at shape {lam} and cycle type {rho}",
                self.n
            )));
        }
        Ok(self.chi(lam, rho))
    }

    /// The full row `(χ^λ(ρ))_ρ` over [`classes`](Self::classes).
    pub fn row(&self, lam: &Partition) -> Result<Vec<BigInt>, Error> {
        if lam.size() != self.n {
            return Err(Error::SizeMismatch(format!(
                "row of S_{} requested for shape {lam}",
                self.n
            )));
        }
        Ok(self
            .classes
            .iter()
            .map(|class| self.chi(lam, &class.cycle_type))
            .collect())
    }

    fn chi(&self, shape: &Partition, cycles: &Partition) -> BigInt {
        debug_assert_eq!(shape.size(), cycles.size());
        if shape.is_empty() {
            return BigInt::one();
        }
        let key = (shape.clone(), cycles.clone());
        if let Some(value) = self.memo.lock().unwrap().get(&key) {
            return value.clone();
        }

        // Remove a border strip of the largest remaining cycle length. In
        // beta-set terms: replace some beta number b by b - r, provided
        // b - r is nonnegative and not already a beta number; the strip
        // height is the number of beta numbers strictly between them.
        let strip = cycles.first();
        let rest = Partition::from_sorted(cycles.parts()[1..].to_vec());
        let rows = shape.len();
        let betas: Vec<usize> = (0..rows).map(|i| shape.get(i) + rows - 1 - i).collect();

        let mut total = BigInt::zero();
        for (i, &beta) in betas.iter().enumerate() {
            if beta < strip {
                continue;
            }
            let lowered = beta - strip;
            if betas.contains(&lowered) {
                continue;
            }
            let height = betas.iter().filter(|&&b| lowered < b && b < beta).count();
            let mut new_betas = betas.clone();
            new_betas[i] = lowered;
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            let new_parts: Vec<usize> = new_betas
                .iter()
                .enumerate()
                .map(|(j, &b)| b - (rows - 1 - j))
                .collect();
            let sub = self.chi(&Partition::from_sorted(new_parts), &rest);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }

        self.memo.lock().unwrap().insert(key, total.clone());
        total
    }
}

/// The character value `χ^λ(ρ)` for `|λ| = |ρ|`.
pub fn mn_character(lam: &Partition, rho: &Partition) -> Result<BigInt, Error> {
    if lam.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "character needs |shape| = |cycle type|, got {lam} and {rho}"
        )));
    }
    CharacterTable::for_group(lam.size())?.value(lam, rho)
}

/// The class-weighted triple inner product
/// `(1/n!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^τ(ρ)`,
/// which counts the multiplicity of the trivial character in the triple
/// product. This is the Kronecker coefficient `g^λ_{μ,τ}`.
pub fn triple_inner(lam: &Partition, mu: &Partition, tau: &Partition) -> Result<BigInt, Error> {
    let n = lam.size();
    if mu.size() != n || tau.size() != n {
        return Err(Error::SizeMismatch(format!(
            "triple inner product needs three partitions of one n, got {lam}, {mu}, {tau}"
        )));
    }
    let table = CharacterTable::for_group(n)?;
    let mut sum = BigInt::zero();
    for class in table.classes() {
        let rho = &class.cycle_type;
        sum += &class.size * table.chi(lam, rho) * table.chi(mu, rho) * table.chi(tau, rho);
    }
    let (value, rem) = sum.div_rem(&factorial(n));
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "class-weighted sum for ({lam}; {mu}; {tau}) is not divisible by {n}!"
        )));
    }
    Ok(value)
}
