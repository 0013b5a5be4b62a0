//! Block combinatorics of the interpolated symmetric-group category at an
//! integer parameter `n`: the equivalence relation on Young diagrams, the
//! chain structure of nontrivial classes, lifts to the generic parameter,
//! Hom dimensions, object status, tensor multiplicities at `n`, and the
//! dimension polynomials of indecomposables.
//!
//! Two diagrams are equivalent at `n` when their class sequences
//! `(n - |λ|, λ_1 - 1, λ_2 - 2, ...)` agree as multisets. Past index
//! `max(ℓ, |n - |λ||)` the sequence is pinned to `-i`, so comparing prefixes
//! two entries longer than that decides equivalence exactly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coefficients::reduced_kronecker;
use crate::error::Error;
use crate::partition::Partition;
use serde::Serialize;

fn prefix_len(a: &Partition, b: &Partition, n: i64) -> usize {
    let bound = (a.len() as i64)
        .max(b.len() as i64)
        .max((n - a.size() as i64).abs())
        .max((n - b.size() as i64).abs());
    bound as usize + 2
}

/// True when `a` and `b` lie in the same class at integer parameter `n`.
pub fn equivalent(a: &Partition, b: &Partition, n: i64) -> bool {
    let len = prefix_len(a, b, n);
    a.class_sequence(n, len).sorted_entries() == b.class_sequence(n, len).sorted_entries()
}

/// The chain `λ^(0) ⊂ λ^(1) ⊂ ...` of a nontrivial class, grown lazily from
/// its minimal diagram.
///
/// Element `i+1` adds a strip to row `i+1` of element `i`: the first strip
/// has length `n - |λ| - λ_1 + 1`, and the strip in row `i+1` (for `i ≥ 1`)
/// has length `λ_i - λ_{i+1} + 1`, all in terms of the minimal diagram `λ`.
/// Sizes strictly increase along the chain.
#[derive(Clone, Debug)]
pub struct ClassChain {
    minimal: Partition,
    n: i64,
    elements: Vec<Partition>,
}

impl ClassChain {
    /// Starts the chain of `minimal` at parameter `n`. Fails unless
    /// `n ≥ |minimal| + minimal_1`, the condition for `minimal` to head a
    /// nontrivial class.
    pub fn new(minimal: Partition, n: i64) -> Result<Self, Error> {
        if n < minimal.min_parameter() {
            return Err(Error::NotMinimal {
                lam: minimal.to_string(),
                n,
                min: minimal.min_parameter(),
            });
        }
        Ok(ClassChain {
            elements: vec![minimal.clone()],
            minimal,
            n,
        })
    }

    pub fn minimal(&self) -> &Partition {
        &self.minimal
    }

    pub fn parameter(&self) -> i64 {
        self.n
    }

    /// The materialized prefix of the chain.
    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    /// Element `i`, extending the chain as needed.
    pub fn element(&mut self, i: usize) -> &Partition {
        self.extend_to(i);
        &self.elements[i]
    }

    /// Materializes elements `0..=depth`.
    pub fn extend_to(&mut self, depth: usize) {
        while self.elements.len() <= depth {
            let i = self.elements.len();
            let mut parts = self.elements[i - 1].parts().to_vec();
            let target = if i == 1 {
                (self.n - self.minimal.size() as i64 + 1) as usize
            } else {
                self.minimal.get(i - 2) + 1
            };
            if parts.len() < i {
                parts.push(target);
            } else {
                parts[i - 1] = target;
            }
            let next = Partition::from_sorted(parts);
            debug_assert!(next.size() > self.elements[i - 1].size());
            debug_assert!(next.contains(&self.elements[i - 1]));
            self.elements.push(next);
        }
    }
}

/// Builds the chain of `minimal` at `n` with elements `0..=depth`
/// materialized.
pub fn class_chain(minimal: &Partition, n: i64, depth: usize) -> Result<ClassChain, Error> {
    let mut chain = ClassChain::new(minimal.clone(), n)?;
    chain.extend_to(depth);
    Ok(chain)
}

/// Where a diagram sits in its class at parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassPosition {
    /// The class contains this diagram alone.
    Trivial,
    /// The class is the chain of `minimal`, and the diagram is element
    /// `index` of it.
    NonTrivial { minimal: Partition, index: usize },
}

/// Locates `lam` in its class at parameter `n`.
///
/// A diagram with `n ≥ |λ| + λ_1` is the minimal element of its own chain.
/// Otherwise the whole class is reconstructed from the class-sequence
/// multiset: each choice of the entry playing the role `n - |λ'|` leaves a
/// strictly decreasing remainder that determines at most one candidate
/// minimal diagram; valid candidates are walked to find `lam`.
pub fn locate_in_class(lam: &Partition, n: i64) -> ClassPosition {
    if n >= lam.min_parameter() {
        return ClassPosition::NonTrivial {
            minimal: lam.clone(),
            index: 0,
        };
    }
    let entries = lam
        .class_sequence(n, prefix_len(lam, lam, n))
        .entries()
        .to_vec();
    let mut tried = BTreeSet::new();
    for pick in 0..entries.len() {
        let head = entries[pick];
        if !tried.insert(head) {
            continue;
        }
        let mut rest: Vec<i64> = entries[..pick]
            .iter()
            .chain(&entries[pick + 1..])
            .copied()
            .collect();
        rest.sort_unstable_by(|x, y| y.cmp(x));
        if rest.windows(2).any(|w| w[0] <= w[1]) {
            continue;
        }
        // λ'_j = rest[j-1] + j; strict decrease of `rest` makes this weakly
        // decreasing, so only nonnegativity can fail.
        let mut parts = Vec::with_capacity(rest.len());
        let mut valid = true;
        for (idx, &entry) in rest.iter().enumerate() {
            let part = entry + idx as i64 + 1;
            if part < 0 {
                valid = false;
                break;
            }
            parts.push(part as usize);
        }
        if !valid {
            continue;
        }
        let candidate = Partition::from_sorted(parts);
        if candidate.size() as i64 != n - head || n < candidate.min_parameter() {
            continue;
        }
        debug_assert!(equivalent(lam, &candidate, n));
        let mut chain = ClassChain::new(candidate.clone(), n).expect("minimality checked above");
        for index in 0.. {
            let element = chain.element(index);
            if element == lam {
                return ClassPosition::NonTrivial {
                    minimal: candidate,
                    index,
                };
            }
            if element.size() >= lam.size() {
                break;
            }
        }
    }
    ClassPosition::Trivial
}

/// The parameters at which `lam` sits in a trivial class, in closed form:
/// `{|λ| + λ_l - l : l = 1, ..., |λ|}`.
pub fn trivial_parameters(lam: &Partition) -> BTreeSet<i64> {
    (1..=lam.size())
        .map(|l| (lam.size() + lam.get(l - 1)) as i64 - l as i64)
        .collect()
}

/// True when the class of `lam` at `n` contains `lam` alone. In builds with
/// debug assertions the answer is checked against the closed-form parameter
/// set of [`trivial_parameters`].
pub fn is_trivial_class(lam: &Partition, n: i64) -> bool {
    let trivial = matches!(locate_in_class(lam, n), ClassPosition::Trivial);
    debug_assert!(
        n < 0 || trivial == trivial_parameters(lam).contains(&n),
        "class of {lam} at {n} disagrees with the closed-form criterion"
    );
    trivial
}

/// The multiset of generic-parameter indecomposables a given indecomposable
/// lifts to: itself for a trivial class or a chain-minimal diagram, and the
/// pair `{λ^(i), λ^(i-1)}` for chain index `i ≥ 1`.
pub fn lift(lam: &Partition, n: i64) -> Vec<Partition> {
    match locate_in_class(lam, n) {
        ClassPosition::Trivial | ClassPosition::NonTrivial { index: 0, .. } => vec![lam.clone()],
        ClassPosition::NonTrivial { minimal, index } => {
            let mut chain = ClassChain::new(minimal, n).expect("located minimal is minimal");
            vec![
                chain.element(index).clone(),
                chain.element(index - 1).clone(),
            ]
        }
    }
}

/// Dimension of the Hom space between the indecomposables labelled `a` and
/// `b` at parameter `n`.
///
/// Diagrams in different classes have no morphisms between them. Within a
/// chain at indices `i`, `j`: the dimension is 1 for adjacent indices, 0 for
/// indices two or more apart, 2 for the endomorphisms of an element of index
/// at least 1, and 1 for the endomorphisms of the minimal element or of a
/// trivial-class object.
pub fn hom_dim(a: &Partition, b: &Partition, n: i64) -> usize {
    match (locate_in_class(a, n), locate_in_class(b, n)) {
        (ClassPosition::Trivial, _) | (_, ClassPosition::Trivial) => usize::from(a == b),
        (
            ClassPosition::NonTrivial {
                minimal: min_a,
                index: i,
            },
            ClassPosition::NonTrivial {
                minimal: min_b,
                index: j,
            },
        ) => {
            if min_a != min_b || i.abs_diff(j) >= 2 {
                0
            } else if i != j {
                1
            } else if i >= 1 {
                2
            } else {
                1
            }
        }
    }
}

/// Status of the indecomposable labelled by a diagram, viewed in the abelian
/// envelope at parameter `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ObjectStatus {
    /// Trivial class: simple and projective, a semisimple block on its own.
    SimpleProjective,
    /// Minimal element of a chain: simple but not projective.
    SimpleNonProjective,
    /// Chain index at least 1: projective (and not simple).
    Projective,
}

pub fn object_status(lam: &Partition, n: i64) -> ObjectStatus {
    match locate_in_class(lam, n) {
        ClassPosition::Trivial => ObjectStatus::SimpleProjective,
        ClassPosition::NonTrivial { index: 0, .. } => ObjectStatus::SimpleNonProjective,
        ClassPosition::NonTrivial { .. } => ObjectStatus::Projective,
    }
}

/// The reduced coefficients `ḡ^{chain[start + k]}_{μ,τ}` for `k = 0, 1, ...`
/// up to the last chain element inside the size triangle. Later terms all
/// vanish: chain sizes strictly increase, and a reduced coefficient is zero
/// once `|λ^(i)| > |μ| + |τ|`.
pub(crate) fn chain_gbar_terms(
    chain: &mut ClassChain,
    start: usize,
    mu: &Partition,
    tau: &Partition,
) -> Vec<BigInt> {
    let bound = mu.size() + tau.size();
    let mut terms = Vec::new();
    for i in start.. {
        let element = chain.element(i).clone();
        if element.size() > bound {
            debug_assert!(chain.element(i + 1).size() > element.size());
            debug_assert!(reduced_kronecker(&element, mu, tau).is_zero());
            break;
        }
        terms.push(reduced_kronecker(&element, mu, tau));
    }
    terms
}

/// `Σ_k (-1)^k ḡ^{chain[start + k]}_{μ,τ}`, truncated by the size triangle.
pub(crate) fn alternating_chain_sum(
    chain: &mut ClassChain,
    start: usize,
    mu: &Partition,
    tau: &Partition,
) -> BigInt {
    let mut sum = BigInt::zero();
    for (k, term) in chain_gbar_terms(chain, start, mu, tau)
        .into_iter()
        .enumerate()
    {
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// The multiplicity of the indecomposable `λ` in `μ ⊗ τ` at integer
/// parameter `n`.
///
/// Both tensor factors are lifted to the generic parameter, where the
/// structure constants are the reduced coefficients, and the inclusion of
/// `λ`'s chain is unwound by an alternating sum: with `(minimal, i)` the
/// position of `λ`,
/// `[μ ⊗ τ : λ]_n = Σ_{j≥0} (-1)^j Σ_{a ∈ lift(μ), b ∈ lift(τ)} ḡ^{λ^(i+j)}_{a,b}`.
/// For a trivial-class `λ` only the `j = 0` term exists.
pub fn tensor_multiplicity(
    mu: &Partition,
    tau: &Partition,
    lam: &Partition,
    n: i64,
) -> Result<BigInt, Error> {
    let mu_lift = lift(mu, n);
    let tau_lift = lift(tau, n);
    let mut total = BigInt::zero();
    match locate_in_class(lam, n) {
        ClassPosition::Trivial => {
            for a in &mu_lift {
                for b in &tau_lift {
                    total += reduced_kronecker(lam, a, b);
                }
            }
        }
        ClassPosition::NonTrivial { minimal, index } => {
            let mut chain = ClassChain::new(minimal, n).expect("located minimal is minimal");
            for a in &mu_lift {
                for b in &tau_lift {
                    total += alternating_chain_sum(&mut chain, index, a, b);
                }
            }
        }
    }
    if total.is_negative() {
        return Err(Error::NegativeMultiplicity {
            value: total.to_string(),
            context: format!("[{mu} ⊗ {tau} : {lam}] at n = {n}"),
        });
    }
    Ok(total)
}

/// The polynomial giving the dimension of the indecomposable labelled `λ` as
/// a function of the parameter.
///
/// Stored with exact rational coefficients in ascending powers; it takes
/// integer values at every integer, and its nonnegative integer roots are
/// exactly the parameters where the class of `λ` is trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionPolynomial {
    lam: Partition,
    coeffs: Vec<BigRational>,
}

impl DimensionPolynomial {
    pub fn source(&self) -> &Partition {
        &self.lam
    }

    /// Coefficients in ascending powers, length `|λ| + 1`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut value = BigRational::zero();
        for coeff in self.coeffs.iter().rev() {
            value = value * x + coeff;
        }
        value
    }

    /// Value at an integer argument, which is always an integer.
    pub fn eval(&self, x: i64) -> BigInt {
        let value = self.eval_rational(&BigRational::from_integer(BigInt::from(x)));
        assert!(
            value.is_integer(),
            "dimension polynomial of {} is not integral at {x}",
            self.lam
        );
        value.to_integer()
    }

    /// The nonnegative integer roots. Roots can only occur where the class
    /// is trivial, so the closed-form parameter set bounds the search.
    pub fn nonnegative_integer_roots(&self) -> Vec<i64> {
        let limit = self.lam.min_parameter() + self.lam.size() as i64 + 1;
        (0..=limit).filter(|&d| self.eval(d).is_zero()).collect()
    }
}

/// Interpolates the dimension polynomial of `λ` through the `|λ| + 1` points
/// `(n, dim λ̃(n))` for `n = |λ| + λ_1, ..., |λ| + λ_1 + |λ|`, with exact
/// rational arithmetic.
pub fn dimension_polynomial(lam: &Partition) -> DimensionPolynomial {
    let degree = lam.size();
    let start = lam.min_parameter();
    let points: Vec<(i64, BigInt)> = (start..=start + degree as i64)
        .map(|n| {
            let padded = lam
                .add_top_row(n)
                .expect("interpolation nodes start at the row bound");
            (n, padded.irrep_dim())
        })
        .collect();

    let mut coeffs = vec![BigRational::zero(); degree + 1];
    for (i, (node, value)) in points.iter().enumerate() {
        // Lagrange basis polynomial Π_{j≠i} (X - x_j) / (x_i - x_j).
        let mut basis = vec![BigRational::one()];
        let mut denominator = BigRational::one();
        for (j, (other, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = multiply_by_linear(&basis, *other);
            denominator *= BigRational::from_integer(BigInt::from(node - other));
        }
        let scale = BigRational::from_integer(value.clone()) / denominator;
        for (k, coeff) in basis.iter().enumerate() {
            coeffs[k] += coeff * &scale;
        }
    }
    DimensionPolynomial {
        lam: lam.clone(),
        coeffs,
    }
}

/// `poly * (X - root)` on ascending coefficient vectors.
fn multiply_by_linear(poly: &[BigRational], root: i64) -> Vec<BigRational> {
    let root = BigRational::from_integer(BigInt::from(root));
    let mut out = vec![BigRational::zero(); poly.len() + 1];
    for (k, coeff) in poly.iter().enumerate() {
        out[k + 1] += coeff;
        out[k] -= coeff * &root;
    }
    out
}
