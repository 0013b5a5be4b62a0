//! Exact computation of Kronecker coefficients, their stable (reduced)
//! values, and Littlewood-Richardson coefficients, together with the block
//! combinatorics of the interpolated symmetric-group categories at integer
//! parameter: equivalence classes of Young diagrams, chains, lifts, Hom
//! dimensions and dimension polynomials.
//!
//! Every identity the crate exposes can be re-verified at desk scale against
//! a character-theoretic brute-force oracle; see the [`identities`] module
//! and the `examples/` directory.
//!
//! ```
//! use kron::{kronecker, reduced_kronecker, Partition};
//!
//! let lam: Partition = "2,1".parse()?;
//! // Multiplicity of (2,1) in (2,1) ⊗ (2,1) inside S_3.
//! assert_eq!(kronecker(&lam, &lam, &lam)?.to_string(), "1");
//! // The stable value once all three diagrams grow a long top row.
//! assert_eq!(reduced_kronecker(&lam, &lam, &lam).to_string(), "9");
//! # Ok::<(), kron::Error>(())
//! ```

pub mod cache;
pub mod characters;
pub mod coefficients;
pub mod deligne;
pub mod error;
pub mod identities;
pub mod partition;

pub use error::Error;
pub use partition::{ClassSequence, Partition};

pub use characters::{
    conjugacy_classes, mn_character, partitions_of, partitions_up_to, triple_inner, CharacterTable,
    ConjugacyClass,
};
pub use coefficients::{
    kronecker, littlewood_richardson, lr_tableau_count, reduced_kronecker, stabilization_sequence,
    stable_kronecker_value, stable_parameter, stable_start, StabilizationWindow,
};
pub use deligne::{
    class_chain, dimension_polynomial, equivalent, hom_dim, is_trivial_class, lift,
    locate_in_class, object_status, tensor_multiplicity, trivial_parameters, ClassChain,
    ClassPosition, DimensionPolynomial, ObjectStatus,
};
pub use identities::{VerificationReport, Violation};
