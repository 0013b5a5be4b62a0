//! Exact Young-diagram arithmetic: partitions, the row transforms the rest of
//! the crate is built on, and the hook-length dimension formula.
//!
//! Partitions are stored without trailing zeros, so structural equality is
//! canonical. The text encoding used everywhere (CLI arguments, cache files,
//! CSV tables) is comma-separated decimal parts, with `-` for the empty
//! partition.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::Error;

/// An integer partition: a weakly decreasing sequence of positive integers.
///
/// A partition is read interchangeably as a Young diagram (in English
/// notation, row lengths decreasing from top to bottom) and as the label of
/// an irreducible or indecomposable object.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, rejecting sequences that increase somewhere.
    /// Trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self, Error> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(format!("{parts:?}")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            size: 0,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells of the diagram.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of rows of the diagram.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length by 0-based index; rows past the last one have length 0.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of the first (longest) row, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.get(0)
    }

    /// True if the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.get(i) >= other.get(i))
    }

    /// Smallest integer parameter at which a new top row can be added,
    /// namely `|λ| + λ_1`.
    pub fn min_parameter(&self) -> i64 {
        (self.size + self.first()) as i64
    }

    /// Prepends a top row so that the result has exactly `n` cells.
    ///
    /// Defined only for `n >= |λ| + λ_1`; below that the new row would be
    /// shorter than the old first row and the result would not be a diagram.
    pub fn add_top_row(&self, n: i64) -> Result<Partition, Error> {
        if n < self.min_parameter() {
            return Err(Error::BoundViolation {
                context: "cannot add a top row",
                n,
                min: self.min_parameter(),
            });
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(n as usize - self.size);
        parts.extend_from_slice(&self.parts);
        Ok(Partition::from_sorted(parts))
    }

    /// Removes the top row. Inverse of [`add_top_row`](Self::add_top_row)
    /// wherever the latter is defined; the empty partition maps to itself.
    pub fn remove_top_row(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        Partition::from_sorted(self.parts[1..].to_vec())
    }

    /// Removes row `i` (1-based, rows past the last count as empty) and
    /// lengthens every earlier row by one cell.
    ///
    /// The result is always a valid partition, of size
    /// `|u| - u_i + (i - 1)`.
    pub fn excise_row(&self, i: usize) -> Partition {
        assert!(i >= 1, "row index is 1-based");
        let mut parts: Vec<usize> = (0..i - 1).map(|j| self.get(j) + 1).collect();
        if i < self.len() {
            parts.extend_from_slice(&self.parts[i..]);
        }
        Partition::from_sorted(parts)
    }

    /// The sequence `(t - |λ|, λ_1 - 1, λ_2 - 2, ...)` truncated to `len`
    /// entries. Two diagrams are in the same class at integer parameter `t`
    /// exactly when these sequences agree as multisets.
    pub fn class_sequence(&self, t: i64, len: usize) -> ClassSequence {
        assert!(len >= 1, "class sequence needs at least one entry");
        let mut entries = Vec::with_capacity(len);
        entries.push(t - self.size as i64);
        for i in 1..len {
            entries.push(self.get(i - 1) as i64 - i as i64);
        }
        ClassSequence {
            entries,
            t,
            source: self.clone(),
        }
    }

    /// Dimension of the irreducible representation of `S_{|λ|}` indexed by
    /// this partition, by the hook length formula `|λ|! / Π hooks`.
    pub fn irrep_dim(&self) -> BigInt {
        let mut hooks = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = self.parts[i + 1..].iter().take_while(|&&r| r > j).count();
                hooks *= BigInt::from(arm + leg + 1);
            }
        }
        let (dim, rem) = factorial(self.size).div_rem(&hooks);
        debug_assert!(rem == BigInt::from(0));
        dim
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

impl fmt::Display for Partition {
    /// The text encoding: `-` for the empty partition, comma-separated parts
    /// otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        if text == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in text.split(',') {
            let part: usize = piece.parse().map_err(|_| Error::Parse(text.to_string()))?;
            if part == 0 {
                return Err(Error::Parse(text.to_string()));
            }
            parts.push(part);
        }
        if parts.is_empty() {
            return Err(Error::Parse(text.to_string()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(text.to_string()));
        }
        Ok(Partition::from_sorted(parts))
    }
}

/// A truncated class sequence `(t - |λ|, λ_1 - 1, λ_2 - 2, ...)`.
///
/// Entries at indices past the number of rows are forced to `-i`, so a long
/// enough truncation carries the same information as the full infinite
/// sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSequence {
    entries: Vec<i64>,
    t: i64,
    source: Partition,
}

impl ClassSequence {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn parameter(&self) -> i64 {
        self.t
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    /// Entries sorted in decreasing order, for multiset comparison.
    pub fn sorted_entries(&self) -> Vec<i64> {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted
    }
}
