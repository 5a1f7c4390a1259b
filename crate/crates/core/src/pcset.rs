//! Pitch-class sets and their normal order.
//!
//! A pitch-class set is a nonempty subset of the `N`-element chromatic
//! universe `Z_N`, stored in ascending residue order. The normal order picks
//! a canonical rotation of the ascending circular ordering, which is what
//! gives the set its stepwise (scalar) structure.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonempty subset of `Z_N`, stored in ascending residue order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PitchClassSet {
    universe: usize,
    elements: Vec<usize>,
}

impl PitchClassSet {
    /// Build a set from residues mod `universe`. The input may be in any
    /// order; duplicates and out-of-range residues are rejected.
    pub fn new(universe: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        if universe == 0 {
            return Err(Error::ZeroUniverse);
        }
        let mut elements: Vec<usize> = elements.into_iter().collect();
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        for &e in &elements {
            if e >= universe {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    universe,
                });
            }
        }
        elements.sort_unstable();
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateElement(pair[0]));
            }
        }
        Ok(Self { universe, elements })
    }

    /// Size of the chromatic universe `N`.
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Number of elements `n`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    /// Elements in ascending residue order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    /// The normal order: the most compact rotation of the ascending circular
    /// ordering. Among rotations the circular span (last minus first, mod N)
    /// is minimized; ties are broken by lexicographic comparison of the
    /// interval vectors measured from the first element, and any remaining
    /// tie (possible only for transposition-symmetric sets) by the smallest
    /// initial residue.
    pub fn normal_order(&self) -> Vec<usize> {
        let n = self.len();
        let big_n = self.universe;
        let mut best_start = 0usize;
        let mut best_key: Option<Vec<usize>> = None;
        for start in 0..n {
            // Intervals from the rotation's first element to each successive
            // element; the last entry is the circular span.
            let first = self.elements[start];
            let mut key = Vec::with_capacity(n);
            let span = (self.elements[(start + n - 1) % n] + big_n - first) % big_n;
            key.push(span);
            for j in 1..n {
                key.push((self.elements[(start + j) % n] + big_n - first) % big_n);
            }
            // Ascending iteration order makes "keep strictly smaller" break
            // residual ties toward the smallest initial residue.
            if best_key.as_ref().is_none_or(|b| key < *b) {
                best_key = Some(key);
                best_start = start;
            }
        }
        (0..n)
            .map(|j| self.elements[(best_start + j) % n])
            .collect()
    }
}

impl Serialize for PitchClassSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PitchClassSet", 2)?;
        s.serialize_field("universe", &self.universe)?;
        s.serialize_field("elements", &self.elements)?;
        s.end()
    }
}

impl std::fmt::Display for PitchClassSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: ", self.universe)?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
