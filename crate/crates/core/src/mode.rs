//! Modes: pitch-class sets with a cyclic group structure.
//!
//! The first mode of a set labels elements by their normal-order position;
//! mode `i` shifts every label up by `i`. The element labelled zero is the
//! tonic, and transporting addition of labels back to the set makes each
//! mode an abelian group isomorphic to `Z_n` with the tonic as identity.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pcset::PitchClassSet;
use crate::scale::{gcd, Scale};

/// A pitch-class set together with a mode index, i.e. a choice of tonic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mode {
    scale: Scale,
    index: usize,
}

impl Mode {
    pub fn new(base: PitchClassSet, index: usize) -> Result<Self> {
        let scale = Scale::new(base);
        if index >= scale.len() {
            return Err(Error::ModeIndexOutOfRange {
                index,
                size: scale.len(),
            });
        }
        Ok(Self { scale, index })
    }

    /// The mode of an existing scale with the given index.
    pub fn of_scale(scale: Scale, index: usize) -> Result<Self> {
        if index >= scale.len() {
            return Err(Error::ModeIndexOutOfRange {
                index,
                size: scale.len(),
            });
        }
        Ok(Self { scale, index })
    }

    pub fn base(&self) -> &PitchClassSet {
        self.scale.base()
    }

    /// The underlying scale (tonic forgotten).
    pub fn scale(&self) -> &Scale {
        &self.scale
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn len(&self) -> usize {
        self.scale.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Degree of `x` in this mode: normal-order position shifted by the mode
    /// index (the map `mu_i`).
    pub fn degree_of(&self, x: usize) -> Result<usize> {
        Ok((self.scale.degree_of(x)? + self.index) % self.len())
    }

    /// Element at degree `d` (the map `mu_i^{-1}`).
    pub fn at_degree(&self, d: usize) -> usize {
        let n = self.len();
        self.scale.at_degree((d % n + n - self.index) % n)
    }

    /// The identity element of the mode's group structure.
    pub fn tonic(&self) -> usize {
        self.at_degree(0)
    }

    /// The full degree bijection as `(element, degree)` pairs in ascending
    /// element order.
    pub fn degree_table(&self) -> Vec<(usize, usize)> {
        self.base()
            .elements()
            .iter()
            .map(|&x| (x, self.degree_of(x).expect("element of own base")))
            .collect()
    }

    /// The mode's group operation: `x (+) y = mu_i^{-1}(mu_i(x) + mu_i(y))`.
    pub fn add(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.at_degree(self.degree_of(x)? + self.degree_of(y)?))
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Mode", 3)?;
        s.serialize_field("universe", &self.base().universe())?;
        s.serialize_field("elements", &self.base().elements())?;
        s.serialize_field("mode_index", &self.index)?;
        s.end()
    }
}

/// A structure-preserving map between modes, induced by the degree-group
/// homomorphism `j -> a*j mod n'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeHom {
    source: Mode,
    target: Mode,
    multiplier: usize,
    /// Image of each source element, indexed by ascending source element.
    map: Vec<usize>,
}

impl ModeHom {
    /// The canonical homomorphism with `a = n'/gcd(n, n')`, the orientation
    /// preserving choice. It is always defined; when `n` does not divide
    /// `n'` it can collapse (down to the constant map onto the target tonic
    /// when `gcd(n, n') = 1`).
    pub fn new(source: &Mode, target: &Mode) -> Self {
        let a = target.len() / gcd(source.len(), target.len());
        Self::with_multiplier(source, target, a)
    }

    fn with_multiplier(source: &Mode, target: &Mode, a: usize) -> Self {
        debug_assert_eq!((a * source.len()) % target.len(), 0);
        let map = source
            .base()
            .elements()
            .iter()
            .map(|&x| {
                let d = source.degree_of(x).expect("element of own base");
                target.at_degree((a * d) % target.len())
            })
            .collect();
        Self {
            source: source.clone(),
            target: target.clone(),
            multiplier: a,
            map,
        }
    }

    pub fn source(&self) -> &Mode {
        &self.source
    }

    pub fn target(&self) -> &Mode {
        &self.target
    }

    /// The group part `a` of `j -> a*j mod n'`.
    pub fn multiplier(&self) -> usize {
        self.multiplier
    }

    /// The degree-group homomorphism `j -> a*j mod n'`.
    pub fn degree_part(&self, j: usize) -> usize {
        (self.multiplier * j) % self.target.len()
    }

    pub fn apply(&self, x: usize) -> Result<usize> {
        let idx = self
            .source
            .base()
            .elements()
            .binary_search(&x)
            .map_err(|_| Error::NotAnElement(x))?;
        Ok(self.map[idx])
    }

    /// Composition `other . self`; the group parts multiply.
    pub fn compose(&self, other: &ModeHom) -> ModeHom {
        ModeHom::with_multiplier(
            &self.source,
            &other.target,
            (self.multiplier * other.multiplier) % other.target.len(),
        )
    }

    /// The degree square commutes: `mu_{i'}(phi(x)) = a * mu_i(x) mod n'`.
    pub fn square_commutes(&self) -> bool {
        self.source.base().elements().iter().all(|&x| {
            let lhs = self.target.degree_of(self.apply(x).unwrap()).unwrap();
            lhs == self.degree_part(self.source.degree_of(x).unwrap())
        })
    }
}
