//! Scales as torsors over `Z_n`, and scale homomorphisms.
//!
//! A scale keeps the stepwise structure of a pitch-class set while forgetting
//! any tonic: it is the set together with the simply transitive translation
//! action `tau(g, x)`, which yields the element `g` scalar steps above `x`.
//! The action is derived from the normal order and is the same no matter
//! which mode index it is read off from.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pcset::PitchClassSet;

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A pitch-class set equipped with its `Z_n` translation torsor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scale {
    base: PitchClassSet,
    /// Normal order of the base set; degree `d` of the first mode sits at
    /// `order[d]`.
    order: Vec<usize>,
    /// Inverse of `order`, indexed by residue; `usize::MAX` marks residues
    /// outside the set.
    position: Vec<usize>,
}

impl Scale {
    pub fn new(base: PitchClassSet) -> Self {
        let order = base.normal_order();
        let mut position = vec![usize::MAX; base.universe()];
        for (d, &e) in order.iter().enumerate() {
            position[e] = d;
        }
        Self {
            base,
            order,
            position,
        }
    }

    pub fn base(&self) -> &PitchClassSet {
        &self.base
    }

    /// Number of scale steps `n`.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn universe(&self) -> usize {
        self.base.universe()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.base.contains(element)
    }

    /// Normal order of the underlying set.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Degree of `element` in the normal order (the map `mu`).
    pub fn degree_of(&self, element: usize) -> Result<usize> {
        self.position
            .get(element)
            .copied()
            .filter(|&d| d != usize::MAX)
            .ok_or(Error::NotAnElement(element))
    }

    /// Element sitting at normal-order degree `degree` (the map `mu^{-1}`).
    pub fn at_degree(&self, degree: usize) -> usize {
        self.order[degree % self.len()]
    }

    /// The torsor action: the element `g` scalar steps above `x`.
    pub fn translate(&self, g: usize, x: usize) -> Result<usize> {
        let d = self.degree_of(x)?;
        Ok(self.order[(d + g) % self.len()])
    }

    /// Scalar steps from `x` up to `y`: the unique `g` with
    /// `translate(g, x) = y`.
    pub fn interval(&self, x: usize, y: usize) -> Result<usize> {
        let n = self.len();
        Ok((self.degree_of(y)? + n - self.degree_of(x)?) % n)
    }
}

impl Serialize for Scale {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Scale", 2)?;
        s.serialize_field("universe", &self.universe())?;
        s.serialize_field("elements", &self.base.elements())?;
        s.end()
    }
}

/// A torsor homomorphism between two scales: a set map together with the
/// group homomorphism `j -> a*j` it is equivariant over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleHom {
    source: Scale,
    target: Scale,
    /// Set when the hom was built from a pair of mode indices.
    mode_pair: Option<(usize, usize)>,
    multiplier: usize,
    /// Image of each source element, indexed by ascending source element.
    map: Vec<usize>,
}

impl ScaleHom {
    /// The canonical homomorphism determined by a pair of mode indices: the
    /// degree part is `j -> a*j mod n'` with `a = n'/gcd(n, n')`, and the set
    /// part matches source degrees (offset by `i`) to target degrees (offset
    /// by `i'`).
    pub fn new(source: &Scale, target: &Scale, i: usize, i_prime: usize) -> Result<Self> {
        let n = source.len();
        let n_prime = target.len();
        if i >= n {
            return Err(Error::ModeIndexOutOfRange { index: i, size: n });
        }
        if i_prime >= n_prime {
            return Err(Error::ModeIndexOutOfRange {
                index: i_prime,
                size: n_prime,
            });
        }
        let a = n_prime / gcd(n, n_prime);
        // phi = mu_{i'}^{-1} . (j -> a j) . mu_i, with mu_i = (+i) . mu.
        let map = source
            .base()
            .elements()
            .iter()
            .map(|&x| {
                let d = (source.degree_of(x).expect("element of own base") + i) % n;
                let image_degree = (a * d) % n_prime;
                target.at_degree((image_degree + n_prime - i_prime) % n_prime)
            })
            .collect();
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            mode_pair: Some((i, i_prime)),
            multiplier: a,
            map,
        })
    }

    /// The affine homomorphism `x -> at_degree'(a * degree(x) + offset)`.
    /// Requires `a * n = 0 mod n'` so that the degree part is a well-defined
    /// group homomorphism; any offset is allowed (torsors have no origin).
    pub fn affine(source: &Scale, target: &Scale, a: usize, offset: usize) -> Result<Self> {
        let n = source.len();
        let n_prime = target.len();
        if !(a * n).is_multiple_of(n_prime) {
            return Err(Error::BadMultiplier {
                multiplier: a,
                source_size: n,
                target_size: n_prime,
            });
        }
        let map = source
            .base()
            .elements()
            .iter()
            .map(|&x| {
                let d = source.degree_of(x).expect("element of own base");
                target.at_degree((a * d + offset) % n_prime)
            })
            .collect();
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            mode_pair: None,
            multiplier: a,
            map,
        })
    }

    pub fn source(&self) -> &Scale {
        &self.source
    }

    pub fn target(&self) -> &Scale {
        &self.target
    }

    pub fn mode_pair(&self) -> Option<(usize, usize)> {
        self.mode_pair
    }

    /// The group part `a` of `j -> a*j mod n'`.
    pub fn multiplier(&self) -> usize {
        self.multiplier
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

    /// Composition `other . self`, with multiplied group parts.
    pub fn compose(&self, other: &ScaleHom) -> Result<ScaleHom> {
        let map = self
            .map
            .iter()
            .map(|&y| other.apply(y))
            .collect::<Result<Vec<_>>>()?;
        Ok(ScaleHom {
            source: self.source.clone(),
            target: other.target.clone(),
            mode_pair: self.mode_pair.zip(other.mode_pair).map(|(a, b)| (a.0, b.1)),
            multiplier: (self.multiplier * other.multiplier) % other.target.len(),
            map,
        })
    }

    /// Equivariance: `f(tau(g, x)) = tau'(a*g, f(x))` for all `g`, `x`.
    pub fn is_equivariant(&self) -> bool {
        let n = self.source.len();
        let n_prime = self.target.len();
        self.source.base().elements().iter().all(|&x| {
            (0..n).all(|g| {
                let lhs = self.apply(self.source.translate(g, x).unwrap()).unwrap();
                let rhs = self
                    .target
                    .translate((self.multiplier * g) % n_prime, self.apply(x).unwrap())
                    .unwrap();
                lhs == rhs
            })
        })
    }
}
