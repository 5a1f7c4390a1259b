//! Orbit covers: the family of all scalar translates of a generating chord,
//! together with affine transport between covers over different scales.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::composition::IntervalComposition;
use crate::error::{Error, Result};
use crate::scale::{gcd, Scale, ScaleHom};

/// A nonempty subset of a scale, stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    elements: Vec<usize>,
}

impl Chord {
    pub fn new(scale: &Scale, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        if elements.is_empty() {
            return Err(Error::EmptyChord);
        }
        elements.sort_unstable();
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateElement(pair[0]));
            }
        }
        for &e in &elements {
            if !scale.contains(e) {
                return Err(Error::NotAnElement(e));
            }
        }
        Ok(Self { elements })
    }

    fn from_members(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        Self { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Chord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

/// The chord obtained by stacking `sigma`'s partial sums above `x`:
/// `sigma(x) = { T_{S_b}(x) : 0 <= b < k }`.
pub fn realize(sigma: &IntervalComposition, scale: &Scale, x: usize) -> Result<Chord> {
    if sigma.total() != scale.len() {
        return Err(Error::SizeMismatch {
            sigma: sigma.total(),
            scale: scale.len(),
        });
    }
    let sums = sigma.partial_sums();
    let elements = sums[..sigma.len()]
        .iter()
        .map(|&s| scale.translate(s, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(Chord::from_members(elements))
}

/// The orbit cover `X^(A)`: every scalar translate of the chord generated by
/// `sigma` at `root`, indexed by the translation amount.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCover {
    scale: Scale,
    sigma: IntervalComposition,
    root: usize,
    /// `members[i] = T_i(generator)`, indexed by `i` in `Z_n`.
    members: Vec<Chord>,
    /// Deduplicated members in first-occurrence order.
    distinct: Vec<Chord>,
    /// Index into `distinct` for each indexed member.
    member_class: Vec<usize>,
}

pub fn orbit_cover(scale: &Scale, sigma: &IntervalComposition, root: usize) -> Result<OrbitCover> {
    if sigma.total() != scale.len() {
        return Err(Error::SizeMismatch {
            sigma: sigma.total(),
            scale: scale.len(),
        });
    }
    scale.degree_of(root)?;
    let n = scale.len();
    let members: Vec<Chord> = (0..n)
        .map(|i| {
            let base = scale.translate(i, root).expect("root checked above");
            realize(sigma, scale, base).expect("sizes checked above")
        })
        .collect();
    let mut distinct: Vec<Chord> = Vec::new();
    let mut member_class = Vec::with_capacity(n);
    for m in &members {
        match distinct.iter().position(|d| d == m) {
            Some(j) => member_class.push(j),
            None => {
                distinct.push(m.clone());
                member_class.push(distinct.len() - 1);
            }
        }
    }
    Ok(OrbitCover {
        scale: scale.clone(),
        sigma: sigma.clone(),
        root,
        members,
        distinct,
        member_class,
    })
}

impl OrbitCover {
    pub fn scale(&self) -> &Scale {
        &self.scale
    }

    pub fn sigma(&self) -> &IntervalComposition {
        &self.sigma
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// The generating chord `sigma(root)`, i.e. `members[0]`.
    pub fn generator(&self) -> &Chord {
        &self.members[0]
    }

    /// All `n` translates in index order (duplicates retained).
    pub fn members(&self) -> &[Chord] {
        &self.members
    }

    /// Deduplicated members in first-occurrence order.
    pub fn distinct_members(&self) -> &[Chord] {
        &self.distinct
    }

    /// Index into `distinct_members` of the `i`-th translate.
    pub fn class_of_member(&self, i: usize) -> usize {
        self.member_class[i]
    }

    /// Member `i` in stacking order: the root of the translate followed by
    /// the successive partial-sum offsets.
    pub fn member_stacked(&self, i: usize) -> Vec<usize> {
        let base = self.scale.translate(i, self.root).expect("root is valid");
        let sums = self.sigma.partial_sums();
        sums[..self.sigma.len()]
            .iter()
            .map(|&s| self.scale.translate(s, base).expect("base is valid"))
            .collect()
    }

    /// `gcd(n, k) = 1`; guarantees all `n` translates are distinct.
    pub fn is_primitive(&self) -> bool {
        gcd(self.scale.len(), self.sigma.len()) == 1
    }
}

impl Serialize for OrbitCover {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("OrbitCover", 4)?;
        s.serialize_field("scale", &self.scale)?;
        s.serialize_field("sigma", &self.sigma)?;
        s.serialize_field("root", &self.root)?;
        s.serialize_field("members", &self.members)?;
        s.end()
    }
}

/// The affine transport of an orbit cover onto a target scale: degrees
/// relative to the root are multiplied by the unit `u`, and the image root
/// lands at target degree `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverTransport {
    source: OrbitCover,
    image: OrbitCover,
    unit: usize,
    offset: usize,
    /// `(x, f(x))` pairs in scale order starting from the source root.
    pairs: Vec<(usize, usize)>,
}

/// Transport `cover` along `x -> at_degree'(u * interval(root, x) + v)`.
/// The image cover is generated by `u_transform(sigma, u)` at the element of
/// `target` sitting at degree `v`, and the pointwise map sends the `i`-th
/// member chord onto the `(u * i)`-th image member.
pub fn transport_cover(
    cover: &OrbitCover,
    u: usize,
    v: usize,
    target: &Scale,
) -> Result<CoverTransport> {
    let n = cover.scale().len();
    if target.len() != n {
        return Err(Error::SizeMismatch {
            sigma: n,
            scale: target.len(),
        });
    }
    if gcd(u % n, n) != 1 {
        return Err(Error::NotAUnit {
            unit: u,
            modulus: n,
        });
    }
    let u = u % n;
    let v = v % n;
    let pairs: Vec<(usize, usize)> = (0..n)
        .map(|rel| {
            let x = cover
                .scale()
                .translate(rel, cover.root())
                .expect("valid root");
            (x, target.at_degree(u * rel + v))
        })
        .collect();
    let sigma_image = cover.sigma().u_transform(u).expect("u is a unit");
    let image = orbit_cover(target, &sigma_image, target.at_degree(v))?;
    Ok(CoverTransport {
        source: cover.clone(),
        image,
        unit: u,
        offset: v,
        pairs,
    })
}

impl CoverTransport {
    pub fn source(&self) -> &OrbitCover {
        &self.source
    }

    pub fn image(&self) -> &OrbitCover {
        &self.image
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// Target degree of the image root.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn apply(&self, x: usize) -> Result<usize> {
        self.pairs
            .iter()
            .find(|&&(src, _)| src == x)
            .map(|&(_, dst)| dst)
            .ok_or(Error::NotAnElement(x))
    }

    /// Image member index of source member `i`.
    pub fn index_image(&self, i: usize) -> usize {
        (self.unit * i) % self.source.scale().len()
    }

    /// Package the transport as a checkable cover morphism.
    pub fn as_morphism(&self) -> CoverMorphism {
        let n = self.source.scale().len();
        let root_degree = self
            .source
            .scale()
            .degree_of(self.source.root())
            .expect("valid root");
        // In raw degree coordinates the map is d -> u*d + w.
        let w = (self.offset + n - (self.unit * root_degree) % n) % n;
        let scale_map = ScaleHom::affine(self.source.scale(), self.image.scale(), self.unit, w)
            .expect("u * n = 0 mod n always holds for equal sizes");
        CoverMorphism {
            scale_map,
            index_map: (0..n).map(|i| self.index_image(i)).collect(),
        }
    }
}

/// A morphism of covers: an element-level scale homomorphism together with
/// an index map such that `f(U_i)` lands inside `V_{phi(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverMorphism {
    scale_map: ScaleHom,
    index_map: Vec<usize>,
}

impl CoverMorphism {
    pub fn new(scale_map: ScaleHom, index_map: Vec<usize>) -> Self {
        Self {
            scale_map,
            index_map,
        }
    }

    pub fn scale_map(&self) -> &ScaleHom {
        &self.scale_map
    }

    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }
}

/// Check `f(U_i) subset of V_{phi(i)}` for every source index.
pub fn verify_cover_morphism(m: &CoverMorphism, source: &OrbitCover, target: &OrbitCover) -> bool {
    if m.index_map.len() != source.members().len() {
        return false;
    }
    source
        .members()
        .iter()
        .zip(&m.index_map)
        .all(|(chord, &j)| {
            let Some(image_member) = target.members().get(j) else {
                return false;
            };
            chord.elements().iter().all(|&x| {
                m.scale_map
                    .apply(x)
                    .map(|y| image_member.contains(y))
                    .unwrap_or(false)
            })
        })
}
