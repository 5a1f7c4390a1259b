//! Interval compositions of `n` into `k` positive parts, their rotation
//! classes, and the unit-group action on them.
//!
//! A composition records the successive step intervals of a chord within an
//! `n`-note scale. Rotation classes correspond to orbit covers up to scalar
//! translation; the action of `Z_n^x` by the u-transform groups rotation
//! classes into affine orbits, which classify covers up to nerve isomorphism.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scale::gcd;

/// An ordered tuple of positive step intervals summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IntervalComposition {
    parts: Vec<usize>,
}

impl IntervalComposition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(Error::BadCompositionShape { n: 0, k: 0 });
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The sum `n` of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The number of parts `k`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Partial sums `S_0 = 0, S_1, ..., S_k = n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut sums = Vec::with_capacity(self.len() + 1);
        let mut acc = 0;
        sums.push(0);
        for &p in &self.parts {
            acc += p;
            sums.push(acc);
        }
        sums
    }

    /// Cyclic left rotation by `i` positions; `i` is taken mod `k`.
    pub fn rotated(&self, i: usize) -> Self {
        let k = self.len();
        let i = i % k;
        let mut parts = Vec::with_capacity(k);
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&self.parts[..i]);
        Self { parts }
    }

    /// All distinct rotations, sorted lexicographically.
    pub fn rotations(&self) -> Vec<Self> {
        let mut all: Vec<Self> = (0..self.len()).map(|i| self.rotated(i)).collect();
        all.sort();
        all.dedup();
        all
    }

    /// Lexicographically least rotation.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.len())
            .map(|i| self.rotated(i))
            .min()
            .expect("compositions are nonempty")
    }

    /// The u-transform: scale the partial sums by the unit `u` mod `n`,
    /// re-sort, and take successive differences.
    pub fn u_transform(&self, u: usize) -> Result<Self> {
        let n = self.total();
        if gcd(u % n, n) != 1 {
            return Err(Error::NotAUnit {
                unit: u,
                modulus: n,
            });
        }
        let mut scaled: Vec<usize> = self
            .partial_sums()
            .iter()
            .map(|&s| if s == n { n } else { (u * s) % n })
            .collect();
        scaled.sort_unstable();
        let parts = scaled.windows(2).map(|w| w[1] - w[0]).collect();
        Ok(Self { parts })
    }
}

impl fmt::Display for IntervalComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All compositions of `n` into `k` positive parts, in lexicographic order.
pub fn enumerate_compositions(n: usize, k: usize) -> Result<Vec<IntervalComposition>> {
    if k == 0 || k > n {
        return Err(Error::BadCompositionShape { n, k });
    }
    let mut out = Vec::new();
    let mut parts = vec![0usize; k];
    fill(n, 0, &mut parts, &mut out);
    Ok(out)
}

fn fill(remaining: usize, idx: usize, parts: &mut Vec<usize>, out: &mut Vec<IntervalComposition>) {
    let k = parts.len();
    if idx == k - 1 {
        parts[idx] = remaining;
        out.push(IntervalComposition {
            parts: parts.clone(),
        });
        return;
    }
    // Leave at least one unit for each later part.
    for value in 1..=remaining - (k - idx - 1) {
        parts[idx] = value;
        fill(remaining - value, idx + 1, parts, out);
    }
}

/// An orbit of the rotation action on `Sigma(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationClass {
    representative: IntervalComposition,
    members: Vec<IntervalComposition>,
}

impl RotationClass {
    /// The class of `sigma`: all distinct rotations, named by the
    /// lexicographically least one.
    pub fn of(sigma: &IntervalComposition) -> Self {
        let members = sigma.rotations();
        Self {
            representative: members[0].clone(),
            members,
        }
    }

    pub fn representative(&self) -> &IntervalComposition {
        &self.representative
    }

    /// Members sorted lexicographically.
    pub fn members(&self) -> &[IntervalComposition] {
        &self.members
    }

    pub fn contains(&self, sigma: &IntervalComposition) -> bool {
        self.members.binary_search(sigma).is_ok()
    }
}

impl fmt::Display for RotationClass {
    // A class is named by its representative in brackets, e.g. "[(1,3,3)]".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// Partition of `Sigma(n, k)` into rotation classes, sorted by
/// representative.
pub fn rotation_classes(n: usize, k: usize) -> Result<Vec<RotationClass>> {
    let mut classes = Vec::new();
    let mut seen: HashMap<IntervalComposition, ()> = HashMap::new();
    for sigma in enumerate_compositions(n, k)? {
        if seen.contains_key(&sigma) {
            continue;
        }
        let class = RotationClass::of(&sigma);
        for member in class.members() {
            seen.insert(member.clone(), ());
        }
        // Lexicographic enumeration meets each class at its least member,
        // so classes arrive already sorted by representative.
        classes.push(class);
    }
    Ok(classes)
}

/// The unit group `Z_n^x` in ascending order. For `n <= 1` the group is
/// trivial and `1` stands in as its representative.
pub fn unit_group(n: usize) -> Vec<usize> {
    if n <= 1 {
        return vec![1];
    }
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

/// A unit mapping one rotation class onto another: applying `unit` to any
/// member of class `from` lands in class `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnitWitness {
    /// Index of the source class within the orbit's class list.
    pub from: usize,
    /// Index of the target class within the orbit's class list.
    pub to: usize,
    /// The smallest unit realizing the mapping.
    pub unit: usize,
}

/// An orbit of rotation classes under the induced `Z_n^x` action, with a
/// unit witness for every ordered pair of member classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineOrbit {
    classes: Vec<RotationClass>,
    witnesses: Vec<UnitWitness>,
}

impl AffineOrbit {
    pub fn classes(&self) -> &[RotationClass] {
        &self.classes
    }

    pub fn witnesses(&self) -> &[UnitWitness] {
        &self.witnesses
    }

    pub fn witness_between(&self, from: usize, to: usize) -> Option<usize> {
        self.witnesses
            .iter()
            .find(|w| w.from == from && w.to == to)
            .map(|w| w.unit)
    }
}

/// Partition of the rotation classes of `Sigma(n, k)` under the unit-group
/// action. Orbits are sorted by their least representative; each carries
/// witnesses for all ordered intra-orbit pairs.
pub fn affine_orbits(n: usize, k: usize) -> Result<Vec<AffineOrbit>> {
    let classes = rotation_classes(n, k)?;
    let index_of: HashMap<&IntervalComposition, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.representative(), i))
        .collect();
    let units = unit_group(n);

    // class index -> set of class indices reachable by one unit application
    let image = |from: usize, u: usize| -> usize {
        let transformed = classes[from]
            .representative()
            .u_transform(u)
            .expect("u ranges over units")
            .canonical_rotation();
        index_of[&transformed]
    };

    let mut orbit_of = vec![usize::MAX; classes.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..classes.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut frontier = vec![start];
        let mut members = Vec::new();
        orbit_of[start] = id;
        while let Some(c) = frontier.pop() {
            members.push(c);
            for &u in &units {
                let next = image(c, u);
                if orbit_of[next] == usize::MAX {
                    orbit_of[next] = id;
                    frontier.push(next);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }

    Ok(orbits
        .into_iter()
        .map(|members| {
            let mut witnesses = Vec::new();
            for (a, &ca) in members.iter().enumerate() {
                for (b, &cb) in members.iter().enumerate() {
                    let unit = units
                        .iter()
                        .copied()
                        .find(|&u| image(ca, u) == cb)
                        .expect("classes share an orbit");
                    witnesses.push(UnitWitness {
                        from: a,
                        to: b,
                        unit,
                    });
                }
            }
            AffineOrbit {
                classes: members.iter().map(|&c| classes[c].clone()).collect(),
                witnesses,
            }
        })
        .collect())
}
