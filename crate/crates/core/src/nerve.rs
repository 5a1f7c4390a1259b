//! Nerve complexes of covers, harmonic regions, and simplicial isomorphism.
//!
//! The nerve of a cover has one vertex per distinct member and a simplex for
//! every subfamily with nonempty common intersection. Every simplex is a
//! face of some element's membership set, so the nerve is assembled by
//! expanding those sets rather than intersecting all subfamilies.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cover::OrbitCover;
use crate::error::{Error, Result};

/// A finite abstract simplicial complex with labelled vertices. Simplices
/// are stored as sorted vertex-index tuples, grouped by dimension and sorted
/// lexicographically within each group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_labels: Vec<String>,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Downward closure of the given simplices. Every vertex is a 0-simplex
    /// whether or not it appears in `maximal`.
    pub fn from_maximal(vertex_labels: Vec<String>, maximal: &[Vec<usize>]) -> Result<Self> {
        let v = vertex_labels.len();
        let mut closed: BTreeSet<Vec<usize>> = (0..v).map(|i| vec![i]).collect();
        for simplex in maximal {
            if simplex.is_empty() {
                return Err(Error::EmptySimplex);
            }
            let mut vertices = simplex.clone();
            vertices.sort_unstable();
            for pair in vertices.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::DuplicateElement(pair[0]));
                }
            }
            if let Some(&out) = vertices.iter().find(|&&x| x >= v) {
                return Err(Error::VertexOutOfRange {
                    vertex: out,
                    vertices: v,
                });
            }
            let m = vertices.len();
            for mask in 1u64..(1 << m) {
                let face: Vec<usize> = (0..m)
                    .filter(|&j| mask & (1 << j) != 0)
                    .map(|j| vertices[j])
                    .collect();
                closed.insert(face);
            }
        }
        let dim = closed.iter().map(|s| s.len() - 1).max().unwrap_or(0);
        let mut simplices = vec![Vec::new(); dim + 1];
        for s in closed {
            simplices[s.len() - 1].push(s);
        }
        Ok(Self {
            vertex_labels,
            simplices,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    /// Dimension: the largest `p` with a `p`-simplex.
    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// Per-dimension simplex counts.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(|s| s.len()).collect()
    }

    pub fn simplices_of_dim(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        if simplex.is_empty() {
            return false;
        }
        self.simplices_of_dim(simplex.len() - 1)
            .binary_search_by(|s| s.as_slice().cmp(simplex))
            .is_ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(p, &f)| if p % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SimplicialComplex", 2)?;
        s.serialize_field("vertices", &self.vertex_labels)?;
        s.serialize_field("simplices_by_dim", &self.simplices)?;
        s.end()
    }
}

/// The nerve of an arbitrary finite family of finite sets. `sets[i]` becomes
/// vertex `i`; duplicates are the caller's concern.
pub fn nerve_of_sets(labels: Vec<String>, sets: &[Vec<usize>]) -> SimplicialComplex {
    debug_assert_eq!(labels.len(), sets.len());
    let mut ground: Vec<usize> = sets.iter().flatten().copied().collect();
    ground.sort_unstable();
    ground.dedup();
    // Membership sets: every simplex of the nerve is a face of one of them.
    let membership: Vec<Vec<usize>> = ground
        .iter()
        .map(|&x| (0..sets.len()).filter(|&i| sets[i].contains(&x)).collect())
        .collect();
    SimplicialComplex::from_maximal(labels, &membership)
        .expect("membership sets are valid simplices")
}

/// The nerve of a cover's distinct members.
pub fn build_nerve(cover: &OrbitCover) -> SimplicialComplex {
    let labels = cover
        .distinct_members()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let sets: Vec<Vec<usize>> = cover
        .distinct_members()
        .iter()
        .map(|c| c.elements().to_vec())
        .collect();
    nerve_of_sets(labels, &sets)
}

/// The harmonic regions of a primitive cover: for each scale element `x`,
/// the top simplex `Delta_x` of all member indices whose chord contains `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarmonicRegions {
    /// `(x, Delta_x)` pairs in ascending element order.
    regions: Vec<(usize, Vec<usize>)>,
}

pub fn harmonic_regions(cover: &OrbitCover) -> Result<HarmonicRegions> {
    if !cover.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let regions = cover
        .scale()
        .base()
        .elements()
        .iter()
        .map(|&x| {
            let delta: Vec<usize> = (0..cover.members().len())
                .filter(|&i| cover.members()[i].contains(x))
                .collect();
            (x, delta)
        })
        .collect();
    Ok(HarmonicRegions { regions })
}

impl HarmonicRegions {
    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(element, Delta_element)` pairs in ascending element order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.regions.iter().map(|(x, d)| (*x, d.as_slice()))
    }

    pub fn region_of(&self, x: usize) -> Result<&[usize]> {
        self.regions
            .iter()
            .find(|&&(e, _)| e == x)
            .map(|(_, d)| d.as_slice())
            .ok_or(Error::NotAnElement(x))
    }
}

/// A vertex bijection carrying the simplices of one complex exactly onto
/// those of another, found by backtracking with invariant pruning. The
/// returned witness is re-verified before being handed out.
pub fn nerve_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Vec<usize>> {
    let v = a.vertex_count();
    if v != b.vertex_count() || a.f_vector() != b.f_vector() {
        return None;
    }
    assert!(v <= 64, "isomorphism search is for desk-scale complexes");

    let masks = |c: &SimplicialComplex| -> Vec<u64> {
        (0..=c.dim())
            .flat_map(|p| c.simplices_of_dim(p))
            .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x))
            .collect()
    };
    let a_masks = masks(a);
    let b_masks = masks(b);
    let b_set: HashSet<u64> = b_masks.iter().copied().collect();

    // Per-vertex pruning invariant: how many simplices of each dimension
    // contain the vertex.
    let profile = |c: &SimplicialComplex, x: usize| -> Vec<usize> {
        (0..=c.dim())
            .map(|p| {
                c.simplices_of_dim(p)
                    .iter()
                    .filter(|s| s.binary_search(&x).is_ok())
                    .count()
            })
            .collect()
    };
    let a_profiles: Vec<Vec<usize>> = (0..v).map(|x| profile(a, x)).collect();
    let b_profiles: Vec<Vec<usize>> = (0..v).map(|x| profile(b, x)).collect();

    let mut map = vec![usize::MAX; v];
    let mut used = vec![false; v];
    if !extend(
        0,
        &mut map,
        &mut used,
        &a_masks,
        &b_set,
        &a_profiles,
        &b_profiles,
    ) {
        return None;
    }

    // Re-verify: the mapped simplex set must equal the target set exactly.
    let mapped: HashSet<u64> = a_masks
        .iter()
        .map(|&s| {
            (0..v)
                .filter(|&x| s & (1 << x) != 0)
                .fold(0u64, |m, x| m | 1 << map[x])
        })
        .collect();
    assert_eq!(mapped, b_set, "witness failed re-verification");
    Some(map)
}

fn extend(
    next: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    a_masks: &[u64],
    b_set: &HashSet<u64>,
    a_profiles: &[Vec<usize>],
    b_profiles: &[Vec<usize>],
) -> bool {
    let v = map.len();
    if next == v {
        return true;
    }
    let assigned: u64 = (0..next).fold(0, |m, x| m | 1 << x);
    for candidate in 0..v {
        if used[candidate] || a_profiles[next] != b_profiles[candidate] {
            continue;
        }
        map[next] = candidate;
        used[candidate] = true;
        // Every simplex now fully assigned (and touching `next`) must land
        // on a simplex of the target.
        let ok = a_masks.iter().all(|&s| {
            if s & (1 << next) == 0 || s & !(assigned | 1 << next) != 0 {
                return true;
            }
            let image = (0..=next)
                .filter(|&x| s & (1 << x) != 0)
                .fold(0u64, |m, x| m | 1 << map[x]);
            b_set.contains(&image)
        });
        if ok && extend(next + 1, map, used, a_masks, b_set, a_profiles, b_profiles) {
            return true;
        }
        used[candidate] = false;
        map[next] = usize::MAX;
    }
    false
}

/// Human-readable one-line form of a simplex, e.g. "{0,2,4}".
pub fn simplex_label(simplex: &[usize]) -> String {
    let mut out = String::from("{");
    for (i, x) in simplex.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{x}");
    }
    out.push('}');
    out
}
