//! Integer simplicial homology of small complexes.
//!
//! Boundary matrices are reduced to invariant factors (Smith form) with
//! exact i128 arithmetic; Betti numbers come from the ranks and torsion from
//! the factors exceeding one. The matrices here are tiny, so the emphasis is
//! on transparency and cross-checks, not asymptotics: `b_0` is recomputed by
//! union-find and the Euler characteristic is verified against the f-vector
//! on every call.

use serde::Serialize;

use crate::nerve::SimplicialComplex;

/// Betti numbers, torsion coefficients, and the Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    /// `betti[p]` is the rank of `H_p`.
    betti: Vec<usize>,
    /// `torsion[p]` lists the invariant factors `> 1` of `H_p`.
    torsion: Vec<Vec<u64>>,
    /// Alternating sum of the f-vector, equal to that of the Betti numbers.
    euler: i64,
}

impl HomologyProfile {
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn torsion(&self) -> &[Vec<u64>] {
        &self.torsion
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }
}

/// Integer homology in every dimension of the complex.
pub fn homology(complex: &SimplicialComplex) -> HomologyProfile {
    let dim = complex.dim();
    let f: Vec<usize> = complex.f_vector();

    // ranks[p] = rank of the boundary map from p-chains to (p-1)-chains;
    // factors[p] = its invariant factors. Index 0 is the zero map.
    let mut ranks = vec![0usize; dim + 2];
    let mut factors: Vec<Vec<i128>> = vec![Vec::new(); dim + 2];
    for p in 1..=dim {
        let matrix = boundary_matrix(complex, p);
        let invariants = smith_invariants(matrix);
        ranks[p] = invariants.len();
        factors[p] = invariants;
    }

    let betti: Vec<usize> = (0..=dim).map(|p| f[p] - ranks[p] - ranks[p + 1]).collect();
    let torsion: Vec<Vec<u64>> = (0..=dim)
        .map(|p| {
            factors[p + 1]
                .iter()
                .filter(|&&d| d > 1)
                .map(|&d| u64::try_from(d).expect("factors of small matrices fit in u64"))
                .collect()
        })
        .collect();

    let euler = complex.euler_characteristic();
    let betti_euler: i64 = betti
        .iter()
        .enumerate()
        .map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    assert_eq!(
        euler, betti_euler,
        "Euler characteristic cross-check failed"
    );
    assert_eq!(
        betti[0],
        component_count(complex),
        "union-find component count disagrees with rank computation"
    );

    HomologyProfile {
        betti,
        torsion,
        euler,
    }
}

/// The boundary map from `p`-chains to `(p-1)`-chains, with simplices
/// oriented by ascending vertex order: row per `(p-1)`-simplex, column per
/// `p`-simplex, sign `(-1)^j` on the face omitting the `j`-th vertex.
fn boundary_matrix(complex: &SimplicialComplex, p: usize) -> Vec<Vec<i128>> {
    let rows = complex.simplices_of_dim(p - 1);
    let cols = complex.simplices_of_dim(p);
    let mut matrix = vec![vec![0i128; cols.len()]; rows.len()];
    for (c, simplex) in cols.iter().enumerate() {
        for j in 0..simplex.len() {
            let mut face = simplex.clone();
            face.remove(j);
            let r = rows
                .binary_search_by(|s| s.as_slice().cmp(face.as_slice()))
                .expect("complexes are downward closed");
            matrix[r][c] = if j % 2 == 0 { 1 } else { -1 };
        }
    }
    matrix
}

/// Connected components of the 1-skeleton.
fn component_count(complex: &SimplicialComplex) -> usize {
    let v = complex.vertex_count();
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for edge in complex.simplices_of_dim(1) {
        let (a, b) = (find(&mut parent, edge[0]), find(&mut parent, edge[1]));
        parent[a] = b;
    }
    (0..v).filter(|&x| find(&mut parent, x) == x).count()
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix, all
/// positive; their count is the rank. Classic Smith reduction with a
/// smallest-pivot strategy to keep intermediate entries small, and checked
/// arithmetic so any overflow fails loudly instead of corrupting results.
// Row operations read one row while writing another; index loops keep the
// arithmetic readable where iterators would force split borrows.
#[allow(clippy::needless_range_loop)]
fn smith_invariants(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diagonal: Vec<i128> = Vec::new();
    let mut t = 0;

    while t < rows.min(cols) {
        // Smallest-magnitude nonzero entry in the remaining submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if m[r][c] != 0 && pivot.is_none_or(|(pr, pc)| m[r][c].abs() < m[pr][pc].abs()) {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap(t, pr);
        for row in &mut m {
            row.swap(t, pc);
        }

        // Clear the pivot row and column; restart whenever a remainder
        // survives, since it is smaller than the pivot.
        let mut clean = true;
        for r in t + 1..rows {
            let q = m[r][t] / m[t][t];
            if q != 0 {
                for c in t..cols {
                    let sub = q.checked_mul(m[t][c]).expect("no overflow");
                    m[r][c] = m[r][c].checked_sub(sub).expect("no overflow");
                }
            }
            if m[r][t] != 0 {
                clean = false;
            }
        }
        for c in t + 1..cols {
            let q = m[t][c] / m[t][t];
            if q != 0 {
                for r in t..rows {
                    let sub = q.checked_mul(m[r][t]).expect("no overflow");
                    m[r][c] = m[r][c].checked_sub(sub).expect("no overflow");
                }
            }
            if m[t][c] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }

        // The pivot must divide every entry of the remaining submatrix; if
        // not, fold the offending row into this one and redo the step.
        let mut offender = None;
        'scan: for r in t + 1..rows {
            for c in t + 1..cols {
                if m[r][c] % m[t][t] != 0 {
                    offender = Some(r);
                    break 'scan;
                }
            }
        }
        if let Some(r) = offender {
            for c in t..cols {
                m[t][c] = m[t][c].checked_add(m[r][c]).expect("no overflow");
            }
            continue;
        }

        diagonal.push(m[t][t].abs());
        t += 1;
    }

    diagonal
}
