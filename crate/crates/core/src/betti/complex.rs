use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::semigroup::{AffineSemigroup, Point};

/// A simplicial complex on vertices `0..vertices`, stored as its full face
/// list (including the empty face when nonempty).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    pub vertices: usize,
    /// Sorted by size, then lexicographically.
    pub faces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Downward closure of `facets`.
    pub fn from_facets(vertices: usize, facets: &[Vec<usize>]) -> Self {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            for mask in 0u64..(1 << f.len()) {
                let sub: Vec<usize> =
                    (0..f.len()).filter(|&k| mask >> k & 1 == 1).map(|k| f[k]).collect();
                faces.insert(sub);
            }
        }
        Self::from_faces(vertices, faces.into_iter().collect())
    }

    fn from_faces(vertices: usize, mut faces: Vec<Vec<usize>>) -> Self {
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplex { vertices, faces }
    }

    pub fn is_downward_closed(&self) -> bool {
        let set: BTreeSet<&Vec<usize>> = self.faces.iter().collect();
        self.faces.iter().all(|f| {
            (0..f.len()).all(|k| {
                let mut g = f.clone();
                g.remove(k);
                set.contains(&g)
            })
        })
    }

    /// Largest face size.
    pub fn top_size(&self) -> Option<usize> {
        self.faces.last().map(Vec::len)
    }
}

/// The squarefree divisor complex `Δ_b = {F : b - Σ_{j∈F} a_j ∈ S}`.
pub fn divisor_complex(s: &AffineSemigroup, b: &Point) -> Result<SimplicialComplex> {
    if !s.contains(b) {
        return Err(Error::NotInSemigroup(b.to_string()));
    }
    let n = s.len();
    let mut faces: Vec<(Vec<usize>, Point)> = vec![(vec![], b.clone())];
    let mut frontier = 0;
    while frontier < faces.len() {
        let (face, rest) = faces[frontier].clone();
        frontier += 1;
        let start = face.last().map_or(0, |&v| v + 1);
        for v in start..n {
            if let Some(r) = rest.checked_sub(s.generator(v)) {
                if s.contains(&r) {
                    let mut f = face.clone();
                    f.push(v);
                    faces.push((f, r));
                }
            }
        }
    }
    let complex =
        SimplicialComplex::from_faces(n, faces.into_iter().map(|(f, _)| f).collect());
    if !complex.is_downward_closed() {
        return Err(Error::InvariantViolation(format!("divisor complex of {b} is not a complex")));
    }
    Ok(complex)
}

/// Ranks of `H̃_{-1}, H̃_0, ..., H̃_top` over the rationals, computed from
/// the augmented chain complex.
pub fn reduced_homology_ranks(k: &SimplicialComplex) -> Vec<usize> {
    let Some(top) = k.top_size() else { return vec![] };
    // by_size[s]: faces with s vertices, i.e. of dimension s - 1
    let mut by_size: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top + 1];
    for f in &k.faces {
        by_size[f.len()].push(f);
    }
    // boundary_rank[s]: rank of the map from size-s faces to size-(s-1) faces
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        let lower: std::collections::HashMap<&Vec<usize>, usize> =
            by_size[s - 1].iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let rows: Vec<Vec<i64>> = by_size[s]
            .iter()
            .map(|f| {
                let mut row = vec![0i64; by_size[s - 1].len()];
                for drop in 0..f.len() {
                    let mut g = (*f).clone();
                    g.remove(drop);
                    row[lower[&g]] = if drop % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        boundary_rank[s] = rank(&rows);
    }
    (0..=top)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}
