use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::{affine_dimension_of, Caps, Facet, Point};
use crate::error::{Error, Result};
use crate::toric::GradedPoset;

/// A set of vertex indices below 64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: Self = Self(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Self(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersect(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn to_indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Face counts by dimension, `f_0, …, f_d` (the last entry counts the
/// polytope itself).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn alternating_sum(&self) -> i128 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i128 } else { -(f as i128) })
            .sum()
    }

    /// Euler–Poincaré: over `f_0..f_{d-1}` the alternating sum is
    /// `1 - (-1)^d`, so including `f_d = 1` it is exactly 1.
    pub fn satisfies_euler(&self) -> bool {
        !self.0.is_empty() && self.alternating_sum() == 1
    }
}

/// Faces as vertex sets, sorted by rank and then by vertex list. Index 0 is
/// the empty face; the last index is the whole polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    n_vertices: usize,
    faces: Vec<VertexSet>,
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn face(&self, i: usize) -> VertexSet {
        self.faces[i]
    }

    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    /// Rank of the whole lattice, `dim P + 1`.
    pub fn lattice_rank(&self) -> usize {
        self.ranks[self.top()]
    }

    pub fn index_of(&self, face: VertexSet) -> Option<usize> {
        self.faces.iter().position(|&f| f == face)
    }

    pub fn faces_of_rank(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&i| self.ranks[i] == r)
    }

    /// Number of elements of each rank, bottom to top.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.lattice_rank() + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.level_sizes()[1..].iter().map(|&c| c as u64).collect())
    }

    pub fn to_poset(&self) -> GradedPoset {
        GradedPoset::new(self.ranks.clone(), self.covers.clone())
            .expect("face lattices are bounded graded posets")
    }
}

/// Closes the facet vertex sets under intersection, adds the empty face and
/// the polytope, ranks faces by affine dimension + 1 and links covers.
pub fn build_face_lattice(points: &[Point], facets: &[Facet], caps: &Caps) -> Result<FaceLattice> {
    let n = points.len();
    if n == 0 || n > super::MAX_VERTICES_HARD {
        return Err(Error::Degenerate(format!(
            "face lattice needs 1..=64 vertices, got {n}"
        )));
    }
    let full = VertexSet::full(n);
    let facet_sets: Vec<VertexSet> = facets.iter().map(Facet::mask).collect();

    let mut seen: HashSet<VertexSet> = HashSet::from([full, VertexSet::EMPTY]);
    let mut stack = vec![full];
    while let Some(face) = stack.pop() {
        for &f in &facet_sets {
            let meet = face.intersect(f);
            if seen.insert(meet) {
                if seen.len() > caps.max_faces {
                    return Err(Error::CapExceeded {
                        what: "face count",
                        actual: seen.len(),
                        cap: caps.max_faces,
                    });
                }
                stack.push(meet);
            }
        }
    }

    let mut ranked: Vec<(usize, Vec<usize>, VertexSet)> = seen
        .into_iter()
        .map(|f| {
            let r = if f.is_empty() {
                0
            } else {
                affine_dimension_of(points, f) + 1
            };
            (r, f.to_indices(), f)
        })
        .collect();
    ranked.sort();
    let faces: Vec<VertexSet> = ranked.iter().map(|(_, _, f)| *f).collect();
    let ranks: Vec<usize> = ranked.iter().map(|(r, _, _)| *r).collect();

    let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); ranks.last().copied().unwrap_or(0) + 1];
    for (i, &r) in ranks.iter().enumerate() {
        by_rank[r].push(i);
    }
    let mut covers = BTreeSet::new();
    for r in 1..by_rank.len() {
        for &hi in &by_rank[r] {
            for &lo in &by_rank[r - 1] {
                if faces[lo].is_subset(faces[hi]) {
                    covers.insert((lo, hi));
                }
            }
        }
    }

    Ok(FaceLattice {
        n_vertices: n,
        faces,
        ranks,
        covers: covers.into_iter().collect(),
    })
}
