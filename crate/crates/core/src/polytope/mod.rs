//! Matroid polytopes over exact rationals: vertices, facets and face lattices.
//!
//! Facets are found by an exhaustive supporting-hyperplane search in the
//! affine hull of the vertex set. Every affinely independent `d`-subset of
//! vertices spans a candidate hyperplane; it is kept when all vertices lie on
//! one side. Candidates are deduplicated by their tight vertex sets, which
//! identify facets uniquely.

mod lattice;
pub mod linalg;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lpm::LatticePathMatroid;
pub use lattice::{build_face_lattice, FVector, FaceLattice, VertexSet};
use linalg::{dot, fmt_rational, nullspace, primitive, q, rank, row_reduce, squared_distance, Q};

/// Largest vertex count representable by a [`VertexSet`].
pub const MAX_VERTICES_HARD: usize = 64;

/// Size limits for the geometric pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_dimension: usize,
    pub max_vertices: usize,
    pub max_faces: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_dimension: 10,
            max_vertices: 40,
            max_faces: 5000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub Vec<Q>);

impl Point {
    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| q(c)).collect())
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(|c| json!(fmt_rational(c))).collect())
    }
}

/// `normal · x <= offset`, with `normal` a primitive integer vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub normal: Vec<Q>,
    pub offset: Q,
}

impl Hyperplane {
    pub fn value(&self, p: &Point) -> Q {
        dot(&self.normal, p.coords())
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.value(p) == self.offset
    }

    pub fn satisfied_by(&self, p: &Point) -> bool {
        self.value(p) <= self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub hyperplane: Hyperplane,
    /// Indices of the vertices on the hyperplane, ascending.
    pub tight: Vec<usize>,
}

impl Facet {
    pub fn mask(&self) -> VertexSet {
        VertexSet::from_indices(&self.tight)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "normal": self.hyperplane.normal.iter().map(fmt_rational).collect::<Vec<_>>(),
            "offset": fmt_rational(&self.hyperplane.offset),
            "tight": self.tight,
        })
    }
}

/// One 0/1 incidence vector per basis, in basis order.
pub fn incidence_vertices(matroid: &LatticePathMatroid) -> Vec<Point> {
    matroid
        .bases
        .iter()
        .map(|b| {
            Point(
                (1..=matroid.ground_size)
                    .map(|i| q(i64::from(b.contains(i))))
                    .collect(),
            )
        })
        .collect()
}

fn differences<'a>(points: impl IntoIterator<Item = &'a Point>) -> Vec<Vec<Q>> {
    let mut iter = points.into_iter();
    let Some(base) = iter.next() else {
        return Vec::new();
    };
    iter.map(|p| p.0.iter().zip(&base.0).map(|(a, b)| a - b).collect())
        .collect()
}

/// Dimension of the affine hull. The empty set is reported as dimension 0
/// as well; callers treat it separately.
pub fn affine_dimension(points: &[Point]) -> usize {
    let ncols = points.first().map_or(0, Point::dim);
    rank(&differences(points), ncols)
}

pub(crate) fn affine_dimension_of(points: &[Point], subset: VertexSet) -> usize {
    let ncols = points.first().map_or(0, Point::dim);
    rank(&differences(subset.iter().map(|i| &points[i])), ncols)
}

/// Coordinates chosen so that projecting onto them is injective on the
/// affine hull of `points`.
fn hull_coordinates(points: &[Point]) -> Vec<usize> {
    let ncols = points.first().map_or(0, Point::dim);
    let mut diffs = differences(points);
    row_reduce(&mut diffs, ncols)
}

fn check_caps(points: &[Point], caps: &Caps) -> Result<usize> {
    let cap = caps.max_vertices.min(MAX_VERTICES_HARD);
    if points.len() > cap {
        return Err(Error::CapExceeded {
            what: "vertex count",
            actual: points.len(),
            cap,
        });
    }
    let d = affine_dimension(points);
    if d > caps.max_dimension {
        return Err(Error::CapExceeded {
            what: "dimension",
            actual: d,
            cap: caps.max_dimension,
        });
    }
    Ok(d)
}

/// All facets of `conv(points)` inside its affine hull, sorted by tight set.
///
/// A zero-dimensional input has no facets. Points must be distinct.
pub fn enumerate_facets(points: &[Point], caps: &Caps) -> Result<Vec<Facet>> {
    if points.is_empty() {
        return Err(Error::Degenerate("no points".into()));
    }
    let d = check_caps(points, caps)?;
    if d == 0 {
        if points.len() > 1 {
            return Err(Error::Degenerate("duplicate points".into()));
        }
        return Ok(Vec::new());
    }
    let coords = hull_coordinates(points);
    let projected: Vec<Vec<Q>> = points
        .iter()
        .map(|p| coords.iter().map(|&c| p.0[c].clone()).collect())
        .collect();

    let subsets: Vec<Vec<usize>> = (0..points.len()).combinations(d).collect();
    let candidates: Vec<(VertexSet, Vec<Q>, Q)> = subsets
        .par_iter()
        .filter_map(|subset| supporting_hyperplane(&projected, subset, d))
        .collect();

    let mut by_tight: BTreeMap<Vec<usize>, (Vec<Q>, Q)> = BTreeMap::new();
    for (tight, normal, offset) in candidates {
        by_tight
            .entry(tight.to_indices())
            .or_insert((normal, offset));
    }

    let ambient = points[0].dim();
    Ok(by_tight
        .into_iter()
        .map(|(tight, (normal, offset))| {
            let mut lifted = vec![Q::zero(); ambient];
            for (&c, v) in coords.iter().zip(normal) {
                lifted[c] = v;
            }
            Facet {
                hyperplane: Hyperplane {
                    normal: lifted,
                    offset,
                },
                tight,
            }
        })
        .collect())
}

/// Hyperplane through the projected points `subset`, oriented so that all
/// points satisfy `normal · x <= offset`; `None` if the subset is affinely
/// dependent or the hyperplane separates the point set.
fn supporting_hyperplane(
    projected: &[Vec<Q>],
    subset: &[usize],
    d: usize,
) -> Option<(VertexSet, Vec<Q>, Q)> {
    let base = &projected[subset[0]];
    let rows: Vec<Vec<Q>> = subset[1..]
        .iter()
        .map(|&i| projected[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let kernel = nullspace(&rows, d);
    if kernel.len() != 1 {
        return None;
    }
    let mut normal: Vec<Q> = primitive(&kernel[0])
        .into_iter()
        .map(Q::from_integer)
        .collect();
    let mut offset = dot(&normal, base);
    let mut above = false;
    let mut below = false;
    let mut tight = VertexSet::EMPTY;
    for (i, p) in projected.iter().enumerate() {
        let v = dot(&normal, p);
        match v.cmp(&offset) {
            Ordering::Greater => above = true,
            Ordering::Less => below = true,
            Ordering::Equal => tight.insert(i),
        }
        if above && below {
            return None;
        }
    }
    if above {
        normal.iter_mut().for_each(|v| *v = -v.clone());
        offset = -offset;
    }
    Some((tight, normal, offset))
}

/// Squared edge lengths, 1-skeleton diameter and the largest squared distance
/// between any two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMetrics {
    pub squared_lengths: BTreeSet<Q>,
    /// `None` when the 1-skeleton is disconnected (never for a polytope).
    pub graph_diameter: Option<usize>,
    pub max_squared_distance: Q,
}

impl EdgeMetrics {
    pub fn to_json(&self) -> Value {
        json!({
            "squared_edge_lengths": self.squared_lengths.iter().map(fmt_rational).collect::<Vec<_>>(),
            "graph_diameter": self.graph_diameter,
            "max_squared_distance": fmt_rational(&self.max_squared_distance),
        })
    }
}

pub fn edge_metrics(points: &[Point], lattice: &FaceLattice) -> EdgeMetrics {
    let n = points.len();
    let mut adjacency = vec![Vec::new(); n];
    let mut squared_lengths = BTreeSet::new();
    for edge in lattice.faces_of_rank(2) {
        let ends = lattice.face(edge).to_indices();
        let (a, b) = (ends[0], ends[1]);
        adjacency[a].push(b);
        adjacency[b].push(a);
        squared_lengths.insert(squared_distance(points[a].coords(), points[b].coords()));
    }

    let mut graph_diameter = Some(0);
    for start in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        let far = dist.iter().copied().max().unwrap_or(0);
        graph_diameter = match (graph_diameter, far) {
            (_, usize::MAX) | (None, _) => None,
            (Some(best), far) => Some(best.max(far)),
        };
    }

    let max_squared_distance = (0..n)
        .tuple_combinations()
        .map(|(a, b)| squared_distance(points[a].coords(), points[b].coords()))
        .max()
        .unwrap_or_else(Q::zero);

    EdgeMetrics {
        squared_lengths,
        graph_diameter,
        max_squared_distance,
    }
}

/// Polytope JSON: vertices, facets and f-vector.
pub fn polytope_json(points: &[Point], facets: &[Facet], fvec: &FVector) -> Value {
    json!({
        "vertices": points.iter().map(Point::to_json).collect::<Vec<_>>(),
        "facets": facets.iter().map(Facet::to_json).collect::<Vec<_>>(),
        "f_vector": fvec.0,
    })
}

/// Squared lengths as plain integers when they are integral.
pub fn integral_values(values: &BTreeSet<Q>) -> Option<Vec<BigInt>> {
    values
        .iter()
        .map(|v| v.is_integer().then(|| v.to_integer()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpm::{enumerate_bases, HookShape, PathPair};

    fn p22() -> Vec<Point> {
        let pair = PathPair::parse("NENE", "EENN").unwrap();
        incidence_vertices(&enumerate_bases(&pair, 100).unwrap())
    }

    fn hook_points(alpha: usize, beta: usize) -> Vec<Point> {
        let pair = HookShape::new(alpha, beta).unwrap().path_pair();
        incidence_vertices(&enumerate_bases(&pair, 1000).unwrap())
    }

    #[test]
    fn p22_incidence_vectors() {
        let mut pts = p22();
        pts.sort();
        let expected: Vec<Point> = [
            [0, 0, 1, 1],
            [0, 1, 0, 1],
            [0, 1, 1, 0],
            [1, 0, 0, 1],
            [1, 0, 1, 0],
        ]
        .iter()
        .map(|c| Point::from_ints(c))
        .collect();
        assert_eq!(pts, expected);
    }

    #[test]
    fn incidence_vectors_sum_to_rank() {
        let pts = hook_points(3, 2);
        assert_eq!(pts.len(), 7);
        for p in &pts {
            assert_eq!(p.coords().iter().sum::<Q>(), q(2));
        }
    }

    #[test]
    fn affine_dimensions() {
        assert_eq!(affine_dimension(&p22()), 3);
        assert_eq!(affine_dimension(&[Point::from_ints(&[1, 0])]), 0);
        for (a, b) in [(1, 1), (2, 1), (3, 2), (4, 3)] {
            assert_eq!(affine_dimension(&hook_points(a, b)), a + b - 1);
        }
    }

    #[test]
    fn p22_facets() {
        let pts = p22();
        let facets = enumerate_facets(&pts, &Caps::default()).unwrap();
        assert_eq!(facets.len(), 5);
        let mut sizes: Vec<usize> = facets.iter().map(|f| f.tight.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 3, 3, 4]);
        for f in &facets {
            assert!(pts.iter().all(|p| f.hyperplane.satisfied_by(p)));
            assert!(f.tight.iter().all(|&i| f.hyperplane.contains(&pts[i])));
            let tight: Vec<Point> = f.tight.iter().map(|&i| pts[i].clone()).collect();
            assert_eq!(affine_dimension(&tight), 2);
        }
    }

    #[test]
    fn triangle_and_hook_facets() {
        let tri = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[0, 1]),
        ];
        assert_eq!(enumerate_facets(&tri, &Caps::default()).unwrap().len(), 3);
        assert_eq!(
            enumerate_facets(&hook_points(3, 2), &Caps::default())
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps {
            max_dimension: 2,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_facets(&p22(), &caps),
            Err(Error::CapExceeded {
                what: "dimension",
                ..
            })
        ));
        let caps = Caps {
            max_vertices: 4,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_facets(&p22(), &caps),
            Err(Error::CapExceeded {
                what: "vertex count",
                ..
            })
        ));
    }

    #[test]
    fn p22_edge_metrics() {
        let pts = p22();
        let facets = enumerate_facets(&pts, &Caps::default()).unwrap();
        let lattice = build_face_lattice(&pts, &facets, &Caps::default()).unwrap();
        let m = edge_metrics(&pts, &lattice);
        assert_eq!(m.squared_lengths, BTreeSet::from([q(2)]));
        assert_eq!(m.graph_diameter, Some(2));
        assert_eq!(m.max_squared_distance, q(4));
    }

    #[test]
    fn segment_edge_metrics() {
        let pts = vec![Point::from_ints(&[0]), Point::from_ints(&[1])];
        let facets = enumerate_facets(&pts, &Caps::default()).unwrap();
        assert_eq!(facets.len(), 2);
        let lattice = build_face_lattice(&pts, &facets, &Caps::default()).unwrap();
        let m = edge_metrics(&pts, &lattice);
        assert_eq!(m.squared_lengths, BTreeSet::from([q(1)]));
        assert_eq!(m.graph_diameter, Some(1));
    }

    #[test]
    fn hook_43_edges_all_root_two() {
        let pts = hook_points(4, 3);
        let facets = enumerate_facets(&pts, &Caps::default()).unwrap();
        let lattice = build_face_lattice(&pts, &facets, &Caps::default()).unwrap();
        let m = edge_metrics(&pts, &lattice);
        assert_eq!(m.squared_lengths, BTreeSet::from([q(2)]));
        assert_eq!(m.max_squared_distance, q(4));
        assert_eq!(m.graph_diameter, Some(2));
    }

    #[test]
    fn facet_json_uses_rational_strings() {
        let pts = vec![Point::from_ints(&[0]), Point::from_ints(&[1])];
        let facets = enumerate_facets(&pts, &Caps::default()).unwrap();
        assert_eq!(
            facets[0].to_json(),
            json!({"normal": ["-1/1"], "offset": "0/1", "tight": [0]})
        );
    }
}
