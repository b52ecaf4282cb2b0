//! Lattice paths, bounding path pairs and the lattice path matroids they induce.
//!
//! A path is a word in the alphabet `{N, E}`. A basis is the set of positions
//! (1-based) carrying an `N` step. A pair of noncrossing paths with a common
//! endpoint bounds a region; every monotone path inside that region yields a
//! basis of the lattice path matroid.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    /// Parses a word over `{N, E}`; anything else is rejected with its index.
    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(index, c)| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                found => Err(Error::InvalidStep { index, found }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { steps })
    }

    /// Builds a path from its prefix height profile `h(0) = 0, h(1), ..., h(len)`.
    pub fn from_heights(heights: &[usize]) -> Result<Self> {
        if heights.first().is_some_and(|&h| h != 0) {
            return Err(Error::Degenerate("height profile must start at 0".into()));
        }
        let steps = heights
            .windows(2)
            .map(|w| match w[1].checked_sub(w[0]) {
                Some(0) => Ok(Step::E),
                Some(1) => Ok(Step::N),
                _ => Err(Error::Degenerate(format!(
                    "height profile jumps from {} to {}",
                    w[0], w[1]
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `(s, t)` = (number of E steps, number of N steps).
    pub fn endpoint(&self) -> (usize, usize) {
        let t = self.steps.iter().filter(|&&s| s == Step::N).count();
        (self.steps.len() - t, t)
    }

    /// Prefix N-counts, `len + 1` entries starting with 0.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        let mut acc = 0;
        for &s in &self.steps {
            if s == Step::N {
                acc += 1;
            }
            h.push(acc);
        }
        h
    }

    pub fn to_basis(&self) -> Basis {
        Basis(
            self.steps
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == Step::N)
                .map(|(i, _)| i + 1)
                .collect(),
        )
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A noncrossing pair of paths with a common endpoint; `upper` never dips
/// below `lower`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathPair {
    upper: LatticePath,
    lower: LatticePath,
}

impl PathPair {
    pub fn new(upper: LatticePath, lower: LatticePath) -> Result<Self> {
        let (ue, le) = (upper.endpoint(), lower.endpoint());
        if ue != le {
            return Err(Error::EndpointMismatch {
                upper: ue,
                lower: le,
            });
        }
        let (hu, hl) = (upper.heights(), lower.heights());
        if let Some(prefix) = (0..hu.len()).find(|&i| hu[i] < hl[i]) {
            return Err(Error::Crossing { prefix });
        }
        Ok(Self { upper, lower })
    }

    pub fn parse(upper: &str, lower: &str) -> Result<Self> {
        Self::new(LatticePath::parse(upper)?, LatticePath::parse(lower)?)
    }

    /// Pointwise max / min of two paths sharing an endpoint.
    pub fn envelope(a: &LatticePath, b: &LatticePath) -> Result<Self> {
        if a.endpoint() != b.endpoint() {
            return Err(Error::EndpointMismatch {
                upper: a.endpoint(),
                lower: b.endpoint(),
            });
        }
        let (ha, hb) = (a.heights(), b.heights());
        let hi: Vec<usize> = ha.iter().zip(&hb).map(|(x, y)| *x.max(y)).collect();
        let lo: Vec<usize> = ha.iter().zip(&hb).map(|(x, y)| *x.min(y)).collect();
        Self::new(
            LatticePath::from_heights(&hi)?,
            LatticePath::from_heights(&lo)?,
        )
    }

    /// Region of a border strip: `a` boxes right, `b - 1` up, then `c - 1`
    /// right. Spine `E^(a-1) N^(b-1) E^(c-1)`, upper `N·spine·E`, lower
    /// `E·spine·N`. With `c = 1` this is the hook `(a, b)`.
    pub fn border_strip(a: usize, b: usize, c: usize) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::Degenerate(format!(
                "border strip needs a, b, c >= 1, got ({a}, {b}, {c})"
            )));
        }
        let spine: Vec<Step> = std::iter::repeat_n(Step::E, a - 1)
            .chain(std::iter::repeat_n(Step::N, b - 1))
            .chain(std::iter::repeat_n(Step::E, c - 1))
            .collect();
        let wrap = |first: Step, last: Step| {
            let mut steps = Vec::with_capacity(spine.len() + 2);
            steps.push(first);
            steps.extend_from_slice(&spine);
            steps.push(last);
            LatticePath::new(steps)
        };
        Self::new(wrap(Step::N, Step::E), wrap(Step::E, Step::N))
    }

    pub fn upper(&self) -> &LatticePath {
        &self.upper
    }

    pub fn lower(&self) -> &LatticePath {
        &self.lower
    }

    pub fn endpoint(&self) -> (usize, usize) {
        self.upper.endpoint()
    }

    pub fn ground_size(&self) -> usize {
        self.upper.len()
    }

    pub fn rank(&self) -> usize {
        self.endpoint().1
    }

    /// Whether `path` stays weakly between the bounds at every prefix.
    pub fn contains(&self, path: &LatticePath) -> bool {
        if path.len() != self.ground_size() || path.endpoint() != self.endpoint() {
            return false;
        }
        let (hu, hl, hp) = (self.upper.heights(), self.lower.heights(), path.heights());
        hp.iter()
            .zip(hu.iter().zip(&hl))
            .all(|(p, (u, l))| l <= p && p <= u)
    }
}

/// Hook region: a row of `alpha` boxes and a column of `beta` boxes sharing
/// the corner box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookShape {
    pub alpha: usize,
    pub beta: usize,
}

impl HookShape {
    pub fn new(alpha: usize, beta: usize) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::Degenerate(format!(
                "hook needs alpha, beta >= 1, got ({alpha}, {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn m(&self) -> usize {
        self.alpha - 1
    }

    pub fn n(&self) -> usize {
        self.beta - 1
    }

    /// Upper `N·E^(α-1)·N^(β-1)·E`, lower `E^α·N^β`.
    pub fn path_pair(&self) -> PathPair {
        PathPair::border_strip(self.alpha, self.beta, 1).expect("hook paths are always valid")
    }

    /// The basis of the lower path, `{α+1, …, α+β}`; its incidence vector is
    /// the apex of the pyramid.
    pub fn apex_basis(&self) -> Basis {
        Basis((self.alpha + 1..=self.alpha + self.beta).collect())
    }
}

/// Strictly increasing 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Basis(Vec<usize>);

impl Basis {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) || elements.first() == Some(&0) {
            return Err(Error::UnsortedBasis(elements));
        }
        Ok(Self(elements))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.0.binary_search(&element).is_ok()
    }

    pub fn to_path(&self, ground_size: usize) -> Result<LatticePath> {
        if let Some(&element) = self.0.iter().find(|&&e| e == 0 || e > ground_size) {
            return Err(Error::ElementOutOfRange {
                element,
                ground_size,
            });
        }
        Ok(LatticePath::new(
            (1..=ground_size)
                .map(|i| if self.contains(i) { Step::N } else { Step::E })
                .collect(),
        ))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePathMatroid {
    pub ground_size: usize,
    pub rank: usize,
    pub bases: Vec<Basis>,
}

impl LatticePathMatroid {
    /// Wraps an explicit basis family; bases are sorted lexicographically.
    pub fn from_bases(ground_size: usize, mut bases: Vec<Basis>) -> Result<Self> {
        let rank = bases
            .first()
            .map(Basis::len)
            .ok_or_else(|| Error::Degenerate("basis family is empty".into()))?;
        for b in &bases {
            if b.len() != rank {
                return Err(Error::Degenerate(format!(
                    "basis {b} has cardinality {} but rank is {rank}",
                    b.len()
                )));
            }
            if let Some(&element) = b.elements().iter().find(|&&e| e > ground_size) {
                return Err(Error::ElementOutOfRange {
                    element,
                    ground_size,
                });
            }
        }
        bases.sort();
        bases.dedup();
        Ok(Self {
            ground_size,
            rank,
            bases,
        })
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matroid serialises")
    }
}

/// Number of lattice paths between the bounds, by a prefix-height DP.
pub fn count_bases(pair: &PathPair) -> BigUint {
    let (hu, hl) = (pair.upper.heights(), pair.lower.heights());
    let t = pair.rank();
    let mut ways = vec![BigUint::zero(); t + 1];
    ways[0] = BigUint::one();
    for i in 1..hu.len() {
        let mut next = vec![BigUint::zero(); t + 1];
        for h in hl[i]..=hu[i] {
            let mut w = ways[h].clone();
            if h > 0 {
                w += &ways[h - 1];
            }
            next[h] = w;
        }
        ways = next;
    }
    ways[t].clone()
}

/// Enumerates all bases in lexicographic order, refusing to materialise more
/// than `cap` of them.
pub fn enumerate_bases(pair: &PathPair, cap: usize) -> Result<LatticePathMatroid> {
    let total = count_bases(pair);
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            what: "basis count",
            actual: usize::try_from(&total).unwrap_or(usize::MAX),
            cap,
        });
    }
    let (hu, hl) = (pair.upper.heights(), pair.lower.heights());
    let mut bases = Vec::new();
    let mut current = Vec::with_capacity(pair.rank());
    // N before E at every position yields lexicographic order on N-position sets.
    fn walk(
        i: usize,
        h: usize,
        hu: &[usize],
        hl: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Basis>,
    ) {
        if i + 1 == hu.len() {
            out.push(Basis(current.clone()));
            return;
        }
        if h < hu[i + 1] {
            current.push(i + 1);
            walk(i + 1, h + 1, hu, hl, current, out);
            current.pop();
        }
        if h >= hl[i + 1] {
            walk(i + 1, h, hu, hl, current, out);
        }
    }
    walk(0, 0, &hu, &hl, &mut current, &mut bases);
    Ok(LatticePathMatroid {
        ground_size: pair.ground_size(),
        rank: pair.rank(),
        bases,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub a: Basis,
    pub b: Basis,
    pub x: usize,
}

/// Brute-force basis exchange: for all bases `A, B` and `x ∈ A \ B` some
/// `y ∈ B \ A` makes `A - x + y` a basis. Returns the first violation in
/// (A, B, x) order.
pub fn check_exchange_axiom(matroid: &LatticePathMatroid) -> Result<(), ExchangeViolation> {
    let family: BTreeSet<&[usize]> = matroid.bases.iter().map(Basis::elements).collect();
    for a in &matroid.bases {
        for b in &matroid.bases {
            for &x in a.elements().iter().filter(|&&x| !b.contains(x)) {
                let found = b.elements().iter().filter(|&&y| !a.contains(y)).any(|&y| {
                    let mut swapped: Vec<usize> =
                        a.elements().iter().copied().filter(|&e| e != x).collect();
                    swapped.push(y);
                    swapped.sort_unstable();
                    family.contains(swapped.as_slice())
                });
                if !found {
                    return Err(ExchangeViolation {
                        a: a.clone(),
                        b: b.clone(),
                        x,
                    });
                }
            }
        }
    }
    Ok(())
}
