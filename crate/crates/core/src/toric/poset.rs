use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite bounded graded poset given by ranks and its Hasse diagram.
///
/// Every cover raises the rank by exactly one, there is a unique element of
/// rank 0 below everything and a unique top above everything.
#[derive(Debug, Clone)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    /// Strict down-sets.
    below: Vec<FixedBitSet>,
    /// Strict up-sets.
    above: Vec<FixedBitSet>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

/// `{"ranks": [...], "hasse": [[lower, upper], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub ranks: Vec<usize>,
    pub hasse: Vec<[usize; 2]>,
}

impl GradedPoset {
    pub fn new(ranks: Vec<usize>, hasse: Vec<(usize, usize)>) -> Result<Self> {
        let n = ranks.len();
        if n == 0 {
            return Err(Error::InvalidPoset("no elements".into()));
        }
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for &(lo, hi) in &hasse {
            if lo >= n || hi >= n {
                return Err(Error::InvalidPoset(format!(
                    "cover ({lo}, {hi}) refers to a missing element"
                )));
            }
            if ranks[hi] != ranks[lo] + 1 {
                return Err(Error::InvalidPoset(format!(
                    "cover ({lo}, {hi}) does not raise the rank by one"
                )));
            }
            lower_covers[hi].push(lo);
            upper_covers[lo].push(hi);
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| lower_covers[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| upper_covers[i].is_empty()).collect();
        let (bottom, top) = match (minimal.as_slice(), maximal.as_slice()) {
            ([b], [t]) => (*b, *t),
            _ => {
                return Err(Error::InvalidPoset(format!(
                    "expected a unique bottom and top, found minimal {minimal:?} and maximal {maximal:?}"
                )))
            }
        };
        if ranks[bottom] != 0 {
            return Err(Error::InvalidPoset(
                "bottom element must have rank 0".into(),
            ));
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| ranks[i]);
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for &y in &order {
            let mut acc = FixedBitSet::with_capacity(n);
            for &x in &lower_covers[y] {
                acc.union_with(&below[x]);
                acc.insert(x);
            }
            below[y] = acc;
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for (y, set) in below.iter().enumerate() {
            for x in set.ones() {
                above[x].insert(y);
            }
        }

        let mut hasse = hasse;
        hasse.sort_unstable();
        hasse.dedup();
        Ok(Self {
            ranks,
            covers: hasse,
            below,
            above,
            lower_covers,
            upper_covers,
            bottom,
            top,
        })
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        Self::new(
            json.ranks.clone(),
            json.hasse.iter().map(|&[a, b]| (a, b)).collect(),
        )
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            ranks: self.ranks.clone(),
            hasse: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// A chain `0 < 1 < … < r`.
    pub fn chain(r: usize) -> Self {
        Self::new((0..=r).collect(), (0..r).map(|i| (i, i + 1)).collect())
            .expect("chains are graded")
    }

    /// Subsets of `{0..k-1}` ordered by inclusion; the face lattice of the
    /// `(k-1)`-simplex.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        let ranks = (0..n).map(|s| s.count_ones() as usize).collect();
        let covers = (0..n)
            .flat_map(|s| {
                (0..k)
                    .filter(move |b| s >> b & 1 == 0)
                    .map(move |b| (s, s | 1 << b))
            })
            .collect();
        Self::new(ranks, covers).expect("boolean lattices are graded")
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `ρ(top)`.
    pub fn rank(&self) -> usize {
        self.ranks[self.top]
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.less(x, y)
    }

    pub fn strictly_below(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[y].ones()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, y: usize) -> &[usize] {
        &self.lower_covers[y]
    }

    /// The interval `[bottom, y]` as a poset of its own. Element order is
    /// preserved; returns the new poset and the original index of each element.
    pub fn lower_interval(&self, y: usize) -> (GradedPoset, Vec<usize>) {
        let mut members: Vec<usize> = self.below[y].ones().collect();
        members.push(y);
        members.sort_unstable();
        let mut index = vec![usize::MAX; self.len()];
        for (new, &old) in members.iter().enumerate() {
            index[old] = new;
        }
        let ranks = members.iter().map(|&m| self.ranks[m]).collect();
        let covers = self
            .covers
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        let sub = GradedPoset::new(ranks, covers).expect("lower intervals stay bounded and graded");
        (sub, members)
    }

    /// `μ(x, y)` for every `y >= x`, indexed by element; entries for
    /// elements not above `x` are zero.
    pub fn mobius_from(&self, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        mu[x] = 1;
        let mut ups: Vec<usize> = self.above[x].ones().collect();
        ups.sort_by_key(|&y| self.ranks[y]);
        for y in ups {
            let s: i64 = self.below[y]
                .ones()
                .filter(|&z| z == x || self.above[x].contains(z))
                .map(|z| mu[z])
                .sum();
            mu[y] = -s;
        }
        mu
    }

    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        self.mobius_from(x)[y]
    }

    /// `μ(x, y) = (-1)^(ρ(y) - ρ(x))` for all `x <= y`.
    pub fn is_eulerian(&self) -> bool {
        (0..self.len()).all(|x| {
            let mu = self.mobius_from(x);
            std::iter::once(x).chain(self.above[x].ones()).all(|y| {
                let parity = (self.ranks[y] - self.ranks[x]) % 2;
                mu[y] == if parity == 0 { 1 } else { -1 }
            })
        })
    }

    /// Every interval of length two has exactly two middle elements.
    pub fn has_diamond_property(&self) -> bool {
        (0..self.len()).all(|x| {
            self.above[x]
                .ones()
                .filter(|&y| self.ranks[y] == self.ranks[x] + 2)
                .all(|y| {
                    self.upper_covers[x]
                        .iter()
                        .filter(|&&z| self.below[y].contains(z))
                        .count()
                        == 2
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_not_eulerian() {
        let c = GradedPoset::chain(2);
        assert_eq!(c.mobius(0, 2), 0);
        assert!(!c.is_eulerian());
        assert!(!c.has_diamond_property());
    }

    #[test]
    fn boolean_lattice_is_eulerian() {
        let b = GradedPoset::boolean(3);
        assert_eq!(b.len(), 8);
        assert_eq!(b.rank(), 3);
        assert_eq!(b.mobius(0, 7), -1);
        assert!(b.is_eulerian());
        assert!(b.has_diamond_property());
    }

    #[test]
    fn rejects_malformed() {
        assert!(GradedPoset::new(vec![0, 2], vec![(0, 1)]).is_err());
        assert!(GradedPoset::new(vec![0, 1, 1], vec![(0, 1), (0, 2)]).is_err());
        assert!(GradedPoset::new(vec![], vec![]).is_err());
        assert!(GradedPoset::new(vec![0, 1], vec![(0, 5)]).is_err());
    }

    #[test]
    fn lower_interval_restricts() {
        let b = GradedPoset::boolean(3);
        let (sub, members) = b.lower_interval(0b011);
        assert_eq!(members, vec![0, 1, 2, 3]);
        assert_eq!(sub.rank(), 2);
        assert!(sub.is_eulerian());
    }

    #[test]
    fn json_round_trip() {
        let b = GradedPoset::boolean(2);
        let json = serde_json::to_string(&b.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"ranks":[0,1,1,2],"hasse":[[0,1],[0,2],[1,3],[2,3]]}"#
        );
        let back: PosetJson = serde_json::from_str(&json).unwrap();
        assert_eq!(
            GradedPoset::from_json(&back).unwrap().to_json(),
            b.to_json()
        );
    }
}
