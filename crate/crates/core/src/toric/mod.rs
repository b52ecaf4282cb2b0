//! Stanley's toric f- and g-polynomials of bounded graded posets.
//!
//! For a poset `P` of rank `n + 1`:
//!
//! ```text
//! f(P, x) = Σ_{y ≠ top} g([0, y], x) · (x - 1)^(n - ρ(y))
//! g(P, x) = h_0 + (h_1 - h_0) x + … + (h_m - h_{m-1}) x^m,   m = ⌊n / 2⌋
//! ```
//!
//! with `f = g = 1` on the one-element poset. The recursion only ever needs
//! lower intervals `[0, y]`, so results are memoised per element.

mod poset;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::hook::binomial;
use crate::poly::IntPolynomial;
use crate::polytope::FVector;
pub use poset::{GradedPoset, PosetJson};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricPair {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
}

impl ToricPair {
    pub fn unit() -> Self {
        Self {
            f: IntPolynomial::one(),
            g: IntPolynomial::one(),
        }
    }
}

/// Truncated difference transform of `f = h_0 + … + h_n x^n`.
pub fn g_from_f(f: &IntPolynomial, n: usize) -> IntPolynomial {
    let m = n / 2;
    IntPolynomial::new(
        (0..=m)
            .map(|i| {
                if i == 0 {
                    f.coeff(0)
                } else {
                    f.coeff(i) - f.coeff(i - 1)
                }
            })
            .collect(),
    )
}

fn minus_one_powers(max: usize) -> Vec<IntPolynomial> {
    let base = IntPolynomial::from_i64s(&[-1, 1]);
    let mut out = Vec::with_capacity(max + 1);
    out.push(IntPolynomial::one());
    for k in 1..=max {
        let next = &out[k - 1] * &base;
        out.push(next);
    }
    out
}

/// The toric pair of every lower interval `[0, y]`, indexed by `y`.
pub fn toric_pairs_by_element(poset: &GradedPoset) -> Vec<ToricPair> {
    let powers = minus_one_powers(poset.rank());
    let mut order: Vec<usize> = (0..poset.len()).collect();
    order.sort_by_key(|&y| poset.rank_of(y));
    let mut memo: Vec<Option<ToricPair>> = vec![None; poset.len()];
    for y in order {
        let r = poset.rank_of(y);
        if r == 0 {
            memo[y] = Some(ToricPair::unit());
            continue;
        }
        let n = r - 1;
        let f = poset
            .strictly_below(y)
            .fold(IntPolynomial::zero(), |acc, z| {
                let gz = &memo[z].as_ref().expect("lower ranks are done first").g;
                &acc + &(gz * &powers[n - poset.rank_of(z)])
            });
        let g = g_from_f(&f, n);
        memo[y] = Some(ToricPair { f, g });
    }
    memo.into_iter().map(Option::unwrap).collect()
}

pub fn toric_pair(poset: &GradedPoset) -> ToricPair {
    toric_pairs_by_element(poset).swap_remove(poset.top())
}

pub fn toric_f(poset: &GradedPoset) -> IntPolynomial {
    toric_pair(poset).f
}

pub fn toric_g(poset: &GradedPoset) -> IntPolynomial {
    toric_pair(poset).g
}

/// Direct recursion that materialises every lower interval as its own poset
/// and recurses without sharing results. Exponential; for cross-checks on
/// small posets only.
pub fn toric_pair_unmemoized(poset: &GradedPoset) -> ToricPair {
    if poset.rank() == 0 {
        return ToricPair::unit();
    }
    let n = poset.rank() - 1;
    let base = IntPolynomial::from_i64s(&[-1, 1]);
    let f = (0..poset.len())
        .filter(|&y| y != poset.top())
        .fold(IntPolynomial::zero(), |acc, y| {
            let (sub, _) = poset.lower_interval(y);
            let g = toric_pair_unmemoized(&sub).g;
            let power = (0..n - poset.rank_of(y)).fold(IntPolynomial::one(), |p, _| &p * &base);
            &acc + &(&g * &power)
        });
    let g = g_from_f(&f, n);
    ToricPair { f, g }
}

/// Toric h-vector `(h_0, …, h_n)`; fails when it is not palindromic, which
/// signals a non-Eulerian input or an internal error.
pub fn toric_h_vector(poset: &GradedPoset) -> Result<Vec<BigInt>> {
    let f = toric_f(poset);
    let n = poset.rank().saturating_sub(1);
    let h: Vec<BigInt> = (0..=n).map(|i| f.coeff(i)).collect();
    if f.is_palindromic(n) {
        Ok(h)
    } else {
        Err(Error::AsymmetricHVector(
            h.iter().map(ToString::to_string).collect(),
        ))
    }
}

/// `h_i = Σ_{j=0}^{i} (-1)^(i-j) C(d-j, i-j) f_{j-1}` for `i = 0..=d`, with
/// `f_{-1} = 1`. Only `f_0..f_{d-1}` are read.
pub fn classical_h_vector(fvec: &FVector, d: usize) -> Vec<BigInt> {
    let f_at = |j: usize| -> BigInt {
        if j == 0 {
            BigInt::one()
        } else {
            BigInt::from(fvec.0.get(j - 1).copied().unwrap_or(0))
        }
    };
    (0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let term = binomial((d - j) as i64, (i - j) as i64) * f_at(j);
                    if (i - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    /// Face lattice of a square: ∅, 4 vertices, 4 edges, the square.
    fn square() -> GradedPoset {
        let mut covers = Vec::new();
        for v in 1..=4 {
            covers.push((0, v));
        }
        // edges 5..=8 join consecutive vertices
        for (e, (a, b)) in [(1, 2), (2, 3), (3, 4), (4, 1)].into_iter().enumerate() {
            covers.push((a, 5 + e));
            covers.push((b, 5 + e));
            covers.push((5 + e, 9));
        }
        GradedPoset::new(vec![0, 1, 1, 1, 1, 2, 2, 2, 2, 3], covers).unwrap()
    }

    #[test]
    fn point_and_segment() {
        let point = GradedPoset::chain(1);
        assert_eq!(toric_pair(&point), ToricPair::unit());
        let seg = GradedPoset::boolean(2);
        assert_eq!(toric_f(&seg), p(&[1, 1]));
        assert_eq!(toric_h_vector(&seg).unwrap(), vec![1.into(), 1.into()]);
    }

    #[test]
    fn square_toric() {
        let sq = square();
        assert!(sq.is_eulerian());
        // by hand: (x-1)^2 + 4(x-1) + 4 = 1 + 2x + x^2
        assert_eq!(toric_f(&sq), p(&[1, 2, 1]));
        assert_eq!(toric_g(&sq), p(&[1, 1]));
        assert_eq!(toric_pair_unmemoized(&sq), toric_pair(&sq));
    }

    #[test]
    fn simplices_have_trivial_g() {
        for k in 1..=5 {
            let b = GradedPoset::boolean(k);
            let pair = toric_pair(&b);
            assert_eq!(pair.f, IntPolynomial::from_i64s(&vec![1; k]));
            assert_eq!(pair.g, IntPolynomial::one());
        }
        let h = toric_h_vector(&GradedPoset::boolean(4)).unwrap();
        assert_eq!(h, vec![BigInt::one(); 4]);
    }

    #[test]
    fn asymmetric_h_vector_is_flagged() {
        // rank-4 chain: f = x^3 - 2x^2
        let c = GradedPoset::chain(4);
        let f = toric_f(&c);
        assert_eq!(f, p(&[0, 0, -2, 1]));
        assert!(!f.is_palindromic(3));
        assert!(matches!(
            toric_h_vector(&c),
            Err(Error::AsymmetricHVector(_))
        ));
    }

    #[test]
    fn classical_h_examples() {
        let tetra = FVector(vec![4, 6, 4, 1]);
        assert_eq!(classical_h_vector(&tetra, 3), vec![BigInt::one(); 4]);
        assert_eq!(
            classical_h_vector(&FVector(vec![1]), 0),
            vec![BigInt::one()]
        );
        // (5, 8, 5) by hand: 1, -3+5, 3-10+8, -1+5-8+5
        let p22 = FVector(vec![5, 8, 5, 1]);
        let h: Vec<BigInt> = [1, 2, 1, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(classical_h_vector(&p22, 3), h);
    }

    #[test]
    fn g_truncation() {
        assert_eq!(g_from_f(&p(&[1, 2, 2, 1]), 3), p(&[1, 1]));
        assert_eq!(g_from_f(&p(&[1, 3, 3, 3, 1]), 4), p(&[1, 2, 0]));
        assert_eq!(g_from_f(&p(&[1]), 0), p(&[1]));
    }
}
