//! Closed forms for hook-shape lattice path matroid polytopes and the
//! coefficient machinery for products of simplices.
//!
//! Notation: a hook `(α, β)` has `m = α - 1`, `n = β - 1`. Its polytope is a
//! pyramid over `Δ_m × Δ_n`, the *reduced* polytope, whose toric
//! polynomials are written `f̃_{m,n}`, `g̃_{m,n}` below.
//!
//! All arithmetic is on `BigInt`. Binomials accept any integer upper index:
//! `C(n, k) = 0` for `k < 0`, and for `n < 0`,
//! `C(n, k) = (-1)^k C(k - n - 1, k)`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPolynomial, LaurentPolynomial};
use crate::polytope::FVector;
use crate::toric::{g_from_f, ToricPair};

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let v = binomial(k - n - 1, k);
        return if k % 2 == 0 { v } else { -v };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn c(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

fn sign(k: i64) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Hook parameters with `β <= α` enforced by swapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookQuantities {
    pub alpha: i64,
    pub beta: i64,
}

impl HookQuantities {
    pub fn new(alpha: usize, beta: usize) -> Self {
        let (a, b) = if beta <= alpha {
            (alpha, beta)
        } else {
            (beta, alpha)
        };
        Self {
            alpha: a as i64,
            beta: b as i64,
        }
    }

    pub fn m(&self) -> i64 {
        self.alpha - 1
    }

    pub fn n(&self) -> i64 {
        self.beta - 1
    }

    /// Faces of dimension `i` of `Δ_m × Δ_n`; `r(-1) = 1` counts the apex.
    pub fn r(&self, i: i64) -> BigInt {
        if i == -1 {
            return BigInt::one();
        }
        (1..=i + 1)
            .map(|k| c(self.alpha, k) * c(self.beta, i + 2 - k))
            .sum()
    }

    /// `S_ℓ = Σ_{k=0}^{ℓ} C(α-1, k) C(β-1, k)`.
    pub fn s(&self, ell: i64) -> BigInt {
        (0..=ell).map(|k| c(self.m(), k) * c(self.n(), k)).sum()
    }

    /// `C_{a,b} = C(α, a) C(β, b)`, the number of `Δ_{a-1} × Δ_{b-1}` faces.
    pub fn c(&self, a: i64, b: i64) -> BigInt {
        c(self.alpha, a) * c(self.beta, b)
    }
}

pub fn r_i(alpha: usize, beta: usize, i: i64) -> BigInt {
    HookQuantities::new(alpha, beta).r(i)
}

/// `f_i = r_i + r_{i-1}` for `0 <= i <= α + β - 1`.
pub fn f_vector_hook(alpha: usize, beta: usize) -> Result<FVector> {
    let h = HookQuantities::new(alpha, beta);
    (0..h.alpha + h.beta)
        .map(|i| {
            let v = h.r(i) + h.r(i - 1);
            v.to_u64().ok_or_else(|| Error::Overflow(v.to_string()))
        })
        .collect::<Result<Vec<_>>>()
        .map(FVector)
}

/// `g_{α,β}(x) = Σ_{k=0}^{β-1} C(α-1, k) C(β-1, k) x^k`.
pub fn g_hook(alpha: usize, beta: usize) -> IntPolynomial {
    let h = HookQuantities::new(alpha, beta);
    reduced_g(h.m() as usize, h.n() as usize)
}

/// Three blocks: `S_0 … S_{β-1}`, then `S_{β-1}` repeated up to degree
/// `α - 1`, then `S_{β-1} … S_0` up to degree `α + β - 1`.
pub fn f_hook(alpha: usize, beta: usize) -> IntPolynomial {
    let h = HookQuantities::new(alpha, beta);
    let (a, b) = (h.alpha, h.beta);
    IntPolynomial::new(
        (0..a + b)
            .map(|k| {
                if k < b {
                    h.s(k)
                } else if k < a {
                    h.s(b - 1)
                } else {
                    h.s(a + b - 1 - k)
                }
            })
            .collect(),
    )
}

/// Closed form `g̃_{m,n}(x) = Σ_k C(m, k) C(n, k) x^k`.
pub fn reduced_g(m: usize, n: usize) -> IntPolynomial {
    let (m, n) = (m as i64, n as i64);
    IntPolynomial::new((0..=m.min(n)).map(|k| c(m, k) * c(n, k)).collect())
}

/// Closed form of `f̃_{m,n}` assembled from the partial sums `S_ℓ` of
/// `g̃_{m,n}`'s coefficients.
pub fn reduced_f(m: usize, n: usize) -> IntPolynomial {
    let (m, n) = if n <= m {
        (m as i64, n as i64)
    } else {
        (n as i64, m as i64)
    };
    let s = |ell: i64| -> BigInt { (0..=ell).map(|k| c(m, k) * c(n, k)).sum() };
    IntPolynomial::new(
        (0..=m + n)
            .map(|k| {
                if k < n {
                    s(k)
                } else if k <= m {
                    s(n)
                } else {
                    s(m + n - k)
                }
            })
            .collect(),
    )
}

/// Toric pairs of `Δ_p × Δ_q` for all `p <= m_max`, `q <= n_max`, computed by
/// running the toric recursion over face *types*: the faces of `Δ_p × Δ_q`
/// are the `C(p+1, a) C(q+1, b)` copies of `Δ_{a-1} × Δ_{b-1}`. No closed
/// form is used.
pub fn reduced_toric_table(m_max: usize, n_max: usize) -> Vec<Vec<ToricPair>> {
    let mut table: Vec<Vec<Option<ToricPair>>> = vec![vec![None; n_max + 1]; m_max + 1];
    let x_minus_one = IntPolynomial::from_i64s(&[-1, 1]);
    let mut powers = vec![IntPolynomial::one()];
    for k in 1..=m_max + n_max {
        let next = &powers[k - 1] * &x_minus_one;
        powers.push(next);
    }
    for total in 0..=m_max + n_max {
        for p in 0..=total.min(m_max) {
            let q = total - p;
            if q > n_max {
                continue;
            }
            let d = p + q;
            let mut f = powers[d].clone();
            for a in 1..=p + 1 {
                for b in 1..=q + 1 {
                    if (a, b) == (p + 1, q + 1) {
                        continue;
                    }
                    let count = c(p as i64 + 1, a as i64) * c(q as i64 + 1, b as i64);
                    let g = &table[a - 1][b - 1].as_ref().expect("smaller faces first").g;
                    f = &f + &(&g.scale(&count) * &powers[d - (a + b - 1)]);
                }
            }
            let g = g_from_f(&f, d);
            table[p][q] = Some(ToricPair { f, g });
        }
    }
    table
        .into_iter()
        .map(|row| row.into_iter().map(Option::unwrap).collect())
        .collect()
}

pub fn reduced_toric(m: usize, n: usize) -> ToricPair {
    reduced_toric_table(m, n)[m][n].clone()
}

/// `ĝ_{p,q}` evaluated at `x + 1`: `Σ_{k=0}^{q} C(p, k) C(q, k) (x+1)^k`,
/// for `p >= -1` and `q >= 0`. At `p = -1` this collapses to `(-x)^q`.
pub fn shifted_g(p: i64, q: i64) -> IntPolynomial {
    (0..=q.max(-1)).fold(IntPolynomial::zero(), |acc, k| {
        let coeff = c(p, k) * c(q, k);
        &acc + &IntPolynomial::linear_power(1, k as usize).scale(&coeff)
    })
}

/// `(-x)^(t-1)`.
pub fn shifted_g_negative(t: usize) -> Result<IntPolynomial> {
    if t == 0 {
        return Err(Error::IndexOutOfRange("t must be >= 1".into()));
    }
    let k = t - 1;
    Ok(IntPolynomial::monomial(sign(k as i64), k))
}

fn check_mn(m: i64, n: i64) -> Result<()> {
    if n < 0 || n > m {
        return Err(Error::IndexOutOfRange(format!(
            "need 0 <= n <= m, got (m, n) = ({m}, {n})"
        )));
    }
    Ok(())
}

/// Entry `(s, t)` of the extended coefficient matrix, a polynomial in `x`:
/// `C_{m+n+1-s-t, t} · ĝ_{m+n-s-t, t-1}(x+1)` with `C_{a,b} = C(m+1, a) C(n+1, b)`.
/// Rows run `-1..=m+n`, columns `1..=n+1`.
pub fn extended_entry(m: usize, n: usize, s: i64, t: i64) -> Result<IntPolynomial> {
    let (m, n) = (m as i64, n as i64);
    check_mn(m, n)?;
    if !(-1..=m + n).contains(&s) || !(1..=n + 1).contains(&t) {
        return Err(Error::IndexOutOfRange(format!(
            "(s, t) = ({s}, {t}) outside rows -1..={} and columns 1..={}",
            m + n,
            n + 1
        )));
    }
    let a = m + n + 1 - s - t;
    let factor = c(m + 1, a) * c(n + 1, t);
    if factor.is_zero() {
        return Ok(IntPolynomial::zero());
    }
    Ok(shifted_g(a - 1, t - 1).scale(&factor))
}

/// `f̂_{m,n}(x+1) = Σ_{s=-1}^{m+n} Σ_{t=1}^{n+1} M̂_{s,t} x^s`, a Laurent
/// polynomial with degrees in `-1..=m+n`.
pub fn extended_f(m: usize, n: usize) -> Result<LaurentPolynomial> {
    check_mn(m as i64, n as i64)?;
    let mut total = LaurentPolynomial::zero();
    for s in -1..=(m + n) as i64 {
        for t in 1..=(n + 1) as i64 {
            let entry = LaurentPolynomial::from(extended_entry(m, n, s, t)?).shift(s);
            total = &total + &entry;
        }
    }
    Ok(total)
}

/// Closed triple sum for `[x^r] f̂_{m,n}(x+1)`, `-1 <= r <= m+n`.
pub fn extended_f_coeff(m: usize, n: usize, r: i64) -> BigInt {
    let (m, n) = (m as i64, n as i64);
    let mut total = BigInt::zero();
    for k in 0..=n {
        let outer = c(m + 1, m + n - r - k);
        if outer.is_zero() {
            continue;
        }
        let mut middle = BigInt::zero();
        for i in 0..=n - k {
            let inner: BigInt = (0..=k)
                .map(|j| c(i + j, i) * c(m + n - r - k - 1, i + j) * c(i + k, i + j))
                .sum();
            middle += c(n + 1, i + k + 1) * inner;
        }
        total += outer * middle;
    }
    total
}

/// `Σ_k C(m, k) C(n, k) C(k, r+1)`: the `x^r` coefficient of
/// `x^{-1} g̃_{m,n}(x+1)`.
fn correction_coeff(m: i64, n: i64, r: i64) -> BigInt {
    (0..=n).map(|k| c(m, k) * c(n, k) * c(k, r + 1)).sum()
}

/// `[x^r] f̃_{m,n}(x+1)` read off the extended matrix.
pub fn reduced_f_coeff_from_matrix(m: usize, n: usize, r: i64) -> BigInt {
    extended_f_coeff(m, n, r) - correction_coeff(m as i64, n as i64, r)
}

/// `[x^r] f̃_{m,n}(x+1)` read off the block form of `f̃`:
/// `Σ_k C(m,k) C(n,k) [C(m+n-k+1, r+1) - C(k, r+1)]`.
pub fn reduced_f_coeff_from_blocks(m: usize, n: usize, r: i64) -> BigInt {
    let (m, n) = (m as i64, n as i64);
    (0..=n)
        .map(|k| c(m, k) * c(n, k) * (c(m + n - k + 1, r + 1) - c(k, r + 1)))
        .sum()
}

/// `f̂_{m,n}(x+1) - x^{-1} Σ_k C(m,k) C(n,k) (x+1)^k`, which should equal
/// `f̃_{m,n}(x+1)`.
pub fn reduced_f_bridge(m: usize, n: usize) -> Result<LaurentPolynomial> {
    let fhat = extended_f(m, n)?;
    let correction = LaurentPolynomial::from(shifted_g(m as i64, n as i64)).shift(-1);
    Ok(&fhat - &correction)
}

/// `Σ_{k=0}^{n} x^{m+n-k} C(n+1, k+1) (-x)^k`; collapses to `x^{m+n}`.
pub fn telescoping_sum(m: usize, n: usize) -> IntPolynomial {
    let (m, n) = (m as i64, n as i64);
    (0..=n).fold(IntPolynomial::zero(), |acc, k| {
        let x_pow = IntPolynomial::monomial(BigInt::one(), (m + n - k) as usize);
        let neg_x = IntPolynomial::monomial(sign(k), k as usize);
        &acc + &(&x_pow * &neg_x).scale(&c(n + 1, k + 1))
    })
}

/// Both sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySides {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentitySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The Vandermonde-type identity that equates the matrix and block
/// expressions for `f̃` coefficients (take `q = m + n - 1 - r`):
///
/// ```text
/// Σ_{k,i,j} C(m+1, q-k+1) C(n+1, i+k+1) C(i+j, j) C(q-k, i+j) C(k+i, k-j)
///     = Σ_k C(m, k) C(n, k) C(m+n-k+1, q-k+1)
/// ```
pub fn vandermonde_extension(m: i64, n: i64, q: i64) -> IdentitySides {
    let mut lhs = BigInt::zero();
    for k in 0..=n {
        let outer = c(m + 1, q - k + 1);
        if outer.is_zero() {
            continue;
        }
        for i in 0..=n - k {
            let mid = c(n + 1, i + k + 1);
            if mid.is_zero() {
                continue;
            }
            let inner: BigInt = (0..=k)
                .map(|j| c(i + j, j) * c(q - k, i + j) * c(k + i, k - j))
                .sum();
            lhs += &outer * &mid * inner;
        }
    }
    let rhs = (0..=n)
        .map(|k| c(m, k) * c(n, k) * c(m + n - k + 1, q - k + 1))
        .sum();
    IdentitySides { lhs, rhs }
}

/// The three inner summations used to collapse the triple sum, innermost
/// first:
///
/// ```text
/// Σ_j C(i+j, j) C(q-k, i+j) C(k+i, k-j)          = C(k+i, k) C(q, k+i)
/// Σ_i C(n+1, i+k+1) C(k+i, k) C(q, k+i)          = C(q, k) C(q+n-k+1, n-k)
/// Σ_k C(m+1, q-k+1) C(q, k) C(q+n-k+1, n-k)      = Σ_k C(m,k) C(n,k) C(m+n-k+1, q-k+1)
/// ```
///
/// The first depends on `(q, k, i)`, the second on `(n, q, k)`, the third on
/// `(m, n, q)`.
pub fn inner_identities(m: i64, n: i64, q: i64, k: i64, i: i64) -> [IdentitySides; 3] {
    let first = IdentitySides {
        lhs: (0..=k)
            .map(|j| c(i + j, j) * c(q - k, i + j) * c(k + i, k - j))
            .sum(),
        rhs: c(k + i, k) * c(q, k + i),
    };
    let second = IdentitySides {
        lhs: (0..=n - k)
            .map(|i| c(n + 1, i + k + 1) * c(k + i, k) * c(q, k + i))
            .sum(),
        rhs: c(q, k) * c(q + n - k + 1, n - k),
    };
    let third = IdentitySides {
        lhs: (0..=n)
            .map(|k| c(m + 1, q - k + 1) * c(q, k) * c(q + n - k + 1, n - k))
            .sum(),
        rhs: (0..=n)
            .map(|k| c(m, k) * c(n, k) * c(m + n - k + 1, q - k + 1))
            .sum(),
    };
    [first, second, third]
}

/// `Σ_k C(a-1, k) C(b-1, k) C(c-1, k) x^k`, the natural guess for border
/// strips. It is not the toric g-polynomial in general.
pub fn triple_product_candidate(a: usize, b: usize, cc: usize) -> IntPolynomial {
    let (a, b, cc) = (a as i64 - 1, b as i64 - 1, cc as i64 - 1);
    let top = a.min(b).min(cc).max(0);
    IntPolynomial::new((0..=top).map(|k| c(a, k) * c(b, k) * c(cc, k)).collect())
}
