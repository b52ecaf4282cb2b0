//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

/// Coefficients by degree; the leading coefficient is nonzero and the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(x + a)^k`
    pub fn linear_power(a: i64, k: usize) -> Self {
        let base = Self::from_i64s(&[a, 1]);
        (0..k).fold(Self::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `p(x + a)` by Horner's scheme.
    pub fn substitute_shift(&self, a: i64) -> Self {
        let lin = Self::from_i64s(&[a, 1]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &lin) + &Self::constant(c.clone())
        })
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Whether the coefficient list of length `n + 1` reads the same reversed.
    pub fn is_palindromic(&self, n: usize) -> bool {
        (0..=n).all(|i| self.coeff(i) == self.coeff(n - i))
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// `{"coeffs": [...], "min_degree": 0}`
    pub fn to_json(&self) -> Value {
        LaurentPolynomial::from(self.clone()).to_json()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().enumerate().map(|(k, c)| (k as i64, c)),
        )
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        match (k, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "x")?,
            (1, false) => write!(f, "{mag}x")?,
            (_, true) => write!(f, "x^{k}")?,
            (_, false) => write!(f, "{mag}x^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(IntPolynomial, Add::add, Sub::sub, Mul::mul);
forward_owned!(LaurentPolynomial, Add::add, Sub::sub, Mul::mul);

/// A polynomial in `x` and `x^-1`: `Σ coeffs[i] · x^(min_degree + i)`.
///
/// Normalised so that neither end of `coeffs` is zero; the zero polynomial
/// has empty `coeffs` and `min_degree = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    min_degree: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn new(min_degree: i64, coeffs: Vec<BigInt>) -> Self {
        let Some(start) = coeffs.iter().position(|c| !c.is_zero()) else {
            return Self::default();
        };
        let end = coeffs.iter().rposition(|c| !c.is_zero()).unwrap() + 1;
        Self {
            min_degree: min_degree + start as i64,
            coeffs: coeffs[start..end].to_vec(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: BigInt, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_degree + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        usize::try_from(k - self.min_degree)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_default()
    }

    /// Multiplies by `x^k`, `k` of either sign.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.min_degree + k, self.coeffs.clone())
    }

    /// `Some` when no negative powers occur.
    pub fn to_polynomial(&self) -> Option<IntPolynomial> {
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let lead = usize::try_from(self.min_degree).ok()?;
        Some(IntPolynomial::new(self.coeffs.clone()).shift(lead))
    }

    fn combine(&self, rhs: &Self, op: impl Fn(BigInt, BigInt) -> BigInt) -> Self {
        match (self.max_degree(), rhs.max_degree()) {
            (None, None) => Self::zero(),
            (a, b) => {
                let lo = match (self.is_zero(), rhs.is_zero()) {
                    (true, _) => rhs.min_degree,
                    (_, true) => self.min_degree,
                    _ => self.min_degree.min(rhs.min_degree),
                };
                let hi = a.into_iter().chain(b).max().unwrap();
                Self::new(
                    lo,
                    (lo..=hi).map(|k| op(self.coeff(k), rhs.coeff(k))).collect(),
                )
            }
        }
    }

    /// `{"coeffs": [...], "min_degree": k}`; coefficients beyond `i64` are
    /// emitted as decimal strings.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_i64()
                    .map_or_else(|| json!(c.to_string()), |v| json!(v))
            })
            .collect();
        json!({ "coeffs": coeffs, "min_degree": self.min_degree })
    }
}

impl From<IntPolynomial> for LaurentPolynomial {
    fn from(p: IntPolynomial) -> Self {
        Self::new(0, p.coeffs)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (self.min_degree + i as i64, c)),
        )
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let product =
            &IntPolynomial::new(self.coeffs.clone()) * &IntPolynomial::new(rhs.coeffs.clone());
        LaurentPolynomial::new(self.min_degree + rhs.min_degree, product.coeffs)
    }
}
