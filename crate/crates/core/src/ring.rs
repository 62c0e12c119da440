//! Exact arithmetic in `Z[2^(1/n)]`.
//!
//! An element is stored in the power basis `1, r, r^2, ..., r^(n-1)` with
//! `r = 2^(1/n)`, so multiplication reduces with `r^n = 2`. Comparisons in
//! the real embedding are decided exactly: ties are detected from the
//! coefficients, everything else by refining a rational enclosure of `r`
//! until it separates the two sides.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Degree `n` of the ring `Z[2^(1/n)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingParams {
    degree: usize,
}

impl RingParams {
    pub fn new(degree: usize) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidDegree(degree));
        }
        Ok(RingParams { degree })
    }

    /// `Z[√2]`.
    pub fn quadratic() -> Self {
        RingParams { degree: 2 }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn check_same(&self, other: &RingParams) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }
}

/// A nonnegative-or-signed exact rational used as a comparison threshold.
///
/// Always stored in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalBound(BigRational);

impl RationalBound {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidBound("zero denominator".into()));
        }
        Ok(RationalBound(BigRational::new(numerator, denominator)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        RationalBound(BigRational::from_integer(value.into()))
    }

    pub fn from_ratio(value: BigRational) -> Self {
        RationalBound(value)
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn checked_add(&self, other: &RationalBound) -> RationalBound {
        RationalBound(&self.0 + &other.0)
    }
}

impl FromStr for RationalBound {
    type Err = Error;

    /// Parses `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::InvalidBound(format!("`{s}`")))
        };
        match s.split_once('/') {
            Some((p, q)) => RationalBound::new(parse(p)?, parse(q)?),
            None => Ok(RationalBound::from_integer(parse(s)?)),
        }
    }
}

impl fmt::Display for RationalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Element of `Z[2^(1/n)]` as its full coefficient vector `(c_0, ..., c_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    params: RingParams,
    coeffs: Vec<BigInt>,
}

impl RingElem {
    pub fn new(params: RingParams, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != params.degree {
            return Err(Error::CoefficientCount {
                expected: params.degree,
                found: coeffs.len(),
            });
        }
        Ok(RingElem { params, coeffs })
    }

    pub fn from_i64s(params: RingParams, coeffs: &[i64]) -> Result<Self> {
        Self::new(params, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(params: RingParams) -> Self {
        RingElem {
            params,
            coeffs: vec![BigInt::zero(); params.degree],
        }
    }

    pub fn one(params: RingParams) -> Self {
        Self::from_integer(params, BigInt::one())
    }

    pub fn from_integer(params: RingParams, value: BigInt) -> Self {
        let mut e = Self::zero(params);
        e.coeffs[0] = value;
        e
    }

    /// The basis element `r^i`, `0 <= i < n`.
    pub fn basis(params: RingParams, i: usize) -> Self {
        assert!(i < params.degree, "basis index out of range");
        let mut e = Self::zero(params);
        e.coeffs[i] = BigInt::one();
        e
    }

    /// `r = 2^(1/n)`.
    pub fn root(params: RingParams) -> Self {
        Self::basis(params, 1)
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn degree(&self) -> usize {
        self.params.degree
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True iff the element is a rational integer (all irrational coordinates vanish).
    pub fn is_integer(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.params.check_same(&other.params)?;
        Ok(RingElem {
            params: self.params,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.params.check_same(&other.params)?;
        let n = self.params.degree;
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                if i + j < n {
                    out[i + j] += prod;
                } else {
                    // r^(i+j) = 2 * r^(i+j-n)
                    out[i + j - n] += prod * 2;
                }
            }
        }
        Ok(RingElem {
            params: self.params,
            coeffs: out,
        })
    }

    pub fn scale(&self, factor: &BigInt) -> RingElem {
        RingElem {
            params: self.params,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, exp: u64) -> RingElem {
        let mut result = RingElem::one(self.params);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Matrix of multiplication by `self` in the power basis: column `j` holds
    /// the coefficients of `self * r^j`.
    pub fn regular_rep(&self) -> IntMatrix {
        let n = self.params.degree;
        let mut m = IntMatrix::zeros(n, n);
        for j in 0..n {
            let col = self * &RingElem::basis(self.params, j);
            for (i, c) in col.coeffs.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    /// Field norm, computed as the determinant of the regular representation.
    pub fn norm(&self) -> BigInt {
        self.regular_rep().determinant()
    }

    /// Largest `k` with `2^k` dividing every coefficient.
    pub fn two_adic_valuation(&self) -> Valuation {
        self.coeffs
            .iter()
            .filter_map(BigInt::trailing_zeros)
            .min()
            .map_or(Valuation::Infinite, Valuation::Finite)
    }

    /// Exact trichotomy of `|x|` (real embedding, `r > 0`) against `bound`.
    pub fn compare_abs(&self, bound: &RationalBound) -> Result<Ordering> {
        if bound.is_negative() {
            return Err(Error::NegativeBound);
        }
        let (p, q) = (bound.numerator(), bound.denominator());
        if self.is_integer() {
            // |c_0| vs p/q  <=>  |c_0| q vs p
            return Ok((self.coeffs[0].abs() * q).cmp(p));
        }
        // x is irrational, so |x| != bound and the refinement below terminates.
        let mut bits = 32u64;
        loop {
            let enc = self.enclosure(bits);
            let lo = &enc.lower * q;
            let hi = &enc.upper * q;
            let pd = p * &enc.denominator;
            if lo > pd || hi < -&pd {
                return Ok(Ordering::Greater);
            }
            if lo > -&pd && hi < pd {
                return Ok(Ordering::Less);
            }
            bits *= 2;
        }
    }

    /// Sign of the real embedding.
    pub fn signum(&self) -> Ordering {
        if self.is_integer() {
            return self.coeffs[0].cmp(&BigInt::zero());
        }
        let mut bits = 32u64;
        loop {
            let enc = self.enclosure(bits);
            if enc.lower.is_positive() {
                return Ordering::Greater;
            }
            if enc.upper.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    /// A rational number `>= |x|`, tight to roughly `2^-bits` relative to the
    /// coefficient sizes.
    pub fn abs_upper_bound(&self, bits: u64) -> RationalBound {
        if self.is_integer() {
            return RationalBound::from_integer(self.coeffs[0].abs());
        }
        let enc = self.enclosure(bits);
        let top = enc.lower.abs().max(enc.upper.abs());
        RationalBound(BigRational::new(top, enc.denominator))
    }

    /// Rational interval `[lower, upper] / denominator` containing the real
    /// embedding, built from `r ∈ [lo, lo + 1] / 2^bits`.
    pub fn enclosure(&self, bits: u64) -> Enclosure {
        let n = self.params.degree;
        let (lo, hi) = root_bracket(n, bits);
        let scale = BigInt::one() << bits;
        let mut lower = BigInt::zero();
        let mut upper = BigInt::zero();
        let mut lo_pow = BigInt::one();
        let mut hi_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                lo_pow *= &lo;
                hi_pow *= &hi;
            }
            if c.is_zero() {
                continue;
            }
            let pad = num_traits::pow(scale.clone(), n - 1 - i);
            let a = c * &lo_pow * &pad;
            let b = c * &hi_pow * &pad;
            if c.is_positive() {
                lower += a;
                upper += b;
            } else {
                lower += b;
                upper += a;
            }
        }
        Enclosure {
            lower,
            upper,
            denominator: num_traits::pow(scale, n - 1),
        }
    }
}

/// `lower / denominator <= x <= upper / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lower: BigInt,
    pub upper: BigInt,
    pub denominator: BigInt,
}

/// `(lo, lo + 1)` with `lo / 2^bits < 2^(1/n) < (lo + 1) / 2^bits`.
fn root_bracket(n: usize, bits: u64) -> (BigInt, BigInt) {
    // floor((2 * 2^(n*bits))^(1/n)); the root is irrational so the bracket is strict.
    let radicand = BigInt::from(2) << (bits * n as u64);
    let lo = radicand.nth_root(n as u32);
    let hi = &lo + 1;
    (lo, hi)
}

/// 2-adic valuation of a ring element; `Infinite` exactly for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(k) => write!(f, "{k}"),
            Valuation::Infinite => write!(f, "infinite"),
        }
    }
}

impl Add for &RingElem {
    type Output = RingElem;

    /// Panics on degree mismatch; use [`RingElem::try_add`] for a fallible sum.
    fn add(self, rhs: &RingElem) -> RingElem {
        self.try_add(rhs).expect("degree mismatch")
    }
}

impl Sub for &RingElem {
    type Output = RingElem;

    fn sub(self, rhs: &RingElem) -> RingElem {
        self.try_sub(rhs).expect("degree mismatch")
    }
}

impl Mul for &RingElem {
    type Output = RingElem;

    fn mul(self, rhs: &RingElem) -> RingElem {
        self.try_mul(rhs).expect("degree mismatch")
    }
}

impl Neg for &RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        RingElem {
            params: self.params,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        -&self
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.params.degree;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
                if n != 2 {
                    write!(f, "·")?;
                }
            }
            match (n, i) {
                (2, 1) => write!(f, "√2")?,
                (_, 1) => write!(f, "2^(1/{n})")?,
                _ => write!(f, "2^({i}/{n})")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
