//! Arbitrarily small nonzero elements of `Z[2^(1/n)]`.
//!
//! The powers of `u = 2^(1/n) - 1` satisfy `0 < u < 1`, so `u^k` is a
//! nonzero element whose absolute value tends to zero while its coefficients
//! grow without bound. For `n = 2` these are the Pell units `a_k + b_k√2`
//! with `a_k^2 - 2 b_k^2 = ±1`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ring::{RationalBound, RingElem, RingParams};

/// Upper limit on exponents scanned by the searches in this crate.
pub const SEARCH_CAP: u64 = 1_000_000;

/// `2^(1/n) - 1`.
pub fn base_element(params: RingParams) -> RingElem {
    &RingElem::root(params) - &RingElem::one(params)
}

/// `(2^(1/n) - 1)^k`. For `k = 0` this is the unit `1`.
pub fn small_element(params: RingParams, k: u64) -> RingElem {
    base_element(params).pow(k)
}

/// Yields `(k, u^k)` for `k = 1, 2, ...`, one multiplication per step.
#[derive(Clone, Debug)]
pub struct SmallElementStream {
    base: RingElem,
    exponent: u64,
    current: RingElem,
}

impl SmallElementStream {
    pub fn new(params: RingParams) -> Self {
        SmallElementStream {
            base: base_element(params),
            exponent: 0,
            current: RingElem::one(params),
        }
    }

    pub fn params(&self) -> RingParams {
        self.base.params()
    }
}

impl Iterator for SmallElementStream {
    type Item = (u64, RingElem);

    fn next(&mut self) -> Option<Self::Item> {
        self.exponent += 1;
        self.current = &self.current * &self.base;
        Some((self.exponent, self.current.clone()))
    }
}

/// Least `k >= 1` with `|u^k| < epsilon`, together with `u^k`.
pub fn find_small(params: RingParams, epsilon: &RationalBound) -> Result<(u64, RingElem)> {
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveBound);
    }
    for (k, x) in SmallElementStream::new(params) {
        if x.compare_abs(epsilon)? == Ordering::Less {
            return Ok((k, x));
        }
        if k >= SEARCH_CAP {
            break;
        }
    }
    Err(Error::IterationCap {
        cap: SEARCH_CAP,
        context: format!("no power of 2^(1/{}) - 1 below {epsilon}", params.degree()),
    })
}
