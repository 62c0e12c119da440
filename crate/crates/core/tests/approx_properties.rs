use std::cmp::Ordering;

use boundseq::approx::{small_element, SmallElementStream};
use boundseq::{RationalBound, RingElem, RingParams};
use num_bigint::BigInt;
use num_traits::Signed;

#[test]
fn stream_steps_by_one_multiplication() {
    for degree in 2..=5 {
        let p = RingParams::new(degree).unwrap();
        let base = small_element(p, 1);
        for k in 1..40 {
            assert_eq!(small_element(p, k + 1), &small_element(p, k) * &base);
        }
    }
}

fn abs(x: &RingElem) -> RingElem {
    if x.signum() == Ordering::Less {
        -x
    } else {
        x.clone()
    }
}

#[test]
fn small_elements_are_below_one_and_decreasing() {
    let one = RationalBound::from_integer(1);
    for degree in 2..=5 {
        let p = RingParams::new(degree).unwrap();
        let mut prev: Option<RingElem> = None;
        for (k, x) in SmallElementStream::new(p).take(30) {
            assert!(!x.is_zero());
            assert_eq!(x.compare_abs(&one), Ok(Ordering::Less), "degree {degree} k {k}");
            if let Some(prev) = prev {
                assert_eq!((&abs(&prev) - &abs(&x)).signum(), Ordering::Greater, "degree {degree} k {k}");
            }
            prev = Some(x);
        }
    }
}

#[test]
fn quadratic_pell_units() {
    let p = RingParams::quadratic();
    let mut last_b = BigInt::from(0);
    for (k, x) in SmallElementStream::new(p).take(60) {
        let (a, b) = (&x.coeffs()[0], &x.coeffs()[1]);
        assert!(a.abs() > BigInt::from(0) && b.abs() > BigInt::from(0));
        let n = a * a - BigInt::from(2) * b * b;
        assert!(n == BigInt::from(1) || n == BigInt::from(-1), "k = {k}");
        assert_eq!(x.norm(), n);
        assert!(b.abs() > last_b, "|b_k| must grow at k = {k}");
        last_b = b.abs();
    }
}
