//! Seeded random generators for fuzzing and randomized evidence.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::homcalc::GroupHom;
use crate::matrix::IntMatrix;
use crate::ring::{RingElem, RingParams};
use crate::seqgroup::{Element, FinSeq, Shape};
use crate::snf::ModuleMatrix;

pub type SampleRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> BigInt {
    BigInt::from(rng.gen_range(-bound..=bound))
}

pub fn ring_elem<R: Rng + ?Sized>(rng: &mut R, params: RingParams, bound: i64) -> RingElem {
    let coeffs = (0..params.degree()).map(|_| int(rng, bound)).collect();
    RingElem::new(params, coeffs).expect("degree-length vector")
}

/// Random sequence with support inside `0..max_len`.
pub fn finseq<R: Rng + ?Sized>(
    rng: &mut R,
    params: RingParams,
    max_len: usize,
    bound: i64,
) -> FinSeq {
    let len = rng.gen_range(0..=max_len);
    let terms = (0..len).map(|_| ring_elem(rng, params, bound)).collect();
    FinSeq::new(params, terms).expect("same degree")
}

pub fn element<R: Rng + ?Sized>(
    rng: &mut R,
    shape: &Shape,
    params: RingParams,
    max_len: usize,
    bound: i64,
) -> Element {
    match shape {
        Shape::Seq => Element::Seq(finseq(rng, params, max_len, bound)),
        Shape::Ring => Element::Ring(ring_elem(rng, params, bound)),
        Shape::Free(r) => Element::Free((0..*r).map(|_| int(rng, bound)).collect()),
        Shape::Sum(l, r) => Element::sum(
            element(rng, l, params, max_len, bound),
            element(rng, r, params, max_len, bound),
        ),
    }
}

pub fn int_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| int(rng, bound)).collect())
        .collect();
    IntMatrix::from_rows(data).expect("rectangular")
}

pub fn group_hom<R: Rng + ?Sized>(rng: &mut R, params: RingParams, bound: i64) -> GroupHom {
    let n = params.degree();
    GroupHom::new(params, int_matrix(rng, n, n, bound)).expect("square")
}

/// Rejection-samples a map that does not commute with multiplication by the root.
pub fn non_module_hom<R: Rng + ?Sized>(rng: &mut R, params: RingParams, bound: i64) -> GroupHom {
    loop {
        let h = group_hom(rng, params, bound);
        if !h.is_module_hom() {
            return h;
        }
    }
}

pub fn module_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    params: RingParams,
    rows: usize,
    cols: usize,
    bound: i64,
) -> ModuleMatrix {
    let entries = (0..rows)
        .map(|_| (0..cols).map(|_| ring_elem(rng, params, bound)).collect())
        .collect();
    ModuleMatrix::new(params, entries).expect("rectangular")
}
