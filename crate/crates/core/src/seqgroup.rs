//! Finitely supported sequences over `Z[2^(1/n)]` and explicit isomorphisms
//! between formal direct sums of sequence groups and free abelian groups.
//!
//! The bounded-sequence group `A` is modelled by its finitely supported
//! subgroup: every map here (shift, interleave, θ, row-finite matrices)
//! preserves finite support, so identities between them can be checked by
//! exact equality. Finite support also makes every sequence bounded and its
//! series convergent.
//!
//! An [`IsoWitness`] is a typed transcript of primitive moves. Each move is
//! invertible, so a witness can be inverted move by move and applied in both
//! directions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{RingElem, RingParams};

/// Sequence `(a_0, a_1, ...)` with finitely many nonzero terms. Trailing
/// zeros are never stored, so equality is list equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinSeq {
    params: RingParams,
    terms: Vec<RingElem>,
}

impl FinSeq {
    pub fn new(params: RingParams, mut terms: Vec<RingElem>) -> Result<Self> {
        if let Some(t) = terms.iter().find(|t| t.params() != params) {
            return Err(Error::DegreeMismatch {
                left: params.degree(),
                right: t.degree(),
            });
        }
        while terms.last().is_some_and(RingElem::is_zero) {
            terms.pop();
        }
        Ok(FinSeq { params, terms })
    }

    pub fn zero(params: RingParams) -> Self {
        FinSeq {
            params,
            terms: Vec::new(),
        }
    }

    /// `e_k`: the sequence with `1` at index `k` and zeros elsewhere.
    pub fn unit(params: RingParams, k: usize) -> Self {
        let mut terms = vec![RingElem::zero(params); k + 1];
        terms[k] = RingElem::one(params);
        FinSeq { params, terms }
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    /// Length of the stored prefix; every term at or beyond it is zero.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[RingElem] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> RingElem {
        self.terms
            .get(i)
            .cloned()
            .unwrap_or_else(|| RingElem::zero(self.params))
    }

    fn check(&self, other: &FinSeq) -> Result<()> {
        if self.params != other.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: other.params.degree(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &FinSeq) -> Result<FinSeq> {
        self.check(other)?;
        let len = self.len().max(other.len());
        let terms = (0..len).map(|i| &self.term(i) + &other.term(i)).collect();
        FinSeq::new(self.params, terms)
    }

    pub fn neg(&self) -> FinSeq {
        FinSeq {
            params: self.params,
            terms: self.terms.iter().map(|t| -t).collect(),
        }
    }

    /// `(a, b) ↦ (b, a_0, a_1, ...)`.
    pub fn shift_embed(&self, b: &RingElem) -> Result<FinSeq> {
        if b.params() != self.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: b.degree(),
            });
        }
        let mut terms = Vec::with_capacity(self.len() + 1);
        terms.push(b.clone());
        terms.extend(self.terms.iter().cloned());
        FinSeq::new(self.params, terms)
    }

    /// Inverse of [`FinSeq::shift_embed`].
    pub fn shift_extract(&self) -> (RingElem, FinSeq) {
        let head = self.term(0);
        let tail = FinSeq {
            params: self.params,
            terms: self.terms.iter().skip(1).cloned().collect(),
        };
        (head, tail)
    }

    /// `(a, b) ↦ (a_0, b_0, a_1, b_1, ...)`.
    pub fn interleave(&self, b: &FinSeq) -> Result<FinSeq> {
        self.check(b)?;
        let len = self.len().max(b.len());
        let mut terms = Vec::with_capacity(2 * len);
        for i in 0..len {
            terms.push(self.term(i));
            terms.push(b.term(i));
        }
        FinSeq::new(self.params, terms)
    }

    /// Inverse of [`FinSeq::interleave`]: even-indexed and odd-indexed terms.
    pub fn deinterleave(&self) -> (FinSeq, FinSeq) {
        let pick = |parity: usize| {
            let terms = self
                .terms
                .iter()
                .skip(parity)
                .step_by(2)
                .cloned()
                .collect();
            FinSeq::new(self.params, terms).expect("same degree")
        };
        (pick(0), pick(1))
    }
}

pub fn shift_embed(b: &RingElem, a: &FinSeq) -> Result<FinSeq> {
    a.shift_embed(b)
}

pub fn shift_extract(a: &FinSeq) -> (RingElem, FinSeq) {
    a.shift_extract()
}

pub fn interleave(a: &FinSeq, b: &FinSeq) -> Result<FinSeq> {
    a.interleave(b)
}

pub fn deinterleave(a: &FinSeq) -> (FinSeq, FinSeq) {
    a.deinterleave()
}

/// `θ_a(b) = (b_0 a_0, (b_0 + b_1) a_1, (b_0 + b_1 + b_2) a_2, ...)`.
///
/// Additive in `b`. For `b = e_k` the result agrees with `a` from index `k`
/// on and vanishes before it.
pub fn theta_los(a: &FinSeq, b: &FinSeq) -> Result<FinSeq> {
    a.check(b)?;
    let mut partial = RingElem::zero(a.params);
    let mut terms = Vec::with_capacity(a.len());
    for (k, ak) in a.terms.iter().enumerate() {
        partial = &partial + &b.term(k);
        terms.push(&partial * ak);
    }
    FinSeq::new(a.params, terms)
}

/// Formal direct sum of copies of `A`, of the ring, and of free groups `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// A copy of the sequence group `A`.
    Seq,
    /// A single ring coordinate `Z[2^(1/n)]`.
    Ring,
    /// `Z^r`, `r >= 1`.
    Free(usize),
    Sum(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn sum(left: Shape, right: Shape) -> Shape {
        Shape::Sum(Box::new(left), Box::new(right))
    }

    /// `A ⊕ Z`.
    pub fn b() -> Shape {
        Shape::sum(Shape::Seq, Shape::Free(1))
    }

    /// Right-nested sum of `count` copies of `shape`.
    pub fn copies(shape: &Shape, count: usize) -> Result<Shape> {
        if count == 0 {
            return Err(Error::InvalidParameter("need at least one copy".into()));
        }
        let mut out = shape.clone();
        for _ in 1..count {
            out = Shape::sum(shape.clone(), out);
        }
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Shape::Free(0) => Err(Error::ShapeMismatch("free rank must be at least 1".into())),
            Shape::Sum(l, r) => {
                l.validate()?;
                r.validate()
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Seq => write!(f, "A"),
            Shape::Ring => write!(f, "R"),
            Shape::Free(1) => write!(f, "Z"),
            Shape::Free(r) => write!(f, "Z^{r}"),
            Shape::Sum(l, r) => write!(f, "({l} ⊕ {r})"),
        }
    }
}

/// Element of a [`Shape`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Seq(FinSeq),
    Ring(RingElem),
    Free(Vec<BigInt>),
    Sum(Box<Element>, Box<Element>),
}

impl Element {
    pub fn sum(left: Element, right: Element) -> Element {
        Element::Sum(Box::new(left), Box::new(right))
    }

    pub fn zero(shape: &Shape, params: RingParams) -> Element {
        match shape {
            Shape::Seq => Element::Seq(FinSeq::zero(params)),
            Shape::Ring => Element::Ring(RingElem::zero(params)),
            Shape::Free(r) => Element::Free(vec![BigInt::zero(); *r]),
            Shape::Sum(l, r) => Element::sum(Element::zero(l, params), Element::zero(r, params)),
        }
    }

    pub fn shape(&self) -> Shape {
        match self {
            Element::Seq(_) => Shape::Seq,
            Element::Ring(_) => Shape::Ring,
            Element::Free(v) => Shape::Free(v.len()),
            Element::Sum(l, r) => Shape::sum(l.shape(), r.shape()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Seq(a) => a.is_empty(),
            Element::Ring(x) => x.is_zero(),
            Element::Free(v) => v.iter().all(Zero::is_zero),
            Element::Sum(l, r) => l.is_zero() && r.is_zero(),
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        Ok(match (self, other) {
            (Element::Seq(a), Element::Seq(b)) => Element::Seq(a.try_add(b)?),
            (Element::Ring(a), Element::Ring(b)) => Element::Ring(a.try_add(b)?),
            (Element::Free(a), Element::Free(b)) if a.len() == b.len() => {
                Element::Free(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (Element::Sum(a, b), Element::Sum(c, d)) => Element::sum(a.try_add(c)?, b.try_add(d)?),
            _ => {
                return Err(Error::ShapeMismatch(format!(
                    "cannot add elements of {} and {}",
                    self.shape(),
                    other.shape()
                )))
            }
        })
    }
}

/// Primitive invertible move between shapes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// `A ⊕ R → A`, `(a, b) ↦ (b, a_0, a_1, ...)`.
    Shift,
    /// `A → A ⊕ R`.
    Unshift,
    /// `A ⊕ A → A`, `(a, b) ↦ (a_0, b_0, a_1, b_1, ...)`.
    Interleave,
    /// `A → A ⊕ A`.
    Deinterleave,
    /// `R → Z^n`, coefficients in the power basis.
    Split,
    /// `Z^n → R`, `(c_0, ..., c_{n-1}) ↦ Σ c_i 2^(i/n)`.
    Pack,
    /// `Z^a ⊕ Z^b → Z^(a+b)`; carries `a`.
    MergeFree(usize),
    /// `Z^(a+b) → Z^a ⊕ Z^b`; carries `a`.
    SplitFree(usize),
    /// `X ⊕ (Y ⊕ W) → (X ⊕ Y) ⊕ W`.
    AssocLeft,
    /// `(X ⊕ Y) ⊕ W → X ⊕ (Y ⊕ W)`.
    AssocRight,
    /// `X ⊕ Y → Y ⊕ X`.
    Swap,
    /// Apply the inner move to the left summand.
    Left(Box<Move>),
    /// Apply the inner move to the right summand.
    Right(Box<Move>),
}

impl Move {
    pub fn left(m: Move) -> Move {
        Move::Left(Box::new(m))
    }

    pub fn right(m: Move) -> Move {
        Move::Right(Box::new(m))
    }

    pub fn inverse(&self) -> Move {
        match self {
            Move::Shift => Move::Unshift,
            Move::Unshift => Move::Shift,
            Move::Interleave => Move::Deinterleave,
            Move::Deinterleave => Move::Interleave,
            Move::Split => Move::Pack,
            Move::Pack => Move::Split,
            Move::MergeFree(a) => Move::SplitFree(*a),
            Move::SplitFree(a) => Move::MergeFree(*a),
            Move::AssocLeft => Move::AssocRight,
            Move::AssocRight => Move::AssocLeft,
            Move::Swap => Move::Swap,
            Move::Left(m) => Move::left(m.inverse()),
            Move::Right(m) => Move::right(m.inverse()),
        }
    }

    fn mismatch(&self, shape: &Shape) -> Error {
        Error::ShapeMismatch(format!("move {self} does not apply to {shape}"))
    }

    /// Shape produced by applying this move to `shape`.
    pub fn target(&self, shape: &Shape, params: RingParams) -> Result<Shape> {
        use Shape::*;
        let n = params.degree();
        let out = match (self, shape) {
            (Move::Shift, Sum(l, r)) if **l == Seq && **r == Ring => Seq,
            (Move::Unshift, Seq) => Shape::sum(Seq, Ring),
            (Move::Interleave, Sum(l, r)) if **l == Seq && **r == Seq => Seq,
            (Move::Deinterleave, Seq) => Shape::sum(Seq, Seq),
            (Move::Split, Ring) => Free(n),
            (Move::Pack, Free(r)) if *r == n => Ring,
            (Move::MergeFree(a), Sum(l, r)) => match (&**l, &**r) {
                (Free(x), Free(y)) if x == a => Free(x + y),
                _ => return Err(self.mismatch(shape)),
            },
            (Move::SplitFree(a), Free(r)) if *a >= 1 && a < r => {
                Shape::sum(Free(*a), Free(r - a))
            }
            (Move::AssocLeft, Sum(x, yw)) => match &**yw {
                Sum(y, w) => Shape::sum(Shape::sum((**x).clone(), (**y).clone()), (**w).clone()),
                _ => return Err(self.mismatch(shape)),
            },
            (Move::AssocRight, Sum(xy, w)) => match &**xy {
                Sum(x, y) => Shape::sum((**x).clone(), Shape::sum((**y).clone(), (**w).clone())),
                _ => return Err(self.mismatch(shape)),
            },
            (Move::Swap, Sum(l, r)) => Shape::sum((**r).clone(), (**l).clone()),
            (Move::Left(m), Sum(l, r)) => Shape::sum(m.target(l, params)?, (**r).clone()),
            (Move::Right(m), Sum(l, r)) => Shape::sum((**l).clone(), m.target(r, params)?),
            _ => return Err(self.mismatch(shape)),
        };
        Ok(out)
    }

    /// Applies the move to an element of its source shape.
    pub fn apply(&self, e: &Element, params: RingParams) -> Result<Element> {
        let bad = || Error::ShapeMismatch(format!("move {self} does not apply to {}", e.shape()));
        let out = match (self, e) {
            (Move::Shift, Element::Sum(l, r)) => match (&**l, &**r) {
                (Element::Seq(a), Element::Ring(b)) => Element::Seq(a.shift_embed(b)?),
                _ => return Err(bad()),
            },
            (Move::Unshift, Element::Seq(a)) => {
                let (b, rest) = a.shift_extract();
                Element::sum(Element::Seq(rest), Element::Ring(b))
            }
            (Move::Interleave, Element::Sum(l, r)) => match (&**l, &**r) {
                (Element::Seq(a), Element::Seq(b)) => Element::Seq(a.interleave(b)?),
                _ => return Err(bad()),
            },
            (Move::Deinterleave, Element::Seq(a)) => {
                let (even, odd) = a.deinterleave();
                Element::sum(Element::Seq(even), Element::Seq(odd))
            }
            (Move::Split, Element::Ring(x)) => {
                if x.params() != params {
                    return Err(bad());
                }
                Element::Free(x.coeffs().to_vec())
            }
            (Move::Pack, Element::Free(v)) => Element::Ring(RingElem::new(params, v.clone())?),
            (Move::MergeFree(a), Element::Sum(l, r)) => match (&**l, &**r) {
                (Element::Free(x), Element::Free(y)) if x.len() == *a => {
                    Element::Free(x.iter().chain(y).cloned().collect())
                }
                _ => return Err(bad()),
            },
            (Move::SplitFree(a), Element::Free(v)) if *a >= 1 && *a < v.len() => {
                Element::sum(Element::Free(v[..*a].to_vec()), Element::Free(v[*a..].to_vec()))
            }
            (Move::AssocLeft, Element::Sum(x, yw)) => match &**yw {
                Element::Sum(y, w) => Element::sum(
                    Element::sum((**x).clone(), (**y).clone()),
                    (**w).clone(),
                ),
                _ => return Err(bad()),
            },
            (Move::AssocRight, Element::Sum(xy, w)) => match &**xy {
                Element::Sum(x, y) => Element::sum(
                    (**x).clone(),
                    Element::sum((**y).clone(), (**w).clone()),
                ),
                _ => return Err(bad()),
            },
            (Move::Swap, Element::Sum(l, r)) => Element::sum((**r).clone(), (**l).clone()),
            (Move::Left(m), Element::Sum(l, r)) => Element::sum(m.apply(l, params)?, (**r).clone()),
            (Move::Right(m), Element::Sum(l, r)) => {
                Element::sum((**l).clone(), m.apply(r, params)?)
            }
            _ => return Err(bad()),
        };
        Ok(out)
    }

    /// The isomorphism this move rests on, in words.
    pub fn fact(&self) -> &'static str {
        match self {
            Move::Shift | Move::Unshift => {
                "A ⊕ Z[2^(1/n)] ≅ A via (a, b) ↦ (b, a0, a1, ...)"
            }
            Move::Interleave | Move::Deinterleave => {
                "A ⊕ A ≅ A via (a, b) ↦ (a0, b0, a1, b1, ...)"
            }
            Move::Split | Move::Pack => {
                "Z[2^(1/n)] ≅ Z^n as groups, power basis (c0, ..., c_{n-1}) ↔ Σ c_i 2^(i/n)"
            }
            Move::MergeFree(_) | Move::SplitFree(_) => "Z^a ⊕ Z^b ≅ Z^(a+b)",
            Move::AssocLeft | Move::AssocRight => "direct sums are associative",
            Move::Swap => "direct sums are commutative",
            Move::Left(m) | Move::Right(m) => m.fact(),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Shift => write!(f, "SHIFT"),
            Move::Unshift => write!(f, "SHIFT⁻¹"),
            Move::Interleave => write!(f, "INTERLEAVE"),
            Move::Deinterleave => write!(f, "INTERLEAVE⁻¹"),
            Move::Split => write!(f, "SPLIT"),
            Move::Pack => write!(f, "SPLIT⁻¹"),
            Move::MergeFree(a) => write!(f, "MERGE({a})"),
            Move::SplitFree(a) => write!(f, "UNMERGE({a})"),
            Move::AssocLeft => write!(f, "ASSOC-L"),
            Move::AssocRight => write!(f, "ASSOC-R"),
            Move::Swap => write!(f, "SWAP"),
            Move::Left(m) => write!(f, "LEFT[{m}]"),
            Move::Right(m) => write!(f, "RIGHT[{m}]"),
        }
    }
}

/// A type-checked composition of moves from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    params: RingParams,
    source: Shape,
    target: Shape,
    moves: Vec<Move>,
}

impl IsoWitness {
    pub fn identity(params: RingParams, shape: Shape) -> Result<Self> {
        shape.validate()?;
        Ok(IsoWitness {
            params,
            target: shape.clone(),
            source: shape,
            moves: Vec::new(),
        })
    }

    pub fn from_moves(params: RingParams, source: Shape, moves: Vec<Move>) -> Result<Self> {
        source.validate()?;
        let mut target = source.clone();
        for m in &moves {
            target = m.target(&target, params)?;
        }
        Ok(IsoWitness {
            params,
            source,
            target,
            moves,
        })
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn source(&self) -> &Shape {
        &self.source
    }

    pub fn target(&self) -> &Shape {
        &self.target
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &IsoWitness) -> Result<IsoWitness> {
        if self.params != next.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: next.params.degree(),
            });
        }
        if self.target != next.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} → {} with {} → {}",
                self.source, self.target, next.source, next.target
            )));
        }
        let mut moves = self.moves.clone();
        moves.extend(next.moves.iter().cloned());
        Ok(IsoWitness {
            params: self.params,
            source: self.source.clone(),
            target: next.target.clone(),
            moves,
        })
    }

    pub fn invert(&self) -> IsoWitness {
        IsoWitness {
            params: self.params,
            source: self.target.clone(),
            target: self.source.clone(),
            moves: self.moves.iter().rev().map(Move::inverse).collect(),
        }
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        let shape = e.shape();
        if shape != self.source {
            return Err(Error::ShapeMismatch(format!(
                "element of {shape} given to witness from {}",
                self.source
            )));
        }
        let mut cur = e.clone();
        for m in &self.moves {
            cur = m.apply(&cur, self.params)?;
        }
        Ok(cur)
    }
}

pub fn compose(first: &IsoWitness, second: &IsoWitness) -> Result<IsoWitness> {
    first.compose(second)
}

pub fn invert(w: &IsoWitness) -> IsoWitness {
    w.invert()
}

pub fn apply_witness(w: &IsoWitness, e: &Element) -> Result<Element> {
    w.apply(e)
}

/// Named witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Identity(Shape),
    /// `A ⊕ R → A`.
    Shift,
    /// `A ⊕ A → A`.
    Interleave,
    /// `R → Z^n`.
    Split,
    /// `A ⊕ Z^n → A`.
    AbsorbFree,
    /// `(n+1)` copies of `A ⊕ Z` to normal form; see [`corner_witness`].
    Corner(usize),
    /// Any shape to normal form; see [`normalize`].
    Normalize(Shape),
}

pub fn build_witness(kind: &WitnessKind, params: RingParams) -> Result<IsoWitness> {
    use Shape::*;
    let n = params.degree();
    match kind {
        WitnessKind::Identity(s) => IsoWitness::identity(params, s.clone()),
        WitnessKind::Shift => IsoWitness::from_moves(params, Shape::sum(Seq, Ring), vec![Move::Shift]),
        WitnessKind::Interleave => {
            IsoWitness::from_moves(params, Shape::sum(Seq, Seq), vec![Move::Interleave])
        }
        WitnessKind::Split => IsoWitness::from_moves(params, Ring, vec![Move::Split]),
        WitnessKind::AbsorbFree => IsoWitness::from_moves(
            params,
            Shape::sum(Seq, Free(n)),
            vec![Move::right(Move::Pack), Move::Shift],
        ),
        WitnessKind::Corner(copies) => corner_witness(params, *copies).map(|(w, _)| w),
        WitnessKind::Normalize(s) => normalize(params, s),
    }
}

/// Normal forms reached by [`normalize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Canon {
    A,
    Z(usize),
    /// `A ⊕ Z^r`, `1 <= r < n`.
    AZ(usize),
}

/// Witness from `shape` to its normal form: `A`, `Z^r`, or `A ⊕ Z^r` with
/// `0 < r < n`. Every copy of `A` is merged by interleaving and free ranks
/// are absorbed into `A` in blocks of `n` through the ring coordinate.
pub fn normalize(params: RingParams, shape: &Shape) -> Result<IsoWitness> {
    shape.validate()?;
    let (moves, _) = normalize_moves(shape, params.degree());
    IsoWitness::from_moves(params, shape.clone(), moves)
}

fn normalize_moves(shape: &Shape, n: usize) -> (Vec<Move>, Canon) {
    match shape {
        Shape::Seq => (vec![], Canon::A),
        Shape::Free(r) => (vec![], Canon::Z(*r)),
        Shape::Ring => (vec![Move::Split], Canon::Z(n)),
        Shape::Sum(l, r) => {
            let (lm, lc) = normalize_moves(l, n);
            let (rm, rc) = normalize_moves(r, n);
            let mut moves: Vec<Move> = lm.into_iter().map(Move::left).collect();
            moves.extend(rm.into_iter().map(Move::right));
            let (cm, c) = combine(lc, rc, n);
            moves.extend(cm);
            (moves, c)
        }
    }
}

/// Moves taking `x ⊕ y` (both normal) to a normal form.
fn combine(x: Canon, y: Canon, n: usize) -> (Vec<Move>, Canon) {
    use Canon::*;
    match (x, y) {
        (A, A) => (vec![Move::Interleave], A),
        (A, Z(b)) => absorb(b, n),
        (Z(_), A) | (Z(_), AZ(_)) | (AZ(_), A) => {
            let (mut rest, c) = combine(y, x, n);
            rest.insert(0, Move::Swap);
            (rest, c)
        }
        (Z(a), Z(b)) => (vec![Move::MergeFree(a)], Z(a + b)),
        (A, AZ(b)) => {
            let mut moves = vec![Move::AssocLeft, Move::left(Move::Interleave)];
            let (rest, c) = absorb(b, n);
            moves.extend(rest);
            (moves, c)
        }
        (AZ(a), Z(b)) => {
            let mut moves = vec![Move::AssocRight, Move::right(Move::MergeFree(a))];
            let (rest, c) = absorb(a + b, n);
            moves.extend(rest);
            (moves, c)
        }
        (AZ(a), AZ(b)) => {
            // A ⊕ (Z^a ⊕ (A ⊕ Z^b)), then normalize the right summand
            let mut moves = vec![Move::AssocRight];
            let (inner, ic) = combine(Z(a), AZ(b), n);
            moves.extend(inner.into_iter().map(Move::right));
            let (rest, c) = combine(A, ic, n);
            moves.extend(rest);
            (moves, c)
        }
    }
}

/// Moves taking `A ⊕ Z^r` to `A ⊕ Z^(r mod n)` (or `A`).
fn absorb(r: usize, n: usize) -> (Vec<Move>, Canon) {
    let mut moves = Vec::new();
    let mut rest = r;
    while rest > n {
        moves.push(Move::right(Move::SplitFree(n)));
        moves.push(Move::right(Move::left(Move::Pack)));
        moves.push(Move::AssocLeft);
        moves.push(Move::left(Move::Shift));
        rest -= n;
    }
    if rest == n {
        moves.push(Move::right(Move::Pack));
        moves.push(Move::Shift);
        return (moves, Canon::A);
    }
    (moves, Canon::AZ(rest))
}

/// One move of a witness with its source and target shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveStep {
    pub from: Shape,
    pub to: Shape,
    pub step: Move,
    pub fact: &'static str,
}

/// Step-by-step account of a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub source: Shape,
    pub target: Shape,
    pub steps: Vec<MoveStep>,
    /// Free rank left over, `(copies) mod n`.
    pub residual_rank: usize,
}

impl WitnessReport {
    pub fn of(w: &IsoWitness) -> WitnessReport {
        let mut steps = Vec::with_capacity(w.moves.len());
        let mut cur = w.source.clone();
        for m in &w.moves {
            let next = m.target(&cur, w.params).expect("witness is type-checked");
            steps.push(MoveStep {
                from: cur,
                to: next.clone(),
                step: m.clone(),
                fact: m.fact(),
            });
            cur = next;
        }
        let residual_rank = match &w.target {
            Shape::Sum(_, r) => match **r {
                Shape::Free(k) => k,
                _ => 0,
            },
            Shape::Free(k) => *k,
            _ => 0,
        };
        WitnessReport {
            source: w.source.clone(),
            target: w.target.clone(),
            steps,
            residual_rank,
        }
    }
}

/// Witness from the sum of `copies + 1` copies of `B = A ⊕ Z` to its normal
/// form `A ⊕ Z^((copies + 1) mod n)`. With `copies = n` this is
/// `B^(n+1) ≅ B`; for `n = 2` and `copies = 1` it is `B ⊕ B ≅ A`.
pub fn corner_witness(params: RingParams, copies: usize) -> Result<(IsoWitness, WitnessReport)> {
    if copies == 0 {
        return Err(Error::InvalidParameter(
            "corner witness needs copies >= 1".into(),
        ));
    }
    let source = Shape::copies(&Shape::b(), copies + 1)?;
    let w = normalize(params, &source)?;
    let report = WitnessReport::of(&w);
    Ok((w, report))
}
