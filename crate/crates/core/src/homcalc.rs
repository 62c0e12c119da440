//! Additive endomorphisms of `Z[2^(1/n)]` and row-finite matrices of them.
//!
//! A [`GroupHom`] is an arbitrary `Z`-linear map of the ring, stored as an
//! `n x n` integer matrix acting on coefficient vectors. It is a module
//! homomorphism exactly when it commutes with multiplication by
//! `r = 2^(1/n)`, i.e. when it is multiplication by a ring element.
//!
//! For a map that is *not* module-linear, small elements `u^k` with
//! `u = r - 1` have images of unbounded size; [`epsilon_witness`] finds the
//! first such power beating a given pair of bounds, and
//! [`unboundedness_witness`] chains those witnesses into a bounded input
//! whose image under a row-finite matrix has unbounded rows.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::approx::{SmallElementStream, SEARCH_CAP};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::ring::{RationalBound, RingElem, RingParams};
use crate::seqgroup::FinSeq;

/// Bits of precision used when replacing an exact partial sum by a rational
/// upper bound on its absolute value.
const UPPER_BOUND_BITS: u64 = 64;

/// `Z`-linear endomorphism of `Z[2^(1/n)]`; column `j` is the image of `r^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    params: RingParams,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(params: RingParams, matrix: IntMatrix) -> Result<Self> {
        let n = params.degree();
        if matrix.shape() != (n, n) {
            return Err(Error::MatrixShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: n,
                expected_cols: n,
            });
        }
        Ok(GroupHom { params, matrix })
    }

    pub fn from_i64_rows(params: RingParams, rows: &[&[i64]]) -> Result<Self> {
        Self::new(params, IntMatrix::from_i64_rows(rows))
    }

    /// The map sending `r^j` to `images[j]`.
    pub fn from_images(params: RingParams, images: &[RingElem]) -> Result<Self> {
        let n = params.degree();
        if images.len() != n {
            return Err(Error::CoefficientCount {
                expected: n,
                found: images.len(),
            });
        }
        let mut m = IntMatrix::zeros(n, n);
        for (j, img) in images.iter().enumerate() {
            if img.params() != params {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: img.degree(),
                });
            }
            for (i, c) in img.coeffs().iter().enumerate() {
                m[(i, j)] = c.clone();
            }
        }
        Ok(GroupHom { params, matrix: m })
    }

    pub fn identity(params: RingParams) -> Self {
        GroupHom {
            params,
            matrix: IntMatrix::identity(params.degree()),
        }
    }

    pub fn zero(params: RingParams) -> Self {
        GroupHom {
            params,
            matrix: IntMatrix::zeros(params.degree(), params.degree()),
        }
    }

    /// Multiplication by `x`.
    pub fn multiplication(x: &RingElem) -> Self {
        GroupHom {
            params: x.params(),
            matrix: x.regular_rep(),
        }
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, x: &RingElem) -> Result<RingElem> {
        if x.params() != self.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: x.degree(),
            });
        }
        RingElem::new(self.params, self.matrix.mul_vec(x.coeffs()))
    }

    /// `M R - R M` where `R` is multiplication by `r`.
    pub fn root_commutator(&self) -> IntMatrix {
        let rep = RingElem::root(self.params).regular_rep();
        &(&self.matrix * &rep) - &(&rep * &self.matrix)
    }

    pub fn is_module_hom(&self) -> bool {
        self.root_commutator().is_zero()
    }

    /// `θ(r) - r·θ(1)`; zero iff `θ` agrees with multiplication by `θ(1)` on
    /// the first two basis vectors (all of the ring when `n = 2`).
    pub fn root_defect(&self) -> RingElem {
        let one = RingElem::one(self.params);
        let r = RingElem::root(self.params);
        let at_r = self.apply(&r).expect("same degree");
        let at_one = self.apply(&one).expect("same degree");
        &at_r - &(&r * &at_one)
    }

    /// The ring element this map multiplies by, if it is module-linear.
    pub fn as_multiplier(&self) -> Option<RingElem> {
        if !self.is_module_hom() {
            return None;
        }
        Some(
            self.apply(&RingElem::one(self.params))
                .expect("same degree"),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        self.check_degree(other)?;
        Ok(GroupHom {
            params: self.params,
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn try_add(&self, other: &GroupHom) -> Result<GroupHom> {
        self.check_degree(other)?;
        Ok(GroupHom {
            params: self.params,
            matrix: &self.matrix + &other.matrix,
        })
    }

    fn check_degree(&self, other: &GroupHom) -> Result<()> {
        if self.params != other.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: other.params.degree(),
            });
        }
        Ok(())
    }
}

pub fn is_module_hom(h: &GroupHom) -> bool {
    h.is_module_hom()
}

pub fn apply_hom(h: &GroupHom, x: &RingElem) -> Result<RingElem> {
    h.apply(x)
}

/// Termination of [`epsilon_witness`] is proven for `Z[√2]`; for higher
/// degrees the search is run best-effort under [`SEARCH_CAP`].
pub fn witness_guarantee_proven(params: RingParams) -> bool {
    params.degree() == 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonWitness {
    /// Exponent with `x = (2^(1/n) - 1)^k`.
    pub exponent: u64,
    pub x: RingElem,
    /// `θ(x)`.
    pub image: RingElem,
}

/// First power `x = (2^(1/n) - 1)^k` with `|x| < epsilon` and `|θ(x)| > big_n`.
pub fn epsilon_witness(
    theta: &GroupHom,
    epsilon: &RationalBound,
    big_n: &RationalBound,
) -> Result<EpsilonWitness> {
    if theta.is_module_hom() {
        return Err(Error::ModuleHom(
            "epsilon witness needs a map that does not commute with multiplication by the root"
                .into(),
        ));
    }
    if !epsilon.is_positive() || !big_n.is_positive() {
        return Err(Error::NonPositiveBound);
    }
    for (k, x) in SmallElementStream::new(theta.params()) {
        if k > SEARCH_CAP {
            break;
        }
        if x.compare_abs(epsilon)? != Ordering::Less {
            continue;
        }
        let image = theta.apply(&x)?;
        if image.compare_abs(big_n)? == Ordering::Greater {
            return Ok(EpsilonWitness {
                exponent: k,
                x,
                image,
            });
        }
    }
    Err(Error::IterationCap {
        cap: SEARCH_CAP,
        context: format!(
            "no witness with |x| < {epsilon} and |θ(x)| > {big_n} in degree {}",
            theta.params().degree()
        ),
    })
}

/// Finite functional `a ↦ Σ φ_i(a_i)`; indices strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    params: RingParams,
    entries: Vec<(usize, GroupHom)>,
}

impl Functional {
    pub fn new(params: RingParams, entries: Vec<(usize, GroupHom)>) -> Result<Self> {
        for w in entries.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidParameter(format!(
                    "functional indices must be strictly increasing ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        if let Some((_, h)) = entries.iter().find(|(_, h)| h.params() != params) {
            return Err(Error::DegreeMismatch {
                left: params.degree(),
                right: h.params().degree(),
            });
        }
        Ok(Functional { params, entries })
    }

    pub fn empty(params: RingParams) -> Self {
        Functional {
            params,
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[(usize, GroupHom)] {
        &self.entries
    }

    pub fn eval(&self, a: &FinSeq) -> Result<RingElem> {
        if a.params() != self.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: a.params().degree(),
            });
        }
        let mut sum = RingElem::zero(self.params);
        for (i, h) in &self.entries {
            sum = &sum + &h.apply(&a.term(*i))?;
        }
        Ok(sum)
    }
}

pub fn eval_functional(f: &Functional, a: &FinSeq) -> Result<RingElem> {
    f.eval(a)
}

/// Matrix of homomorphisms with finitely many stored entries; entry
/// `(m, n)` maps term `n` of the input into term `m` of the output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowFiniteMatrix {
    params: RingParams,
    entries: BTreeMap<(usize, usize), GroupHom>,
}

impl RowFiniteMatrix {
    pub fn new(params: RingParams) -> Self {
        RowFiniteMatrix {
            params,
            entries: BTreeMap::new(),
        }
    }

    /// Diagonal identities on rows `0..size`.
    pub fn identity(params: RingParams, size: usize) -> Self {
        let mut m = Self::new(params);
        for i in 0..size {
            m.entries.insert((i, i), GroupHom::identity(params));
        }
        m
    }

    /// `B[i+1, i] = id` for `i < size`: moves each of the first `size` terms
    /// one place to the right.
    pub fn shift(params: RingParams, size: usize) -> Self {
        let mut m = Self::new(params);
        for i in 0..size {
            m.entries.insert((i + 1, i), GroupHom::identity(params));
        }
        m
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    /// Stores `hom` at `(row, col)`; zero maps are dropped.
    pub fn insert(&mut self, row: usize, col: usize, hom: GroupHom) -> Result<()> {
        if hom.params() != self.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: hom.params().degree(),
            });
        }
        if hom.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), hom);
        }
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&GroupHom> {
        self.entries.get(&(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &GroupHom)> {
        self.entries.iter()
    }

    pub fn apply(&self, a: &FinSeq) -> Result<FinSeq> {
        if a.params() != self.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: a.params().degree(),
            });
        }
        let mut out: BTreeMap<usize, RingElem> = BTreeMap::new();
        for (&(m, n), h) in &self.entries {
            if n >= a.len() {
                continue;
            }
            let v = h.apply(&a.term(n))?;
            let slot = out
                .entry(m)
                .or_insert_with(|| RingElem::zero(self.params));
            *slot = &*slot + &v;
        }
        let len = out.keys().next_back().map_or(0, |&m| m + 1);
        let mut terms = vec![RingElem::zero(self.params); len];
        for (m, v) in out {
            terms[m] = v;
        }
        FinSeq::new(self.params, terms)
    }

    /// `self ∘ other`: entry `(m, n)` is `Σ_j self[m, j] ∘ other[j, n]`.
    pub fn compose(&self, other: &RowFiniteMatrix) -> Result<RowFiniteMatrix> {
        if self.params != other.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: other.params.degree(),
            });
        }
        let mut out = RowFiniteMatrix::new(self.params);
        for (&(m, j), left) in &self.entries {
            for (&(j2, n), right) in other.entries.range((j, 0)..=(j, usize::MAX)) {
                debug_assert_eq!(j, j2);
                let prod = left.compose(right)?;
                let sum = match out.entries.get(&(m, n)) {
                    Some(prev) => prev.try_add(&prod)?,
                    None => prod,
                };
                out.insert(m, n, sum)?;
            }
        }
        Ok(out)
    }
}

pub fn apply_row_finite(b: &RowFiniteMatrix, a: &FinSeq) -> Result<FinSeq> {
    b.apply(a)
}

/// One row/column pair of a witness instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub row: usize,
    pub col: usize,
    /// `β[row_k, col_k]`, which must not be module-linear.
    pub diagonal: GroupHom,
    /// `β[row_k, col_l]` for `l < k`, in order of `l`.
    pub priors: Vec<GroupHom>,
}

/// The lower-triangular slice of a row-finite matrix visited by the
/// unboundedness construction. Entries `β[row_k, col_l]` with `l > k` are
/// zero and not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessInstance {
    params: RingParams,
    stages: Vec<Stage>,
    targets: Vec<RationalBound>,
}

impl WitnessInstance {
    pub fn new(
        params: RingParams,
        stages: Vec<Stage>,
        targets: Vec<RationalBound>,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidInstance(msg));
        if stages.len() != targets.len() {
            return invalid(format!(
                "{} stages but {} targets",
                stages.len(),
                targets.len()
            ));
        }
        for (k, stage) in stages.iter().enumerate() {
            if stage.priors.len() != k {
                return invalid(format!(
                    "stage {k} has {} prior entries, expected {k}",
                    stage.priors.len()
                ));
            }
            if std::iter::once(&stage.diagonal)
                .chain(&stage.priors)
                .any(|h| h.params() != params)
            {
                return invalid(format!("stage {k} has a map of the wrong degree"));
            }
            if stage.diagonal.is_module_hom() {
                return invalid(format!("stage {k} diagonal map is module-linear"));
            }
            if k > 0 {
                let prev = &stages[k - 1];
                if stage.row <= prev.row || stage.col <= prev.col {
                    return invalid(format!(
                        "stage {k}: rows and columns must be strictly increasing"
                    ));
                }
            }
        }
        for (k, t) in targets.iter().enumerate() {
            if !t.is_positive() {
                return invalid(format!("target {k} must be positive"));
            }
            if k > 0 && t <= &targets[k - 1] {
                return invalid(format!("target {k} must exceed target {}", k - 1));
            }
        }
        Ok(WitnessInstance {
            params,
            stages,
            targets,
        })
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn targets(&self) -> &[RationalBound] {
        &self.targets
    }

    /// The instance as a row-finite matrix (stored entries only).
    pub fn to_row_finite(&self) -> RowFiniteMatrix {
        let mut m = RowFiniteMatrix::new(self.params);
        for stage in &self.stages {
            m.insert(stage.row, stage.col, stage.diagonal.clone())
                .expect("degree checked on construction");
            for (l, h) in stage.priors.iter().enumerate() {
                m.insert(stage.row, self.stages[l].col, h.clone())
                    .expect("degree checked on construction");
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnboundedStage {
    pub row: usize,
    pub col: usize,
    pub exponent: u64,
    /// `x_{col}`, with `|x| < 1`.
    pub x: RingElem,
    /// Rational upper bound used for `|Σ_{l<k} β[row, col_l](x_l)|`.
    pub prior_bound: RationalBound,
    /// `Σ_{l<=k} β[row, col_l](x_l)`.
    pub row_sum: RingElem,
}

/// Chooses `x_k` stage by stage so that every `|x_k| < 1` while the
/// `k`-th row sum exceeds `targets[k]` in absolute value.
pub fn unboundedness_witness(w: &WitnessInstance) -> Result<Vec<UnboundedStage>> {
    let one = RationalBound::from_integer(1);
    let mut out: Vec<UnboundedStage> = Vec::with_capacity(w.stages.len());
    for (k, stage) in w.stages.iter().enumerate() {
        let mut prior = RingElem::zero(w.params);
        for (l, h) in stage.priors.iter().enumerate() {
            prior = &prior + &h.apply(&out[l].x)?;
        }
        let prior_bound = prior.abs_upper_bound(UPPER_BOUND_BITS);
        let threshold = w.targets[k].checked_add(&prior_bound);
        let found = epsilon_witness(&stage.diagonal, &one, &threshold)?;
        let row_sum = &found.image + &prior;
        // |θ(x) + s| >= |θ(x)| - |s| > target + bound - |s| >= target
        if row_sum.compare_abs(&w.targets[k])? != Ordering::Greater
            || found.x.compare_abs(&one)? != Ordering::Less
        {
            return Err(Error::InvalidInstance(format!(
                "stage {k} witness failed verification"
            )));
        }
        out.push(UnboundedStage {
            row: stage.row,
            col: stage.col,
            exponent: found.exponent,
            x: found.x,
            prior_bound,
            row_sum,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2(c: &[i64]) -> RingElem {
        RingElem::from_i64s(RingParams::quadratic(), c).unwrap()
    }

    fn hom(rows: &[&[i64]]) -> GroupHom {
        GroupHom::from_i64_rows(RingParams::quadratic(), rows).unwrap()
    }

    fn b(s: &str) -> RationalBound {
        s.parse().unwrap()
    }

    #[test]
    fn module_hom_detection() {
        assert!(GroupHom::identity(RingParams::quadratic()).is_module_hom());
        assert!(!hom(&[&[1, 0], &[0, 0]]).is_module_hom());
        assert!(GroupHom::multiplication(&q2(&[5, -3])).is_module_hom());
        assert_eq!(hom(&[&[1, 0], &[0, 0]]).root_defect(), q2(&[0, -1]));
        assert_eq!(
            GroupHom::multiplication(&q2(&[5, -3])).as_multiplier(),
            Some(q2(&[5, -3]))
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(hom(&[&[1, 0], &[0, 0]]).apply(&q2(&[17, -12])), Ok(q2(&[17, 0])));
        let root = GroupHom::multiplication(&q2(&[0, 1]));
        assert_eq!(root.apply(&q2(&[1, 1])), Ok(q2(&[2, 1])));
        let p3 = RingParams::new(3).unwrap();
        assert!(root.apply(&RingElem::one(p3)).is_err());
    }

    #[test]
    fn shape_checked() {
        let p = RingParams::quadratic();
        assert!(GroupHom::new(p, IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn epsilon_witness_examples() {
        let w = epsilon_witness(&hom(&[&[1, 0], &[0, 0]]), &b("1/5"), &b("10")).unwrap();
        assert_eq!((w.exponent, &w.x, &w.image), (4, &q2(&[17, -12]), &q2(&[17, 0])));

        let w = epsilon_witness(&hom(&[&[0, 0], &[1, 0]]), &b("1"), &b("1")).unwrap();
        assert_eq!((w.exponent, &w.x, &w.image), (1, &q2(&[-1, 1]), &q2(&[0, -1])));

        // b-coefficients run 1, -2, 5, -12; |5| > 5 fails, so k = 4
        let w = epsilon_witness(&hom(&[&[0, 1], &[0, 0]]), &b("1/2"), &b("5")).unwrap();
        assert_eq!((w.exponent, &w.x, &w.image), (4, &q2(&[17, -12]), &q2(&[-12, 0])));
    }

    #[test]
    fn epsilon_witness_errors() {
        let id = GroupHom::identity(RingParams::quadratic());
        assert!(matches!(
            epsilon_witness(&id, &b("1"), &b("1")),
            Err(Error::ModuleHom(_))
        ));
        let t = hom(&[&[1, 0], &[0, 0]]);
        assert_eq!(
            epsilon_witness(&t, &b("0"), &b("1")),
            Err(Error::NonPositiveBound)
        );
    }

    #[test]
    fn functional_examples() {
        let p = RingParams::quadratic();
        let a = FinSeq::new(p, vec![q2(&[5, 1]), q2(&[2, 2])]).unwrap();
        assert_eq!(Functional::empty(p).eval(&a), Ok(RingElem::zero(p)));
        let f = Functional::new(p, vec![(0, GroupHom::identity(p))]).unwrap();
        assert_eq!(f.eval(&a), Ok(q2(&[5, 1])));
        let f = Functional::new(
            p,
            vec![
                (0, GroupHom::multiplication(&q2(&[0, 1]))),
                (2, GroupHom::identity(p)),
            ],
        )
        .unwrap();
        let a = FinSeq::new(p, vec![q2(&[1, 0]), q2(&[0, 0]), q2(&[3, 0])]).unwrap();
        assert_eq!(f.eval(&a), Ok(q2(&[3, 1])));
        assert!(Functional::new(p, vec![(1, GroupHom::identity(p)), (1, GroupHom::identity(p))])
            .is_err());
    }

    #[test]
    fn row_finite_examples() {
        let p = RingParams::quadratic();
        let a = FinSeq::new(p, vec![q2(&[1, 2]), q2(&[0, 0]), q2(&[-3, 1])]).unwrap();
        assert_eq!(RowFiniteMatrix::identity(p, 3).apply(&a), Ok(a.clone()));
        let shifted = RowFiniteMatrix::shift(p, 3).apply(&a).unwrap();
        assert_eq!(shifted, a.shift_embed(&RingElem::zero(p)).unwrap());

        let mut m = RowFiniteMatrix::new(p);
        m.insert(0, 2, GroupHom::multiplication(&q2(&[0, 1]))).unwrap();
        let a = FinSeq::new(p, vec![q2(&[0, 0]), q2(&[0, 0]), q2(&[1, 1])]).unwrap();
        let out = m.apply(&a).unwrap();
        assert_eq!(out.terms(), &[q2(&[2, 1])]);
    }

    fn instance(targets: &[&str], diag: &[&[i64]], prior: &GroupHom) -> WitnessInstance {
        let p = RingParams::quadratic();
        let stages = (0..targets.len())
            .map(|k| Stage {
                row: k,
                col: k,
                diagonal: hom(diag),
                priors: vec![prior.clone(); k],
            })
            .collect();
        WitnessInstance::new(p, stages, targets.iter().map(|t| b(t)).collect()).unwrap()
    }

    #[test]
    fn unboundedness_single_stage() {
        let p = RingParams::quadratic();
        let w = instance(&["10"], &[&[1, 0], &[0, 0]], &GroupHom::identity(p));
        let out = unboundedness_witness(&w).unwrap();
        assert_eq!(out.len(), 1);
        // |x| < 1 and |a_k| > 10 first happens at k = 4
        assert_eq!(out[0].x, q2(&[17, -12]));
    }

    #[test]
    fn unboundedness_two_stages() {
        let p = RingParams::quadratic();
        let w = instance(&["1", "3"], &[&[1, 0], &[0, 0]], &GroupHom::identity(p));
        let out = unboundedness_witness(&w).unwrap();
        assert_eq!(out[0].x, q2(&[3, -2]));
        assert_eq!(out[1].x, q2(&[-7, 5]));
        assert_eq!(out[1].row_sum, q2(&[-4, -2]));
    }

    #[test]
    fn unboundedness_empty() {
        let w = WitnessInstance::new(RingParams::quadratic(), vec![], vec![]).unwrap();
        assert!(unboundedness_witness(&w).unwrap().is_empty());
    }

    #[test]
    fn instance_validation() {
        let p = RingParams::quadratic();
        let bad = Stage {
            row: 0,
            col: 0,
            diagonal: GroupHom::identity(p),
            priors: vec![],
        };
        assert!(WitnessInstance::new(p, vec![bad], vec![b("1")]).is_err());
        let good = Stage {
            row: 0,
            col: 0,
            diagonal: hom(&[&[1, 0], &[0, 0]]),
            priors: vec![],
        };
        assert!(WitnessInstance::new(p, vec![good.clone()], vec![]).is_err());
        assert!(WitnessInstance::new(p, vec![good.clone()], vec![b("0")]).is_err());
        let second = Stage {
            row: 0,
            col: 1,
            diagonal: hom(&[&[1, 0], &[0, 0]]),
            priors: vec![GroupHom::identity(p)],
        };
        assert!(WitnessInstance::new(p, vec![good, second], vec![b("1"), b("2")]).is_err());
    }
}
