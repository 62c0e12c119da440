//! Smith normal form over the integers, cokernel structure, and the
//! rank-parity obstruction for module-linear maps.
//!
//! A matrix over `Z[2^(1/n)]` becomes an integer matrix by replacing every
//! entry with its regular representation. The image of such a map is a
//! `Q(2^(1/n))`-subspace after tensoring with `Q`, so its rank, and the
//! free rank of its cokernel, are multiples of `n`. A group-level map whose
//! cokernel has free rank `n·k + m` with `0 < m < n` therefore cannot be
//! module-linear.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::ring::{RingElem, RingParams};
use crate::sample;

/// `D = U · M · V` with `U`, `V` unimodular and `D` in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d_1 | d_2 | ...`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Position of the nonzero entry of least absolute value in the submatrix
/// starting at `(t, t)`; ties go to the smallest row, then column.
fn pivot_position(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = &d[(i, j)];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = m.shape();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = pivot_position(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let pivot = d[(t, t)].clone();
            for i in t + 1..rows {
                let q = &d[(i, t)] / &pivot;
                if !q.is_zero() {
                    d.add_row_multiple(i, t, &-&q);
                    u.add_row_multiple(i, t, &-&q);
                }
            }
            for j in t + 1..cols {
                let q = &d[(t, j)] / &pivot;
                if !q.is_zero() {
                    d.add_col_multiple(j, t, &-&q);
                    v.add_col_multiple(j, t, &-&q);
                }
            }
            let col_left = (t + 1..rows).any(|i| !d[(i, t)].is_zero());
            let row_left = (t + 1..cols).any(|j| !d[(t, j)].is_zero());
            if col_left || row_left {
                // a remainder smaller than the pivot survived; make it the pivot
                let (pi, pj) = pivot_position(&d, t).expect("nonzero entries remain");
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&d[(i, j)] % &pivot).is_zero())
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, v, d }
}

/// `Z^rows / image(M)` as `Z^free_rank ⊕ ⊕ Z/d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelStructure {
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl CokernelStructure {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

pub fn cokernel(m: &IntMatrix) -> CokernelStructure {
    let snf = smith_normal_form(m);
    cokernel_from_snf(&snf)
}

fn cokernel_from_snf(snf: &SnfResult) -> CokernelStructure {
    let diag = snf.diagonal();
    let torsion = diag
        .iter()
        .filter(|x| !x.is_zero() && !x.is_one())
        .cloned()
        .collect();
    CokernelStructure {
        torsion,
        free_rank: snf.d.rows() - snf.rank(),
    }
}

pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

/// Rectangular matrix over `Z[2^(1/n)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMatrix {
    params: RingParams,
    rows: usize,
    cols: usize,
    entries: Vec<RingElem>,
}

impl ModuleMatrix {
    pub fn new(params: RingParams, rows: Vec<Vec<RingElem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::RaggedMatrix {
                    row: i,
                    expected: ncols,
                    found: row.len(),
                });
            }
            for e in row {
                if e.params() != params {
                    return Err(Error::DegreeMismatch {
                        left: params.degree(),
                        right: e.degree(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(ModuleMatrix {
            params,
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn zeros(params: RingParams, rows: usize, cols: usize) -> Self {
        ModuleMatrix {
            params,
            rows,
            cols,
            entries: vec![RingElem::zero(params); rows * cols],
        }
    }

    pub fn identity(params: RingParams, size: usize) -> Self {
        let mut m = Self::zeros(params, size, size);
        for i in 0..size {
            m.entries[i * size + i] = RingElem::one(params);
        }
        m
    }

    /// `(k+1) x k` matrix sending `(a_0, ..., a_{k-1})` to `(0, a_0, ..., a_{k-1})`:
    /// the truncation of the shift embedding `A → A` whose cokernel is one
    /// ring coordinate.
    pub fn shift_embedding(params: RingParams, k: usize) -> Self {
        let mut m = Self::zeros(params, k + 1, k);
        for i in 0..k {
            m.entries[(i + 1) * k + i] = RingElem::one(params);
        }
        m
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: RingElem) {
        assert_eq!(x.params(), self.params);
        self.entries[i * self.cols + j] = x;
    }

    pub fn to_rows(&self) -> Vec<Vec<RingElem>> {
        (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn checked_mul(&self, other: &ModuleMatrix) -> Result<ModuleMatrix> {
        if self.params != other.params {
            return Err(Error::DegreeMismatch {
                left: self.params.degree(),
                right: other.params.degree(),
            });
        }
        if self.cols != other.rows {
            return Err(Error::MatrixShape {
                rows: other.rows,
                cols: other.cols,
                expected_rows: self.cols,
                expected_cols: other.cols,
            });
        }
        let mut out = Self::zeros(self.params, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RingElem::zero(self.params);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// The `(n·rows) x (n·cols)` integer matrix with each entry replaced by
    /// its regular representation.
    pub fn realize_over_z(&self) -> IntMatrix {
        let n = self.params.degree();
        let mut out = IntMatrix::zeros(n * self.rows, n * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set_block(i * n, j * n, &self.get(i, j).regular_rep());
            }
        }
        out
    }

    /// Injective over the ring iff the realization has full column rank.
    pub fn is_injective(&self) -> bool {
        rank(&self.realize_over_z()) == self.params.degree() * self.cols
    }
}

pub fn realize_over_z(m: &ModuleMatrix) -> IntMatrix {
    m.realize_over_z()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub cokernel: CokernelStructure,
    pub rank: usize,
    /// `rank ≡ 0` and `free_rank ≡ 0 (mod n)`.
    pub parity_ok: bool,
}

pub fn obstruction_check(m: &ModuleMatrix) -> Obstruction {
    let n = m.params().degree();
    let snf = smith_normal_form(&m.realize_over_z());
    let cokernel = cokernel_from_snf(&snf);
    let rank = snf.rank();
    let parity_ok = rank.is_multiple_of(n) && cokernel.free_rank.is_multiple_of(n);
    Obstruction {
        cokernel,
        rank,
        parity_ok,
    }
}

/// Module matrices checked in a [`TheoremDemo`], and how many of them broke
/// the parity rule (expected: none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityEvidence {
    pub method: EvidenceMethod,
    /// Rows and largest column count of the matrices checked.
    pub shape: (usize, usize),
    pub checked: usize,
    pub violations: usize,
    /// Number of sampled maps whose cokernel had exactly the required rank.
    pub hits_required_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvidenceMethod {
    /// Every matrix with coefficients in `{-1, 0, 1}`.
    Exhaustive,
    /// Seeded random matrices with coefficients in `[-bound, bound]`.
    Random { seed: u64, bound: i64 },
}

/// Desk-scale account of why no truncated module-linear map can have a
/// cokernel of free rank `n·k + m`, `0 < m < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremDemo {
    pub degree: usize,
    pub trunc: usize,
    pub extra: usize,
    /// `n·k + m`.
    pub required_rank: usize,
    /// Group-level truncation realizing the required cokernel rank; `None`
    /// for `k = 0`.
    pub group_truncation: Option<IntMatrix>,
    pub group_cokernel: Option<CokernelStructure>,
    /// Truncated shift embedding `(k+1) x k`: cokernel free rank `n`.
    pub shift_cokernel: Option<CokernelStructure>,
    pub evidence: Vec<ParityEvidence>,
}

impl TheoremDemo {
    pub fn required_rank_is_module_rank(&self) -> bool {
        self.required_rank.is_multiple_of(self.degree)
    }

    pub fn all_evidence_consistent(&self) -> bool {
        self.evidence
            .iter()
            .all(|e| e.violations == 0 && e.hits_required_rank == 0)
    }
}

const EXHAUSTIVE_LIMIT: u64 = 20_000;

/// Builds the rank comparison for degree `n`, truncation `k` and extra free
/// rank `m` (`0 < m < n`).
pub fn theorem_demo(
    params: RingParams,
    trunc: usize,
    extra: usize,
    seed: u64,
    samples: usize,
) -> Result<TheoremDemo> {
    let n = params.degree();
    if extra == 0 || extra >= n {
        return Err(Error::InvalidParameter(format!(
            "extra free rank must satisfy 0 < m < {n}, got {extra}"
        )));
    }
    let required_rank = n * trunc + extra;
    if trunc == 0 {
        return Ok(TheoremDemo {
            degree: n,
            trunc,
            extra,
            required_rank,
            group_truncation: None,
            group_cokernel: None,
            shift_cokernel: None,
            evidence: Vec::new(),
        });
    }

    // Source: one ring coordinate of A[k] (index k). Target: coordinates
    // 0..=k of A plus the m extra Z summands.
    let rows = n * (trunc + 1) + extra;
    let mut group = IntMatrix::zeros(rows, n);
    group.set_block(n * trunc, 0, &IntMatrix::identity(n));
    let group_cokernel = cokernel(&group);

    let shift = ModuleMatrix::shift_embedding(params, trunc);
    let shift_cokernel = cokernel(&shift.realize_over_z());

    let mut evidence = Vec::new();
    let shape = (trunc + 1, 1);
    let coeff_count = n * (trunc + 1);
    if 3u64.checked_pow(coeff_count as u32).is_some_and(|c| c <= EXHAUSTIVE_LIMIT) {
        evidence.push(exhaustive_parity(params, shape, required_rank));
    }
    evidence.push(random_parity(params, trunc, required_rank, seed, samples));

    Ok(TheoremDemo {
        degree: n,
        trunc,
        extra,
        required_rank,
        group_truncation: Some(group),
        group_cokernel: Some(group_cokernel),
        shift_cokernel: Some(shift_cokernel),
        evidence,
    })
}

fn tally(
    method: EvidenceMethod,
    shape: (usize, usize),
    required_rank: usize,
    matrices: impl Iterator<Item = ModuleMatrix>,
) -> ParityEvidence {
    let mut checked = 0;
    let mut violations = 0;
    let mut hits = 0;
    for m in matrices {
        let ob = obstruction_check(&m);
        checked += 1;
        if !ob.parity_ok {
            violations += 1;
        }
        if ob.cokernel.free_rank == required_rank {
            hits += 1;
        }
    }
    ParityEvidence {
        method,
        shape,
        checked,
        violations,
        hits_required_rank: hits,
    }
}

fn exhaustive_parity(
    params: RingParams,
    shape: (usize, usize),
    required_rank: usize,
) -> ParityEvidence {
    let n = params.degree();
    let (r, c) = shape;
    let count = n * r * c;
    let total = 3usize.pow(count as u32);
    let matrices = (0..total).map(move |mut code| {
        let mut coeffs = Vec::with_capacity(count);
        for _ in 0..count {
            coeffs.push(BigInt::from((code % 3) as i64 - 1));
            code /= 3;
        }
        let mut it = coeffs.chunks(n);
        let rows = (0..r)
            .map(|_| {
                (0..c)
                    .map(|_| RingElem::new(params, it.next().unwrap().to_vec()).unwrap())
                    .collect()
            })
            .collect();
        ModuleMatrix::new(params, rows).unwrap()
    });
    tally(EvidenceMethod::Exhaustive, shape, required_rank, matrices)
}

fn random_parity(
    params: RingParams,
    trunc: usize,
    required_rank: usize,
    seed: u64,
    samples: usize,
) -> ParityEvidence {
    const BOUND: i64 = 5;
    let mut rng = sample::seeded_rng(seed);
    let rows = trunc + 1;
    let matrices: Vec<ModuleMatrix> = (0..samples)
        .map(|_| {
            let cols = rng.gen_range(1..=rows);
            sample::module_matrix(&mut rng, params, rows, cols, BOUND)
        })
        .collect();
    tally(
        EvidenceMethod::Random { seed, bound: BOUND },
        (rows, rows),
        required_rank,
        matrices.into_iter(),
    )
}
