use std::cmp::Ordering;

use boundseq::approx::{find_small, small_element};
use boundseq::homcalc::{epsilon_witness, unboundedness_witness, GroupHom, Stage, WitnessInstance};
use boundseq::seqgroup::{build_witness, corner_witness, theta_los, FinSeq, WitnessKind};
use boundseq::snf::{self, ModuleMatrix};
use boundseq::{sample, IntMatrix, RationalBound, RingElem, RingParams};
use num_traits::Zero;
use serde_json::json;

use crate::report::Report;

fn p(n: usize) -> RingParams {
    RingParams::new(n).expect("degree >= 2")
}

fn ring_axioms(seed: u64) -> (bool, usize) {
    let mut rng = sample::seeded_rng(seed);
    let mut count = 0;
    let mut ok = true;
    for n in 2..=5 {
        for _ in 0..200 {
            let a = sample::ring_elem(&mut rng, p(n), 1000);
            let b = sample::ring_elem(&mut rng, p(n), 1000);
            let c = sample::ring_elem(&mut rng, p(n), 1000);
            ok &= &(&a * &b) * &c == &a * &(&b * &c);
            ok &= &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
            ok &= &a * &b == &b * &a;
            ok &= (&a * &b).norm() == a.norm() * b.norm();
            count += 1;
        }
    }
    (ok, count)
}

fn small_elements() -> bool {
    let mut ok = true;
    for n in 2..=5 {
        for den in [3i64, 10, 1000] {
            let eps = format!("1/{den}").parse::<RationalBound>().expect("positive");
            let Ok((k, x)) = find_small(p(n), &eps) else {
                return false;
            };
            ok &= x.compare_abs(&eps) == Ok(Ordering::Less);
            ok &= k == 1 || small_element(p(n), k - 1).compare_abs(&eps) != Ok(Ordering::Less);
        }
    }
    ok
}

fn module_detection(seed: u64) -> bool {
    let mut rng = sample::seeded_rng(seed);
    (2..=5).all(|n| {
        (0..100).all(|_| {
            let x = sample::ring_elem(&mut rng, p(n), 50);
            let m = GroupHom::multiplication(&x);
            let h = sample::non_module_hom(&mut rng, p(n), 5);
            m.is_module_hom() && m.as_multiplier() == Some(x) && !h.is_module_hom()
        })
    })
}

fn epsilon_witnesses(seed: u64) -> bool {
    let mut rng = sample::seeded_rng(seed);
    let eps = "1/100".parse::<RationalBound>().expect("positive");
    (0..100).all(|i| {
        let h = sample::non_module_hom(&mut rng, p(2), 10);
        let big = RationalBound::from_integer([10, 1000, 1_000_000][i % 3]);
        match epsilon_witness(&h, &eps, &big) {
            Ok(w) => {
                w.exponent <= 200
                    && w.x.compare_abs(&eps) == Ok(Ordering::Less)
                    && w.image.compare_abs(&big) == Ok(Ordering::Greater)
            }
            Err(_) => false,
        }
    })
}

fn unbounded(seed: u64) -> bool {
    let mut rng = sample::seeded_rng(seed);
    let params = p(2);
    let stages: Vec<Stage> = (0..10)
        .map(|k| Stage {
            row: k,
            col: k,
            diagonal: sample::non_module_hom(&mut rng, params, 5),
            priors: (0..k).map(|_| sample::group_hom(&mut rng, params, 5)).collect(),
        })
        .collect();
    let targets = (1..=10).map(RationalBound::from_integer).collect();
    let Ok(w) = WitnessInstance::new(params, stages, targets) else {
        return false;
    };
    let one = RationalBound::from_integer(1);
    match unboundedness_witness(&w) {
        Ok(out) => out.iter().zip(w.targets()).all(|(s, t)| {
            s.x.compare_abs(&one) == Ok(Ordering::Less)
                && s.row_sum.compare_abs(t) == Ok(Ordering::Greater)
        }),
        Err(_) => false,
    }
}

fn witnesses(seed: u64) -> (bool, usize) {
    let mut rng = sample::seeded_rng(seed);
    let mut count = 0;
    let mut ok = true;
    for n in 2..=4 {
        let mut kinds = vec![
            WitnessKind::Shift,
            WitnessKind::Interleave,
            WitnessKind::Split,
            WitnessKind::AbsorbFree,
        ];
        kinds.extend((1..=n).map(WitnessKind::Corner));
        for kind in kinds {
            let Ok(w) = build_witness(&kind, p(n)) else {
                return (false, count);
            };
            let inv = w.invert();
            for _ in 0..20 {
                let e = sample::element(&mut rng, w.source(), p(n), 16, 1_000_000);
                let f = sample::element(&mut rng, w.source(), p(n), 16, 1_000_000);
                let (Ok(we), Ok(wf)) = (w.apply(&e), w.apply(&f)) else {
                    return (false, count);
                };
                ok &= inv.apply(&we).as_ref() == Ok(&e);
                let sum = e.try_add(&f).and_then(|s| w.apply(&s));
                ok &= sum.ok() == we.try_add(&wf).ok();
                count += 1;
            }
        }
        for copies in 1..=n {
            let Ok((_, report)) = corner_witness(p(n), copies) else {
                return (false, count);
            };
            ok &= report.residual_rank == (copies + 1) % n;
        }
    }
    (ok, count)
}

fn theta(seed: u64) -> bool {
    let mut rng = sample::seeded_rng(seed);
    (0..50).all(|_| {
        let a = sample::finseq(&mut rng, p(2), 16, 1000);
        (0..=8).all(|k| match theta_los(&a, &FinSeq::unit(p(2), k)) {
            Ok(t) => (0..a.len().max(k + 1)).all(|i| {
                if i < k {
                    t.term(i).is_zero()
                } else {
                    t.term(i) == a.term(i)
                }
            }),
            Err(_) => false,
        })
    })
}

fn snf_fuzz(seed: u64) -> (bool, usize) {
    let mut rng = sample::seeded_rng(seed);
    let mut ok = true;
    for i in 0..200 {
        let rows = 1 + i % 6;
        let cols = 1 + (i / 6) % 6;
        let m = sample::int_matrix(&mut rng, rows, cols, 20);
        let s = snf::smith_normal_form(&m);
        ok &= &(&s.u * &m) * &s.v == s.d;
        let unit = |d: num_bigint::BigInt| d == 1.into() || d == (-1).into();
        ok &= unit(s.u.determinant()) && unit(s.v.determinant());
        let d = s.diagonal();
        ok &= d
            .windows(2)
            .all(|w| w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
    }
    (ok, 200)
}

fn parity(seed: u64) -> bool {
    let mut rng = sample::seeded_rng(seed);
    (2..=4).all(|n| {
        let shift = ModuleMatrix::shift_embedding(p(n), 3);
        let shift_ok = snf::cokernel(&shift.realize_over_z()).free_rank == n;
        shift_ok
            && (0..50).all(|i| {
                let m = sample::module_matrix(&mut rng, p(n), 1 + i % 4, 1 + (i / 4) % 3, 3);
                snf::obstruction_check(&m).parity_ok
            })
    })
}

fn theorem(seed: u64) -> bool {
    (1..=3).all(|k| {
        snf::theorem_demo(p(2), k, 1, seed, 50).is_ok_and(|d| {
            d.required_rank == 2 * k + 1
                && !d.required_rank_is_module_rank()
                && d.all_evidence_consistent()
                && d.group_cokernel.is_some_and(|c| c.free_rank == d.required_rank)
        })
    })
}

fn matrix_sanity() -> bool {
    let m = IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]);
    m.determinant() == (-8).into() && RingElem::root(p(2)).pow(2) == RingElem::from_integer(p(2), 2.into())
}

pub fn run(seed: u64) -> Report {
    let mut r = Report::new("selftest");
    r.param("seed", seed);
    let (ok, n) = ring_axioms(seed);
    r.check("ring axioms and norm multiplicativity (n = 2..5)", ok, json!({"samples": n}));
    r.check("integer matrix basics", matrix_sanity(), json!(null));
    r.check("small elements below 1/3, 1/10, 1/1000 are minimal", small_elements(), json!(null));
    r.check("module-linearity detection", module_detection(seed), json!({"per_degree": 100}));
    r.check("ε-witnesses for 100 non-module maps, k ≤ 200", epsilon_witnesses(seed), json!(null));
    r.check("10-stage unbounded witness", unbounded(seed), json!(null));
    let (ok, n) = witnesses(seed);
    r.check("isomorphism witnesses invert and are additive", ok, json!({"trials": n}));
    r.check("θ(a, e_k) agrees with a from k on", theta(seed), json!({"sequences": 50}));
    let (ok, n) = snf_fuzz(seed);
    r.check("Smith normal form certificates", ok, json!({"matrices": n}));
    r.check("module cokernel ranks are divisible by n", parity(seed), json!(null));
    r.check("required truncation rank 2k + 1 is odd", theorem(seed), json!(null));
    r
}
