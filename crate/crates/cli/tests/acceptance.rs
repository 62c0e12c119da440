//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use boundseq::homcalc::{epsilon_witness, unboundedness_witness, Stage, WitnessInstance};
use boundseq::seqgroup::{build_witness, theta_los, FinSeq, WitnessKind};
use boundseq::snf::{obstruction_check, smith_normal_form, ModuleMatrix};
use boundseq::{sample, IntMatrix, RationalBound, RingElem, RingParams};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(n: usize) -> RingParams {
    RingParams::new(n).unwrap()
}

fn q(s: &str) -> RationalBound {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_boundseq"))
}

fn run(args: &[&str]) -> Result<(i32, String), String> {
    let out = bin().args(args).output().map_err(|e| e.to_string())?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    ))
}

fn ring_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = sample::seeded_rng(1);
    for n in 2..=5 {
        for i in 0..1000 {
            let a = sample::ring_elem(&mut rng, p(n), 1_000_000);
            let b = sample::ring_elem(&mut rng, p(n), 1_000_000);
            let ab = &a * &b;
            ensure(ab.norm() == a.norm() * b.norm(), || format!("norm, n={n} pair {i}"))?;
            ensure(ab.regular_rep() == &a.regular_rep() * &b.regular_rep(), || {
                format!("rep of product, n={n} pair {i}")
            })?;
            ensure((&a + &b).regular_rep() == &a.regular_rep() + &b.regular_rep(), || {
                format!("rep of sum, n={n} pair {i}")
            })?;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("4000 pairs in {t:.2?}"))
}

fn epsilon_witness_suite() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let theta = dir.path().join("t.json");
    std::fs::write(&theta, r#"{"degree": 2, "matrix": [["1","0"],["0","0"]]}"#)
        .map_err(|e| e.to_string())?;
    let (code, out) = run(&[
        "witness-epsilon",
        "--theta",
        theta.to_str().unwrap(),
        "--epsilon",
        "1/5",
        "--N",
        "10",
    ])?;
    ensure(code == 0, || format!("exit {code}"))?;
    ensure(out.contains("k = 4") && out.contains("coeffs (17, -12)"), || out.clone())?;

    let mut rng = sample::seeded_rng(2);
    let eps = q("1/10");
    let mut worst = 0;
    for i in 0..100 {
        let h = sample::non_module_hom(&mut rng, p(2), 50);
        let big = RationalBound::from_integer([10i64, 1000, 1_000_000][i % 3]);
        let w = epsilon_witness(&h, &eps, &big).map_err(|e| format!("hom {i}: {e}"))?;
        ensure(w.exponent <= 200, || format!("hom {i}: k = {}", w.exponent))?;
        ensure(w.x.compare_abs(&eps) == Ok(Ordering::Less), || format!("hom {i}: |x|"))?;
        ensure(w.image.compare_abs(&big) == Ok(Ordering::Greater), || {
            format!("hom {i}: |θ(x)|")
        })?;
        worst = worst.max(w.exponent);
    }
    Ok(format!("17 - 12√2 at k = 4; 100 random maps, max k = {worst}"))
}

fn unbounded_construction() -> Outcome {
    let mut rng = sample::seeded_rng(3);
    let params = p(2);
    let stages: Vec<Stage> = (0..10)
        .map(|k| Stage {
            row: 2 * k + 1,
            col: k,
            diagonal: sample::non_module_hom(&mut rng, params, 20),
            priors: (0..k).map(|_| sample::group_hom(&mut rng, params, 20)).collect(),
        })
        .collect();
    let targets = (1..=10).map(RationalBound::from_integer).collect();
    let w = WitnessInstance::new(params, stages, targets).map_err(|e| e.to_string())?;
    let out = unboundedness_witness(&w).map_err(|e| e.to_string())?;
    ensure(out.len() == 10, || format!("{} stages", out.len()))?;
    let one = RationalBound::from_integer(1);
    for (k, (s, t)) in out.iter().zip(w.targets()).enumerate() {
        ensure(s.x.compare_abs(&one) == Ok(Ordering::Less), || format!("stage {k}: |x| >= 1"))?;
        // recompute the row sum from the instance
        let st = &w.stages()[k];
        let mut sum = st.diagonal.apply(&s.x).unwrap();
        for (l, h) in st.priors.iter().enumerate() {
            sum = &sum + &h.apply(&out[l].x).unwrap();
        }
        ensure(sum == s.row_sum, || format!("stage {k}: row sum mismatch"))?;
        ensure(sum.compare_abs(t) == Ok(Ordering::Greater), || format!("stage {k}: below target"))?;
    }
    let (code, _) = run(&["witness-unbounded", "--stages", "10"])?;
    ensure(code == 0, || format!("built-in instance exit {code}"))?;
    Ok("10 stages, |x| < 1 and row sums above 1..10".into())
}

fn bareiss_rank(m: &IntMatrix) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = m.shape();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][j] * &a[rank][c] - &a[r][c] * &a[rank][j];
                a[r][j] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

fn snf_fuzz() -> Outcome {
    let start = Instant::now();
    let mut rng = sample::seeded_rng(4);
    for case in 0..500 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let mut m = sample::int_matrix(&mut rng, rows, cols, 100);
        if case % 4 == 0 && rows > 1 {
            for j in 0..cols {
                m[(rows - 1, j)] = &m[(0, j)] * -2;
            }
        }
        let r = smith_normal_form(&m);
        ensure(&(&r.u * &m) * &r.v == r.d, || format!("case {case}: UMV != D"))?;
        ensure(
            r.u.determinant().abs().is_one() && r.v.determinant().abs().is_one(),
            || format!("case {case}: non-unimodular"),
        )?;
        let d = r.diagonal();
        ensure(
            d.windows(2)
                .all(|w| w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero())),
            || format!("case {case}: chain {d:?}"),
        )?;
        ensure(r.rank() == bareiss_rank(&m), || format!("case {case}: rank"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(30), || format!("took {t:?}"))?;
    Ok(format!("500 matrices in {t:.2?}, rank oracle agrees on all"))
}

fn obstruction_suite() -> Outcome {
    let mut rng = sample::seeded_rng(5);
    for n in 2..=4 {
        let mut seen = 0;
        while seen < 200 {
            let cols = rng.gen_range(1..=3);
            let rows = rng.gen_range(cols..=cols + 3);
            let m = sample::module_matrix(&mut rng, p(n), rows, cols, 6);
            if !m.is_injective() {
                continue;
            }
            seen += 1;
            let ob = obstruction_check(&m);
            ensure(ob.cokernel.free_rank.is_multiple_of(n), || {
                format!("n={n}: free rank {}", ob.cokernel.free_rank)
            })?;
        }
        for k in 1..=4 {
            let shift = ModuleMatrix::shift_embedding(p(n), k);
            let c = boundseq::snf::cokernel(&shift.realize_over_z());
            ensure(c.free_rank == n && c.torsion.is_empty(), || {
                format!("n={n} k={k}: shift cokernel {c:?}")
            })?;
        }
    }
    for k in 1..=3 {
        let ks = k.to_string();
        let (code, out) = run(&["--json", "theorem-demo", "--degree", "2", "--trunc", &ks])?;
        ensure(code == 0, || format!("theorem-demo k={k} exit {code}"))?;
        let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let rank = v["checks"]
            .as_array()
            .and_then(|c| c.iter().find_map(|c| c["data"]["required_rank"].as_u64()));
        ensure(rank == Some(2 * k + 1), || format!("k={k}: required rank {rank:?}"))?;
    }
    Ok("600 injective module maps; shift cokernel Z^n; required ranks 3, 5, 7".into())
}

fn iso_witnesses() -> Outcome {
    let mut rng = sample::seeded_rng(6);
    let mut cases = Vec::new();
    for n in [2, 3] {
        cases.push((n, WitnessKind::Shift));
        cases.push((n, WitnessKind::Interleave));
        cases.push((n, WitnessKind::Split));
        cases.extend((1..=3).map(|c| (n, WitnessKind::Corner(c))));
    }
    for (n, kind) in &cases {
        let w = build_witness(kind, p(*n)).map_err(|e| e.to_string())?;
        let inv = w.invert();
        for t in 0..100 {
            let e = sample::element(&mut rng, w.source(), p(*n), 16, 1_000_000);
            let f = sample::element(&mut rng, w.source(), p(*n), 16, 1_000_000);
            let we = w.apply(&e).unwrap();
            ensure(inv.apply(&we).unwrap() == e, || format!("{kind:?} n={n} trial {t}: round trip"))?;
            let g = sample::element(&mut rng, w.target(), p(*n), 16, 1_000_000);
            ensure(w.apply(&inv.apply(&g).unwrap()).unwrap() == g, || {
                format!("{kind:?} n={n} trial {t}: inverse round trip")
            })?;
            let lhs = w.apply(&e.try_add(&f).unwrap()).unwrap();
            let rhs = we.try_add(&w.apply(&f).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("{kind:?} n={n} trial {t}: additivity"))?;
        }
    }
    Ok(format!("{} witnesses x 100 elements", cases.len()))
}

fn theta_zero() -> Outcome {
    let mut rng = sample::seeded_rng(7);
    for i in 0..50 {
        let len = rng.gen_range(1..=16);
        let terms = (0..len).map(|_| sample::ring_elem(&mut rng, p(2), 1_000_000)).collect();
        let a = FinSeq::new(p(2), terms).unwrap();
        for k in 0..=8 {
            let t = theta_los(&a, &FinSeq::unit(p(2), k)).unwrap();
            for j in k..a.len().max(k) + 2 {
                ensure(t.term(j) == a.term(j), || format!("a #{i}, k={k}, index {j}"))?;
            }
            ensure((0..k).all(|j| t.term(j) == RingElem::zero(p(2))), || {
                format!("a #{i}, k={k}: nonzero head")
            })?;
        }
    }
    Ok("50 sequences x k = 0..8".into())
}

fn not_verified_statement() -> Outcome {
    let readme = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../README.md");
    let text = std::fs::read_to_string(&readme).map_err(|e| format!("README: {e}"))?;
    let phrase = "not machine-verified";
    ensure(text.contains("A ≇ A ⊕ Z") && text.contains(phrase), || {
        "README lacks the statement".into()
    })?;
    let (code, out) = run(&["theorem-demo", "--degree", "2", "--trunc", "1"])?;
    ensure(code == 0, || format!("exit {code}"))?;
    ensure(out.contains("A ≇ A ⊕ Z itself is not machine-verified"), || {
        "theorem-demo output lacks the statement".into()
    })?;
    Ok("README and theorem-demo".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 ring suite", ring_suite),
        ("2 epsilon witness", epsilon_witness_suite),
        ("3 unbounded construction", unbounded_construction),
        ("4 SNF contract fuzz", snf_fuzz),
        ("5 obstruction suite", obstruction_suite),
        ("6 isomorphism witnesses", iso_witnesses),
        ("7 theta agrees with a from k on", theta_zero),
        ("8 not machine-verified statement", not_verified_statement),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
