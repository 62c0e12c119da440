use std::cmp::Ordering;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use boundseq::approx::find_small;
use boundseq::homcalc::{
    epsilon_witness, unboundedness_witness, witness_guarantee_proven, GroupHom, Stage,
    WitnessInstance,
};
use boundseq::json::{FinSeqJson, GroupHomJson, IntMatrixJson, ModuleMatrixJson, WitnessInstanceJson};
use boundseq::seqgroup::{build_witness, corner_witness, theta_los, IsoWitness, WitnessKind, WitnessReport};
use boundseq::snf::{self, EvidenceMethod};
use boundseq::{sample, RationalBound, RingElem, RingParams};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::report::{
    cokernel_json, cokernel_text, coeff_tuple, elem_json, matrix_json, seq_json, Report,
};
use crate::WitnessChoice;

pub const NOT_VERIFIED: &str = "A ≇ A ⊕ Z itself is not machine-verified: it is a statement about an \
uncountable group. This tool verifies the constructive ingredients and gathers evidence for the \
rank-parity obstruction on finite truncations.";

fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn params(degree: usize) -> Result<RingParams> {
    RingParams::new(degree).context("--degree")
}

fn rational(flag: &str, s: &str) -> Result<RationalBound> {
    s.parse::<RationalBound>()
        .with_context(|| format!("{flag} expects p/q, got `{s}`"))
}

fn load_hom(path: &Path) -> Result<GroupHom> {
    load::<GroupHomJson>(path)?
        .into_hom()
        .with_context(|| format!("in {}", path.display()))
}

pub fn small(degree: usize, epsilon: &str) -> Result<Report> {
    let p = params(degree)?;
    let eps = rational("--epsilon", epsilon)?;
    let (k, x) = find_small(p, &eps)?;
    let mut r = Report::new("small");
    r.param("degree", degree).param("epsilon", eps.to_string());
    r.line(format!("k = {k}"));
    r.line(format!("x = (2^(1/{degree}) - 1)^{k} = {x}, coeffs {}", coeff_tuple(&x)));
    let below = x.compare_abs(&eps)? == Ordering::Less;
    r.check("|x| < epsilon", below, json!({"k": k, "x": elem_json(&x)}));
    if k > 1 {
        let prev = boundseq::approx::small_element(p, k - 1);
        let minimal = prev.compare_abs(&eps)? != Ordering::Less;
        r.check("k is minimal", minimal, elem_json(&prev));
    }
    r.fact("0 < 2^(1/n) - 1 < 1, so its powers are nonzero and tend to 0");
    Ok(r)
}

pub fn module_check(theta: &Path) -> Result<Report> {
    let h = load_hom(theta)?;
    let mut r = Report::new("module-check");
    r.param("theta", theta.display().to_string());
    r.param("degree", h.params().degree());
    let module = h.is_module_hom();
    let commutator = h.root_commutator();
    r.line(format!(
        "θ is {}a module homomorphism",
        if module { "" } else { "not " }
    ));
    if let Some(x) = h.as_multiplier() {
        r.line(format!("θ is multiplication by {x}"));
    }
    if h.params().degree() == 2 {
        r.line(format!("θ(√2) - √2·θ(1) = {}", h.root_defect()));
    }
    r.check(
        "commutator with multiplication by the root computed",
        true,
        json!({
            "module_hom": module,
            "commutator": matrix_json(&commutator),
            "multiplier": h.as_multiplier().as_ref().map(elem_json),
        }),
    );
    r.fact("an additive map of the ring is module-linear iff it commutes with multiplication by 2^(1/n)");
    Ok(r)
}

pub fn witness_epsilon(theta: &Path, epsilon: &str, big_n: &str) -> Result<Report> {
    let h = load_hom(theta)?;
    let eps = rational("--epsilon", epsilon)?;
    let n = rational("--N", big_n)?;
    let w = epsilon_witness(&h, &eps, &n)?;
    let mut r = Report::new("witness-epsilon");
    r.param("theta", theta.display().to_string())
        .param("degree", h.params().degree())
        .param("epsilon", eps.to_string())
        .param("N", n.to_string());
    r.line(format!("k = {}", w.exponent));
    r.line(format!("x = {}, coeffs {}", w.x, coeff_tuple(&w.x)));
    r.line(format!("θ(x) = {}, coeffs {}", w.image, coeff_tuple(&w.image)));
    r.check(
        "|x| < epsilon",
        w.x.compare_abs(&eps)? == Ordering::Less,
        json!({"k": w.exponent, "x": elem_json(&w.x)}),
    );
    r.check(
        "|θ(x)| > N",
        w.image.compare_abs(&n)? == Ordering::Greater,
        elem_json(&w.image),
    );
    r.fact("x ranges over powers of 2^(1/n) - 1; for n = 2, θ(a + b√2) = (a + b√2)θ(1) + b(θ(√2) - √2θ(1)) with |b| → ∞");
    if !witness_guarantee_proven(h.params()) {
        r.note("termination for degree > 2 is not proven; the search ran best-effort under its iteration cap");
    }
    Ok(r)
}

/// `stages` stages with non-module diagonal maps and nonzero prior entries.
fn default_instance(p: RingParams, stages: usize) -> Result<WitnessInstance> {
    let n = p.degree();
    let mut projection = boundseq::IntMatrix::zeros(n, n);
    projection[(0, 0)] = 1.into();
    let diagonal = GroupHom::new(p, projection)?;
    let root = RingElem::root(p);
    let stages = (0..stages)
        .map(|k| Stage {
            row: 2 * k,
            col: 3 * k,
            diagonal: diagonal.clone(),
            priors: (0..k)
                .map(|l| GroupHom::multiplication(&root.pow(((k - l) % n) as u64)))
                .collect(),
        })
        .collect::<Vec<_>>();
    let targets = (1..=stages.len() as i64)
        .map(RationalBound::from_integer)
        .collect();
    Ok(WitnessInstance::new(p, stages, targets)?)
}

pub fn witness_unbounded(instance: Option<&Path>, stages: Option<usize>, degree: usize) -> Result<Report> {
    let (w, source) = match (instance, stages) {
        (Some(path), _) => (
            load::<WitnessInstanceJson>(path)?
                .into_instance()
                .with_context(|| format!("in {}", path.display()))?,
            path.display().to_string(),
        ),
        (None, Some(k)) => (default_instance(params(degree)?, k)?, format!("built-in, {k} stages")),
        (None, None) => bail!("either --instance or --stages is required"),
    };
    let out = unboundedness_witness(&w)?;
    let one = RationalBound::from_integer(1);
    let mut r = Report::new("witness-unbounded");
    r.param("instance", source).param("degree", w.params().degree());
    let mut rows = Vec::new();
    let mut bounded = true;
    let mut exceeds = true;
    for (s, t) in out.iter().zip(w.targets()) {
        r.line(format!(
            "stage row {} col {}: x = {} (k = {}), row sum {}",
            s.row, s.col, s.x, s.exponent, s.row_sum
        ));
        bounded &= s.x.compare_abs(&one)? == Ordering::Less;
        exceeds &= s.row_sum.compare_abs(t)? == Ordering::Greater;
        rows.push(json!({
            "row": s.row,
            "col": s.col,
            "k": s.exponent,
            "x": elem_json(&s.x),
            "prior_bound": s.prior_bound.to_string(),
            "row_sum": elem_json(&s.row_sum),
            "target": t.to_string(),
        }));
    }
    r.check("every |x| < 1", bounded, Value::Array(rows.clone()));
    r.check("every row sum exceeds its target", exceeds, json!(rows.len()));
    r.fact("a row-finite matrix with infinitely many non-module columns maps some bounded sequence to an unbounded one");
    if !witness_guarantee_proven(w.params()) {
        r.note("termination for degree > 2 is not proven; the search ran best-effort under its iteration cap");
    }
    Ok(r)
}

pub fn theta(a: &Path, b: &Path) -> Result<Report> {
    let a_seq = load::<FinSeqJson>(a)?
        .into_seq()
        .with_context(|| format!("in {}", a.display()))?;
    let b_seq = load::<FinSeqJson>(b)?
        .into_seq()
        .with_context(|| format!("in {}", b.display()))?;
    let out = theta_los(&a_seq, &b_seq)?;
    let mut r = Report::new("theta");
    r.param("a", a.display().to_string()).param("b", b.display().to_string());
    let text: Vec<String> = out.terms().iter().map(ToString::to_string).collect();
    r.line(format!("θ(b) = ({})", text.join(", ")));
    // the first index where the partial sums of b reach a constant tail
    let tail = b_seq.len();
    let agrees = (tail..a_seq.len()).all(|i| {
        let total = (0..tail).fold(RingElem::zero(a_seq.params()), |s, j| &s + &b_seq.term(j));
        out.term(i) == &total * &a_seq.term(i)
    });
    r.check("beyond the support of b every term is (Σ b)·a_i", agrees, seq_json(&out));
    r.fact("θ(b) = (b0 a0, (b0 + b1) a1, (b0 + b1 + b2) a2, ...) is additive in b");
    Ok(r)
}

fn trial_witness(w: &IsoWitness, trials: usize, seed: u64, r: &mut Report, label: &str) -> Result<()> {
    let p = w.params();
    let inv = w.invert();
    let mut rng = sample::seeded_rng(seed);
    let (mut round, mut back, mut additive) = (0, 0, 0);
    for _ in 0..trials {
        let e1 = sample::element(&mut rng, w.source(), p, 16, 1_000_000);
        let e2 = sample::element(&mut rng, w.source(), p, 16, 1_000_000);
        let img = w.apply(&e1)?;
        round += usize::from(inv.apply(&img)? == e1);
        let t = sample::element(&mut rng, w.target(), p, 16, 1_000_000);
        back += usize::from(w.apply(&inv.apply(&t)?)? == t);
        additive += usize::from(w.apply(&e1.try_add(&e2)?)? == img.try_add(&w.apply(&e2)?)?);
    }
    let data = |ok: usize| json!({"passed": ok, "trials": trials});
    r.check(&format!("{label}: inverse ∘ witness = id"), round == trials, data(round));
    r.check(&format!("{label}: witness ∘ inverse = id"), back == trials, data(back));
    r.check(&format!("{label}: additive"), additive == trials, data(additive));
    Ok(())
}

fn describe(r: &mut Report, report: &WitnessReport) {
    r.line(format!("{} ≅ {}", report.source, report.target));
    for (i, s) in report.steps.iter().enumerate() {
        r.line(format!("  {:>2}. {:<24} {} → {}", i + 1, s.step.to_string(), s.from, s.to));
    }
    let mut seen: Vec<&str> = Vec::new();
    for s in &report.steps {
        if !seen.contains(&s.fact) {
            seen.push(s.fact);
        }
    }
    for f in seen {
        if !r.facts.iter().any(|x| x == f) {
            r.fact(f);
        }
    }
}

pub fn iso_roundtrip(
    choice: WitnessChoice,
    n: usize,
    degree: usize,
    trials: usize,
    seed: u64,
) -> Result<Report> {
    let p = params(degree)?;
    let kind = match choice {
        WitnessChoice::Shift => WitnessKind::Shift,
        WitnessChoice::Interleave => WitnessKind::Interleave,
        WitnessChoice::Split => WitnessKind::Split,
        WitnessChoice::Absorb => WitnessKind::AbsorbFree,
        WitnessChoice::Corner => WitnessKind::Corner(n),
    };
    let w = build_witness(&kind, p)?;
    let mut r = Report::new("iso-roundtrip");
    r.param("witness", format!("{choice:?}").to_lowercase())
        .param("degree", degree)
        .param("trials", trials)
        .param("seed", seed);
    if choice == WitnessChoice::Corner {
        r.param("n", n);
    }
    describe(&mut r, &WitnessReport::of(&w));
    trial_witness(&w, trials, seed, &mut r, "witness")?;
    Ok(r)
}

pub fn corner_demo(degree: usize, n: Option<usize>, trials: usize, seed: u64) -> Result<Report> {
    let p = params(degree)?;
    let top = n.unwrap_or(degree);
    if top == 0 {
        bail!("--n must be at least 1");
    }
    let mut r = Report::new("corner-demo");
    r.param("degree", degree).param("n", top).param("trials", trials).param("seed", seed);
    r.line("B = A ⊕ Z");
    for copies in 1..=top {
        let (w, report) = corner_witness(p, copies)?;
        r.line(format!("-- {} copies of B --", copies + 1));
        describe(&mut r, &report);
        trial_witness(&w, trials, seed + copies as u64, &mut r, &format!("{} copies", copies + 1))?;
        let zero = boundseq::seqgroup::Element::zero(w.source(), p);
        r.check(
            &format!("{} copies: zero maps to zero", copies + 1),
            w.apply(&zero)?.is_zero(),
            Value::Null,
        );
        if report.residual_rank == 1 {
            r.line(format!("=> B^{} ≅ B", copies + 1));
        }
    }
    r.note(format!(
        "B^(m+1) ≇ B for 0 < m < {degree} follows from A ≇ A ⊕ Z^m, which is not machine-verified; only the isomorphisms above are"
    ));
    Ok(r)
}

fn load_matrix(path: &Path) -> Result<boundseq::IntMatrix> {
    load::<IntMatrixJson>(path)?
        .into_matrix()
        .with_context(|| format!("in {}", path.display()))
}

pub fn snf(file: &Path) -> Result<Report> {
    let m = load_matrix(file)?;
    let res = snf::smith_normal_form(&m);
    let mut r = Report::new("snf");
    r.param("file", file.display().to_string())
        .param("rows", m.rows())
        .param("cols", m.cols());
    let diag: Vec<String> = res.diagonal().iter().map(ToString::to_string).collect();
    r.line(format!("D = diag({})", diag.join(", ")));
    r.line(format!("rank = {}", res.rank()));
    r.check("U·M·V = D", &(&res.u * &m) * &res.v == res.d, json!({
        "U": matrix_json(&res.u),
        "V": matrix_json(&res.v),
        "D": matrix_json(&res.d),
    }));
    let det_u = res.u.determinant();
    let det_v = res.v.determinant();
    let unit = |d: &num_bigint::BigInt| d == &1.into() || d == &(-1).into();
    r.check(
        "det U, det V ∈ {±1}",
        unit(&det_u) && unit(&det_v),
        json!({"det_U": det_u.to_string(), "det_V": det_v.to_string()}),
    );
    let d = res.diagonal();
    let chain = d.windows(2).all(|w| {
        use num_traits::Zero;
        w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero())
    });
    r.check("divisibility chain", chain, json!(diag));
    Ok(r)
}

pub fn coker(file: &Path) -> Result<Report> {
    let m = load_matrix(file)?;
    let c = snf::cokernel(&m);
    let mut r = Report::new("coker");
    r.param("file", file.display().to_string())
        .param("rows", m.rows())
        .param("cols", m.cols());
    r.line(format!("coker ≅ {}", cokernel_text(&c)));
    let rank = snf::rank(&m);
    r.check("free_rank = rows - rank", c.free_rank == m.rows() - rank, cokernel_json(&c));
    Ok(r)
}

pub fn obstruction(file: &Path) -> Result<Report> {
    let m = load::<ModuleMatrixJson>(file)?
        .into_matrix()
        .with_context(|| format!("in {}", file.display()))?;
    let n = m.params().degree();
    let ob = snf::obstruction_check(&m);
    let mut r = Report::new("obstruction");
    r.param("file", file.display().to_string())
        .param("degree", n)
        .param("rows", m.rows())
        .param("cols", m.cols());
    r.line(format!("realized over Z: {}x{}", n * m.rows(), n * m.cols()));
    r.line(format!("rank = {}, coker ≅ {}", ob.rank, cokernel_text(&ob.cokernel)));
    r.check(
        &format!("rank and free rank ≡ 0 (mod {n})"),
        ob.parity_ok,
        json!({"rank": ob.rank, "cokernel": cokernel_json(&ob.cokernel)}),
    );
    r.fact("the cokernel of a module-linear map is a Z[2^(1/n)]-module, so ⊗Q it is a Q(2^(1/n))-vector space of Q-dimension divisible by n");
    Ok(r)
}

pub fn theorem_demo(degree: usize, trunc: usize, extra: usize, seed: u64, samples: usize) -> Result<Report> {
    let p = params(degree)?;
    let demo = snf::theorem_demo(p, trunc, extra, seed, samples)?;
    let n = degree;
    let mut r = Report::new("theorem-demo");
    r.param("degree", n)
        .param("trunc", trunc)
        .param("extra", extra)
        .param("seed", seed)
        .param("samples", samples);
    let zm = if extra == 1 { "Z".to_string() } else { format!("Z^{extra}") };
    r.line(format!(
        "Suppose A ≅ A ⊕ {zm} via a monomorphism β with A/β(A) ≅ {zm}, and β is module-linear on A[{trunc}] (sequences vanishing in the first {trunc} places)."
    ));
    r.line(format!(
        "Then A/β(A[{trunc}]) ≅ Z^({n}·{trunc} + {extra}) = Z^{}: required free rank {}.",
        demo.required_rank, demo.required_rank
    ));
    r.check(
        &format!("required rank {} ≢ 0 (mod {n})", demo.required_rank),
        !demo.required_rank_is_module_rank(),
        json!({"required_rank": demo.required_rank}),
    );

    match (&demo.group_truncation, &demo.group_cokernel, &demo.shift_cokernel) {
        (Some(g), Some(gc), Some(sc)) => {
            r.line(format!(
                "(i) group-level truncation: {}x{} integer matrix with cokernel {}",
                g.rows(),
                g.cols(),
                cokernel_text(gc)
            ));
            r.check(
                "(i) group-level truncation attains the required rank",
                gc.free_rank == demo.required_rank,
                json!({"matrix": matrix_json(g), "cokernel": cokernel_json(gc)}),
            );
            r.line(format!(
                "    truncated shift embedding ({}x{trunc} over the ring): cokernel {}",
                trunc + 1,
                cokernel_text(sc)
            ));
            r.check(
                &format!("truncated shift embedding has cokernel free rank {n} (A ≅ A ⊕ Z^{n} side)"),
                sc.free_rank == n,
                cokernel_json(sc),
            );
        }
        _ => {
            r.line("(i) degenerate truncation k = 0: no truncation rows");
        }
    }

    for e in &demo.evidence {
        let label = match &e.method {
            EvidenceMethod::Exhaustive => format!(
                "(ii) exhaustive: all {} module matrices {}x{} with coefficients in {{-1, 0, 1}}",
                e.checked, e.shape.0, e.shape.1
            ),
            EvidenceMethod::Random { seed, bound } => format!(
                "(ii) randomized: {} module matrices with {} rows, ≤ {} columns, |coeff| ≤ {bound}, seed {seed}",
                e.checked, e.shape.0, e.shape.1
            ),
        };
        r.line(format!(
            "{label}: {} parity violations, {} reaching rank {}",
            e.violations, e.hits_required_rank, demo.required_rank
        ));
        r.check(
            &format!("{label}: cokernel free rank always ≡ 0 (mod {n})"),
            e.violations == 0 && e.hits_required_rank == 0,
            json!({
                "checked": e.checked,
                "violations": e.violations,
                "hits_required_rank": e.hits_required_rank,
            }),
        );
    }
    if !demo.evidence.is_empty() {
        r.note("part (ii) is evidence on finite samples, not a proof");
    }
    r.line(format!(
        "(iii) Conclusion: a module-linear truncation has cokernel rank ≡ 0 (mod {n}) but the hypothetical β needs rank {}, so A ≇ A ⊕ {zm} while A ≅ A ⊕ Z^{n}.",
        demo.required_rank
    ));
    r.fact("A ≅ A ⊕ Z^n via (a, (c0..c_{n-1})) ↦ (Σ c_i 2^(i/n), a0, a1, ...)");
    r.fact("every endomorphism of A is a row-finite matrix of additive maps of the ring, module-linear in all but finitely many columns");
    r.fact("(A/β(A[k])) ⊗ Q is a Q(2^(1/n))-vector space, so its Q-dimension is divisible by n");
    r.note(NOT_VERIFIED);
    Ok(r)
}
