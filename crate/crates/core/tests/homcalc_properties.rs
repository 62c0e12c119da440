use std::cmp::Ordering;

use boundseq::homcalc::{epsilon_witness, Functional, GroupHom, RowFiniteMatrix};
use boundseq::seqgroup::FinSeq;
use boundseq::{sample, RationalBound, RingElem, RingParams};
use rand::Rng;

#[test]
fn module_homs_are_exactly_multiplications() {
    let mut rng = sample::seeded_rng(21);
    for degree in 2..=4 {
        let p = RingParams::new(degree).unwrap();
        for _ in 0..500 {
            // forward: multiplication maps are module-linear
            let x = sample::ring_elem(&mut rng, p, 30);
            let h = GroupHom::multiplication(&x);
            assert!(h.is_module_hom());
            assert_eq!(h.as_multiplier(), Some(x.clone()));

            // backward: a module-linear map equals multiplication by its value at 1
            let g = if rng.gen_bool(0.5) {
                sample::group_hom(&mut rng, p, 2)
            } else {
                GroupHom::multiplication(&sample::ring_elem(&mut rng, p, 5))
            };
            let at_one = g.apply(&RingElem::one(p)).unwrap();
            assert_eq!(g.is_module_hom(), g == GroupHom::multiplication(&at_one));
            if degree == 2 {
                assert_eq!(g.is_module_hom(), g.root_defect().is_zero());
            }
        }
    }
}

#[test]
fn epsilon_witness_terminates_quickly_for_quadratic() {
    let mut rng = sample::seeded_rng(22);
    let p = RingParams::quadratic();
    let eps = RationalBound::from_integer(1);
    let mut max_k = 0;
    for _ in 0..100 {
        let theta = sample::non_module_hom(&mut rng, p, 50);
        for big_n in [10i64, 1_000, 1_000_000] {
            let n = RationalBound::from_integer(big_n);
            let w = epsilon_witness(&theta, &eps, &n).unwrap();
            assert_eq!(w.x.compare_abs(&eps), Ok(Ordering::Less));
            assert_eq!(w.image.compare_abs(&n), Ok(Ordering::Greater));
            assert_eq!(theta.apply(&w.x).unwrap(), w.image);
            max_k = max_k.max(w.exponent);
        }
    }
    assert!(max_k <= 200, "largest exponent {max_k}");
}

#[test]
fn epsilon_witness_best_effort_in_higher_degree() {
    let mut rng = sample::seeded_rng(23);
    for degree in 3..=4 {
        let p = RingParams::new(degree).unwrap();
        for _ in 0..20 {
            let theta = sample::non_module_hom(&mut rng, p, 10);
            let w = epsilon_witness(&theta, &"1/2".parse().unwrap(), &"100".parse().unwrap())
                .unwrap();
            assert!(w.exponent <= 200);
        }
    }
}

#[test]
fn functionals_are_additive() {
    let mut rng = sample::seeded_rng(24);
    for degree in 2..=3 {
        let p = RingParams::new(degree).unwrap();
        for _ in 0..100 {
            let count = rng.gen_range(0..5);
            let mut idx: Vec<usize> = (0..count).map(|_| rng.gen_range(0..12)).collect();
            idx.sort_unstable();
            idx.dedup();
            let entries = idx
                .into_iter()
                .map(|i| (i, sample::group_hom(&mut rng, p, 9)))
                .collect();
            let f = Functional::new(p, entries).unwrap();
            let a = sample::finseq(&mut rng, p, 10, 1000);
            let b = sample::finseq(&mut rng, p, 10, 1000);
            let lhs = f.eval(&a.try_add(&b).unwrap()).unwrap();
            let rhs = &f.eval(&a).unwrap() + &f.eval(&b).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

fn random_row_finite(rng: &mut impl Rng, p: RingParams, size: usize) -> RowFiniteMatrix {
    let mut m = RowFiniteMatrix::new(p);
    for _ in 0..rng.gen_range(0..2 * size) {
        let (i, j) = (rng.gen_range(0..size), rng.gen_range(0..size));
        m.insert(i, j, sample::group_hom(rng, p, 5)).unwrap();
    }
    m
}

#[test]
fn row_finite_composition_matches_sequential_application() {
    let mut rng = sample::seeded_rng(25);
    let p = RingParams::quadratic();
    for _ in 0..100 {
        let b = random_row_finite(&mut rng, p, 6);
        let c = random_row_finite(&mut rng, p, 6);
        let a = sample::finseq(&mut rng, p, 6, 100);
        let composed = b.compose(&c).unwrap().apply(&a).unwrap();
        let sequential = b.apply(&c.apply(&a).unwrap()).unwrap();
        assert_eq!(composed, sequential);
    }
}

#[test]
fn row_finite_application_is_additive() {
    let mut rng = sample::seeded_rng(26);
    let p = RingParams::new(3).unwrap();
    for _ in 0..50 {
        let b = random_row_finite(&mut rng, p, 5);
        let x = sample::finseq(&mut rng, p, 5, 100);
        let y = sample::finseq(&mut rng, p, 5, 100);
        let lhs = b.apply(&x.try_add(&y).unwrap()).unwrap();
        let rhs = b.apply(&x).unwrap().try_add(&b.apply(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(b.apply(&FinSeq::zero(p)).unwrap(), FinSeq::zero(p));
    }
}
