use boundseq::sample;
use boundseq::snf::{cokernel, obstruction_check, smith_normal_form, ModuleMatrix};
use boundseq::{IntMatrix, RingParams};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Fraction-free (Bareiss) row elimination; returns the rank.
fn bareiss_rank(m: &IntMatrix) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = m.shape();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
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

#[test]
fn snf_contract_fuzz() {
    let mut rng = sample::seeded_rng(7);
    for case in 0..500 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let mut m = sample::int_matrix(&mut rng, rows, cols, 100);
        if case % 5 == 0 && rows > 1 {
            // force rank deficiency
            for j in 0..cols {
                m[(rows - 1, j)] = &m[(0, j)] * 3;
            }
        }
        let r = smith_normal_form(&m);
        assert_eq!(&(&r.u * &m) * &r.v, r.d, "case {case}");
        assert!(r.u.determinant().abs().is_one(), "case {case}");
        assert!(r.v.determinant().abs().is_one(), "case {case}");
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    assert!(r.d[(i, j)].is_zero(), "case {case}: off-diagonal entry");
                }
            }
        }
        let diag = r.diagonal();
        assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            assert!(
                w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])),
                "case {case}: chain {diag:?}"
            );
        }
        assert_eq!(r.rank(), bareiss_rank(&m), "case {case}");
    }
}

#[test]
fn snf_is_deterministic() {
    let mut rng = sample::seeded_rng(3);
    let m = sample::int_matrix(&mut rng, 6, 5, 50);
    assert_eq!(smith_normal_form(&m), smith_normal_form(&m));
}

#[test]
fn module_matrix_ranks_are_multiples_of_degree() {
    let mut rng = sample::seeded_rng(11);
    for degree in 2..=4 {
        let p = RingParams::new(degree).unwrap();
        for _ in 0..200 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let mut m = sample::module_matrix(&mut rng, p, rows, cols, 6);
            if rng.gen_bool(0.3) && rows > 1 {
                // dependent row over the ring
                let f = sample::ring_elem(&mut rng, p, 3);
                for j in 0..cols {
                    let v = &f * m.get(0, j);
                    m.set(rows - 1, j, v);
                }
            }
            let real = m.realize_over_z();
            assert_eq!(bareiss_rank(&real) % degree, 0);
            let ob = obstruction_check(&m);
            assert!(ob.parity_ok);
            assert_eq!(ob.cokernel.free_rank % degree, 0);
        }
    }
}

#[test]
fn injective_module_matrices_have_cokernel_rank_multiple_of_degree() {
    let mut rng = sample::seeded_rng(12);
    for degree in 2..=4 {
        let p = RingParams::new(degree).unwrap();
        let mut seen = 0;
        while seen < 200 {
            let cols = rng.gen_range(1..=3);
            let rows = rng.gen_range(cols + 1..=cols + 3);
            let m = sample::module_matrix(&mut rng, p, rows, cols, 6);
            if !m.is_injective() {
                continue;
            }
            seen += 1;
            let ob = obstruction_check(&m);
            assert_eq!(ob.cokernel.free_rank % degree, 0);
            assert_eq!(ob.cokernel.free_rank, degree * (rows - cols));
        }
    }
}

#[test]
fn realize_is_multiplicative() {
    let mut rng = sample::seeded_rng(5);
    for degree in 2..=4 {
        let p = RingParams::new(degree).unwrap();
        for _ in 0..50 {
            let (a, b, c) = (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3));
            let x = sample::module_matrix(&mut rng, p, a, b, 9);
            let y = sample::module_matrix(&mut rng, p, b, c, 9);
            let xy = x.checked_mul(&y).unwrap();
            assert_eq!(xy.realize_over_z(), &x.realize_over_z() * &y.realize_over_z());
        }
    }
}

#[test]
fn cokernel_torsion_matches_determinant() {
    let mut rng = sample::seeded_rng(9);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let m = sample::int_matrix(&mut rng, n, n, 20);
        let det = m.determinant().abs();
        let c = cokernel(&m);
        if det.is_zero() {
            assert!(c.free_rank > 0);
        } else {
            assert_eq!(c.free_rank, 0);
            let prod = c.torsion.iter().fold(BigInt::one(), |acc, d| acc * d);
            assert_eq!(prod, det);
        }
    }
}

#[test]
fn truncated_shift_has_cokernel_of_one_ring_coordinate() {
    for degree in 2..=5 {
        let p = RingParams::new(degree).unwrap();
        let m = ModuleMatrix::shift_embedding(p, 4);
        let c = cokernel(&m.realize_over_z());
        assert_eq!(c.free_rank, degree);
        assert!(c.torsion.is_empty());
    }
}
