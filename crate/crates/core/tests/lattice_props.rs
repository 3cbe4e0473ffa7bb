mod common;

use common::{big, lattice_contains_oracle, random_matrix, random_poly, rng};
use ideal_lattice::lattice::{embed_ideal, hnf};
use ideal_lattice::quotient::phi_vector;
use ideal_lattice::{
    GroebnerBasis, IntegerLattice, IntegerMatrix, MonomialOrder, QuotientStructure,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

fn to_matrix(rows: &[Vec<i64>]) -> IntegerMatrix {
    let cols = rows[0].len();
    IntegerMatrix::from_rows(cols, rows.iter().map(|r| big(r)).collect()).unwrap()
}

fn random_unimodular(r: &mut impl Rng, n: usize) -> IntegerMatrix {
    let mut u = IntegerMatrix::identity(n);
    for _ in 0..3 * n {
        let i = r.gen_range(0..n);
        let j = r.gen_range(0..n);
        match r.gen_range(0..3) {
            0 if i != j => {
                let c = BigInt::from(r.gen_range(-3..=3));
                for k in 0..n {
                    let add = &u[(j, k)] * &c;
                    u[(i, k)] += add;
                }
            }
            1 => {
                for k in 0..n {
                    u[(i, k)] = -&u[(i, k)];
                }
            }
            _ => {
                for k in 0..n {
                    let t = u[(i, k)].clone();
                    u[(i, k)] = u[(j, k)].clone();
                    u[(j, k)] = t;
                }
            }
        }
    }
    u
}

fn assert_hnf_shape(h: &IntegerMatrix) {
    let mut last: Option<usize> = None;
    for i in 0..h.nrows() {
        let p = (0..h.ncols())
            .find(|&j| !h[(i, j)].is_zero())
            .expect("no zero rows");
        assert!(last.is_none_or(|l| p > l));
        assert!(h[(i, p)].is_positive());
        for k in 0..i {
            assert!(!h[(k, p)].is_negative() && h[(k, p)] < h[(i, p)]);
        }
        last = Some(p);
    }
}

#[test]
fn hnf_is_canonical_under_unimodular_transforms() {
    let mut r = rng(31);
    for _ in 0..200 {
        let rows = r.gen_range(1..=4);
        let cols = r.gen_range(1..=4);
        let m = to_matrix(&random_matrix(&mut r, rows, cols, 9));
        let h = hnf(&m);
        assert_hnf_shape(&h);
        let u = random_unimodular(&mut r, rows);
        assert_eq!(hnf(&u.mul(&m).unwrap()), h);
        assert_eq!(hnf(&h), h);
    }
}

#[test]
fn generating_set_independence() {
    let mut r = rng(32);
    for _ in 0..200 {
        let rows = r.gen_range(1..=3);
        let cols = r.gen_range(1..=4);
        let m = random_matrix(&mut r, rows, cols, 9);
        let l = IntegerLattice::from_generators(&to_matrix(&m));
        let mut more = m.clone();
        let c: Vec<i64> = m.iter().map(|_| r.gen_range(-4..=4)).collect();
        let combo: Vec<i64> = (0..cols)
            .map(|j| m.iter().zip(&c).map(|(row, k)| row[j] * k).sum())
            .collect();
        more.push(combo);
        more.push(vec![0; cols]);
        more.reverse();
        let l2 = IntegerLattice::from_generators(&to_matrix(&more));
        assert_eq!(l, l2);
        assert!(l.is_sublattice_of(&l2).unwrap() && l2.is_sublattice_of(&l).unwrap());
        for row in &m {
            assert!(l.contains(&big(row)).unwrap());
        }
    }
}

#[test]
fn membership_matches_minor_oracle_on_grid() {
    let mut r = rng(33);
    for _ in 0..40 {
        let rows = r.gen_range(1..=3);
        let m = random_matrix(&mut r, rows, 3, 20);
        let l = IntegerLattice::from_generators(&to_matrix(&m));
        for _ in 0..200 {
            let v: Vec<i64> = if r.gen_bool(0.5) {
                (0..3).map(|_| r.gen_range(-20..=20)).collect()
            } else {
                let c: Vec<i64> = m.iter().map(|_| r.gen_range(-2..=2)).collect();
                (0..3)
                    .map(|j| m.iter().zip(&c).map(|(row, k)| row[j] * k).sum())
                    .collect()
            };
            assert_eq!(
                l.contains(&big(&v)).unwrap(),
                lattice_contains_oracle(&m, &v),
                "{m:?} {v:?}"
            );
        }
    }
}

#[test]
fn determinant_matches_oracle() {
    let mut r = rng(34);
    for _ in 0..200 {
        let n = r.gen_range(1..=4);
        let m = random_matrix(&mut r, n, n, 9);
        let l = IntegerLattice::from_generators(&to_matrix(&m));
        let d = common::det(
            &m.iter()
                .map(|row| row.iter().map(|&x| x as i128).collect())
                .collect::<Vec<_>>(),
        );
        if d == 0 {
            assert!(!l.is_full_rank());
            assert!(l.det().is_err());
        } else {
            assert_eq!(l.det().unwrap(), BigInt::from(d.abs()));
        }
    }
}

#[test]
fn embedded_ideals_are_closed_under_multiplication() {
    let mut r = rng(35);
    let ctx = common::ring(&["x", "y"], MonomialOrder::Grevlex);
    let bases = [
        vec!["x^2 - 2", "y^2 - 3"],
        vec!["x^3 + x + 1", "y - x^2"],
        vec!["x^2 - 1", "y^2 - 1"],
    ];
    for gens in bases {
        let gens: Vec<_> = gens.iter().map(|s| common::p(&ctx, s)).collect();
        let g = GroebnerBasis::compute(&gens, &ctx).unwrap();
        let q = QuotientStructure::new(&g).unwrap();
        for _ in 0..15 {
            let ideal: Vec<_> = (0..r.gen_range(1..=2))
                .map(|_| random_poly(&mut r, 2, ctx.order(), 3, 5, 3))
                .collect();
            let l = embed_ideal(&ideal, &g, &q).unwrap();
            for f in &ideal {
                assert!(l.contains(&phi_vector(f, &q, &g).unwrap()).unwrap());
            }
            for i in 0..l.rank() {
                let f = q.phi_inverse(l.basis().row(i)).unwrap();
                for v in 0..2 {
                    let xf = &f * &ctx.var(v);
                    assert!(l.contains(&phi_vector(&xf, &q, &g).unwrap()).unwrap());
                }
            }
            let unit = embed_ideal(&[ctx.one()], &g, &q).unwrap();
            assert!(unit.is_full_rank() && unit.det().unwrap().is_one());
        }
    }
}
