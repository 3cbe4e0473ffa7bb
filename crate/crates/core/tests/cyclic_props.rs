mod common;

use common::{random_poly, rng};
use ideal_lattice::cyclic::{
    cyclic_violation, is_multivariate_cyclic, to_tensor_coordinates, CoeffTensor, TensorShape,
};
use ideal_lattice::lattice::embed_ideal;
use ideal_lattice::{GroebnerBasis, IntegerLattice, MonomialOrder, QuotientStructure, RingContext};
use num_bigint::BigInt;
use rand::Rng;

fn shapes() -> Vec<(RingContext, TensorShape)> {
    vec![
        (
            common::ring(&["x"], MonomialOrder::Grevlex),
            TensorShape::new(vec![3]).unwrap(),
        ),
        (
            common::ring(&["x", "y"], MonomialOrder::Grevlex),
            TensorShape::new(vec![2, 2]).unwrap(),
        ),
        (
            common::ring(&["x1", "x2", "x3"], MonomialOrder::Lex),
            TensorShape::new(vec![2, 2, 3]).unwrap(),
        ),
        (
            common::ring(&["a", "b"], MonomialOrder::Lex),
            TensorShape::new(vec![4, 1]).unwrap(),
        ),
    ]
}

fn random_tensor(r: &mut impl Rng, shape: &TensorShape) -> CoeffTensor {
    let e = (0..shape.size())
        .map(|_| BigInt::from(r.gen_range(-50..=50)))
        .collect();
    CoeffTensor::from_flat(shape.clone(), e).unwrap()
}

#[test]
fn shift_matches_multiplication() {
    let mut r = rng(41);
    for (ctx, shape) in shapes() {
        let g = GroebnerBasis::compute(&shape.cyclic_generators(&ctx).unwrap(), &ctx).unwrap();
        for _ in 0..60 {
            let f = random_poly(&mut r, ctx.nvars(), ctx.order(), 6, 30, 6);
            let nf = g.normal_form(&f);
            let t = CoeffTensor::from_polynomial(&nf, &shape).unwrap();
            assert_eq!(t, CoeffTensor::from_polynomial_reduced(&f, &shape).unwrap());
            assert_eq!(g.normal_form(&t.to_polynomial(ctx.order())), nf);
            for i in 0..shape.order() {
                let xf = g.normal_form(&(&f * &ctx.var(i)));
                assert_eq!(
                    CoeffTensor::from_polynomial(&xf, &shape).unwrap(),
                    t.cyclic_shift(i).unwrap()
                );
            }
        }
    }
}

#[test]
fn shifts_commute_have_order_r_and_are_linear() {
    let mut r = rng(42);
    for (_, shape) in shapes() {
        for _ in 0..40 {
            let a = random_tensor(&mut r, &shape);
            let b = random_tensor(&mut r, &shape);
            for i in 0..shape.order() {
                let mut t = a.clone();
                for _ in 0..shape.radices()[i] {
                    t = t.cyclic_shift(i).unwrap();
                }
                assert_eq!(t, a);
                for j in 0..shape.order() {
                    let ij = a.cyclic_shift(i).unwrap().cyclic_shift(j).unwrap();
                    let ji = a.cyclic_shift(j).unwrap().cyclic_shift(i).unwrap();
                    assert_eq!(ij, ji);
                }
                let sum: Vec<BigInt> = a
                    .flat()
                    .iter()
                    .zip(b.flat())
                    .map(|(x, y)| x * 3 - y)
                    .collect();
                let lhs = CoeffTensor::from_flat(shape.clone(), sum)
                    .unwrap()
                    .cyclic_shift(i)
                    .unwrap();
                let rhs: Vec<BigInt> = a
                    .cyclic_shift(i)
                    .unwrap()
                    .flat()
                    .iter()
                    .zip(b.cyclic_shift(i).unwrap().flat())
                    .map(|(x, y)| x * 3 - y)
                    .collect();
                assert_eq!(lhs.flat(), &rhs[..]);
            }
        }
    }
}

#[test]
fn univariate_ideals_are_cyclic() {
    let mut r = rng(43);
    let ctx = common::ring(&["x"], MonomialOrder::Lex);
    for n in 1..=6usize {
        let shape = TensorShape::new(vec![n]).unwrap();
        let g = GroebnerBasis::compute(&shape.cyclic_generators(&ctx).unwrap(), &ctx).unwrap();
        let q = QuotientStructure::new(&g).unwrap();
        for _ in 0..10 {
            let k = r.gen_range(1..=2);
            let ideal: Vec<_> = (0..k)
                .map(|_| random_poly(&mut r, 1, ctx.order(), 5, 6, 4))
                .collect();
            let l =
                to_tensor_coordinates(&embed_ideal(&ideal, &g, &q).unwrap(), &q, &shape).unwrap();
            assert!(is_multivariate_cyclic(&l, &shape).unwrap());
        }
    }
}

#[test]
fn non_cyclic_lattice_has_witness() {
    let shape = TensorShape::new(vec![2, 3]).unwrap();
    let mut v = vec![BigInt::from(0); 6];
    v[0] = 1.into();
    let l = IntegerLattice::from_rows(6, vec![v]).unwrap();
    let w = cyclic_violation(&l, &shape).unwrap().unwrap();
    assert_eq!((w.row, w.axis), (0, 0));
    let full = IntegerLattice::full(6);
    assert!(is_multivariate_cyclic(&full, &shape).unwrap());
    // span of the all-ones tensor is cyclic
    let ones = IntegerLattice::from_rows(6, vec![vec![BigInt::from(1); 6]]).unwrap();
    assert!(is_multivariate_cyclic(&ones, &shape).unwrap());
}
