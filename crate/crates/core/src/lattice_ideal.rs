//! Lattice ideals `<x^{v+} - x^{v-} : v in L>`, lattice saturation through
//! the Smith normal form, and toric ideals.
//!
//! A lattice ideal is prime exactly when its lattice is saturated; prime
//! lattice ideals are the toric ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_limited, short_reduce, GroebnerBasis};
use crate::lattice::{IntegerLattice, IntegerMatrix};
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Nonzero invariant factors `d1 | d2 | ... | dr`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

/// Diagonalises `m` by unimodular row and column operations.
///
/// Returns the diagonal entries (pivot = smallest nonzero absolute value,
/// divisibility not yet enforced) and `w`, the inverse of the accumulated
/// column transform: `U * m = D * w`, so the first `rank` rows of `w` span
/// the saturation of the row lattice of `m`.
fn diagonalize(m: &IntegerMatrix) -> (Vec<BigInt>, IntegerMatrix) {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut w = IntegerMatrix::identity(cols);
    let mut diag = Vec::new();

    let swap_rows = |a: &mut IntegerMatrix, i: usize, k: usize| {
        for j in 0..a.ncols() {
            let t = a[(i, j)].clone();
            a[(i, j)] = a[(k, j)].clone();
            a[(k, j)] = t;
        }
    };
    // column swap on `a` is a row swap on `w`
    let swap_cols = |a: &mut IntegerMatrix, w: &mut IntegerMatrix, j: usize, k: usize| {
        for i in 0..a.nrows() {
            let t = a[(i, j)].clone();
            a[(i, j)] = a[(i, k)].clone();
            a[(i, k)] = t;
        }
        swap_rows(w, j, k);
    };

    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        swap_rows(&mut a, t, bi);
        swap_cols(&mut a, &mut w, t, bj);

        loop {
            let p = a[(t, t)].clone();
            for i in (t + 1)..rows {
                let q = a[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let d = &q * &a[(t, j)];
                        a[(i, j)] -= d;
                    }
                }
            }
            for j in (t + 1)..cols {
                let q = a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    for i in t..rows {
                        let d = &q * &a[(i, t)];
                        a[(i, j)] -= d;
                    }
                    // w <- (I + q E_tj) w
                    for c in 0..cols {
                        let d = &q * &w[(j, c)];
                        w[(t, c)] += d;
                    }
                }
            }
            // smallest remaining nonzero entry of the pivot row or column
            let mut next: Option<(usize, usize)> = None;
            let better = |i: usize, j: usize, next: &mut Option<(usize, usize)>| {
                if !a[(i, j)].is_zero()
                    && next.is_none_or(|(ni, nj)| a[(i, j)].abs() < a[(ni, nj)].abs())
                {
                    *next = Some((i, j));
                }
            };
            for i in (t + 1)..rows {
                better(i, t, &mut next);
            }
            for j in (t + 1)..cols {
                better(t, j, &mut next);
            }
            match next {
                None => break,
                Some((i, j)) if j == t => swap_rows(&mut a, t, i),
                Some((_, j)) => swap_cols(&mut a, &mut w, t, j),
            }
        }
        diag.push(a[(t, t)].abs());
    }
    (diag, w)
}

/// Enforces `d1 | d2 | ...` by replacing pairs with their gcd and lcm.
fn divisibility_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let (diag, _) = diagonalize(m);
    let invariant_factors = divisibility_chain(diag);
    SnfResult {
        rank: invariant_factors.len(),
        invariant_factors,
    }
}

/// `L = Sat(L)`: every invariant factor of the basis is 1.
pub fn is_saturated(l: &IntegerLattice) -> bool {
    smith_normal_form(l.basis())
        .invariant_factors
        .iter()
        .all(|d| d.is_one())
}

/// `(Q-span of L) ∩ Z^m`, read off the column transform of the Smith form.
pub fn saturate(l: &IntegerLattice) -> IntegerLattice {
    let (diag, w) = diagonalize(l.basis());
    let rows = (0..diag.len()).map(|i| w.row(i).to_vec()).collect();
    IntegerLattice::from_rows(l.ambient_dim(), rows).expect("consistent dimensions")
}

/// Index `[Sat(L) : L]`, the product of the invariant factors.
pub fn saturation_index(l: &IntegerLattice) -> BigInt {
    smith_normal_form(l.basis())
        .invariant_factors
        .iter()
        .product()
}

/// A lattice together with binomials generating its lattice ideal up to
/// saturation by the product of the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeIdealSpec {
    pub lattice: IntegerLattice,
    pub generators: Vec<Polynomial>,
}

/// `x^{v+} - x^{v-}` with `v+ = max(v, 0)`, `v- = max(-v, 0)`.
pub fn binomial(v: &[BigInt], ctx: &RingContext) -> Result<Polynomial> {
    if v.len() != ctx.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ctx.nvars(),
            found: v.len(),
        });
    }
    let mut plus = Vec::with_capacity(v.len());
    let mut minus = Vec::with_capacity(v.len());
    for x in v {
        let e = u32::try_from(x.abs())
            .ok()
            .filter(|&e| e <= crate::poly::MAX_EXPONENT)
            .ok_or_else(|| {
                Error::Precondition(format!("lattice entry {x} exceeds the exponent limit"))
            })?;
        if x.is_positive() {
            plus.push(e);
            minus.push(0);
        } else {
            plus.push(0);
            minus.push(e);
        }
    }
    Ok(&ctx.monomial(Monomial::new(plus)) - &ctx.monomial(Monomial::new(minus)))
}

/// One binomial per HNF basis row of `l`.
pub fn lattice_ideal_generators(l: &IntegerLattice, ctx: &RingContext) -> Result<LatticeIdealSpec> {
    if l.ambient_dim() != ctx.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ctx.nvars(),
            found: l.ambient_dim(),
        });
    }
    let generators = (0..l.rank())
        .map(|i| binomial(l.basis().row(i), ctx))
        .collect::<Result<_>>()?;
    Ok(LatticeIdealSpec {
        lattice: l.clone(),
        generators,
    })
}

/// Short reduced basis of `<gens> : (x1 ... xn)^inf` in `ctx`.
///
/// Adjoins `w` as a new first variable with `1 - w x1 ... xn`, eliminates it
/// under a block order and recomputes the result in the order of `ctx`.
pub fn saturate_by_variables(
    gens: &[Polynomial],
    ctx: &RingContext,
    max_steps: Option<usize>,
) -> Result<GroebnerBasis> {
    let n = ctx.nvars();
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(GroebnerBasis::zero_ideal(n, ctx.order()));
    }
    let mut names = vec![elimination_name(ctx)];
    names.extend(ctx.variables().iter().cloned());
    let big = RingContext::new(&names, MonomialOrder::Block { split: 1 })?;
    let up: Vec<usize> = (1..=n).collect();
    let mut lifted: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.remap(n + 1, big.order(), &up))
        .collect();
    lifted.push(&big.one() - &big.monomial(Monomial::new(vec![1; n + 1])));

    let elim = short_reduce(&buchberger_limited(&lifted, &big, max_steps)?)?;
    let mut down = vec![0usize];
    down.extend(0..n);
    let kept: Vec<Polynomial> = elim
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .map(|p| p.remap(n, ctx.order(), &down))
        .collect();
    if kept.is_empty() {
        return Ok(GroebnerBasis::zero_ideal(n, ctx.order()));
    }
    short_reduce(&buchberger_limited(&kept, ctx, max_steps)?)
}

fn elimination_name(ctx: &RingContext) -> String {
    let mut name = "w".to_string();
    while ctx.variables().contains(&name) {
        name.push('_');
    }
    name
}

/// Short reduced basis of the lattice ideal of `spec.lattice` itself.
pub fn lattice_ideal_basis(
    spec: &LatticeIdealSpec,
    ctx: &RingContext,
    max_steps: Option<usize>,
) -> Result<GroebnerBasis> {
    saturate_by_variables(&spec.generators, ctx, max_steps)
}

/// Short reduced basis of the toric ideal: the lattice ideal of the
/// saturation of `spec.lattice`, which is prime.
pub fn toric_generators(spec: &LatticeIdealSpec, ctx: &RingContext) -> Result<GroebnerBasis> {
    toric_generators_limited(spec, ctx, None)
}

pub fn toric_generators_limited(
    spec: &LatticeIdealSpec,
    ctx: &RingContext,
    max_steps: Option<usize>,
) -> Result<GroebnerBasis> {
    let sat = lattice_ideal_generators(&saturate(&spec.lattice), ctx)?;
    saturate_by_variables(&sat.generators, ctx, max_steps)
}
