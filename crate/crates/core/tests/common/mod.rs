#![allow(dead_code)]

use ideal_lattice::{Monomial, MonomialOrder, Polynomial, RingContext};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(vars: &[&str], order: MonomialOrder) -> RingContext {
    RingContext::new(vars, order).unwrap()
}

pub fn p(r: &RingContext, s: &str) -> Polynomial {
    r.parse(s).unwrap()
}

/// Random polynomial with up to `max_terms` terms of total degree at most
/// `max_deg` and coefficients in `[-max_coeff, max_coeff]`.
pub fn random_poly(
    rng: &mut impl Rng,
    nvars: usize,
    order: MonomialOrder,
    max_deg: u32,
    max_coeff: i64,
    max_terms: usize,
) -> Polynomial {
    let n = rng.gen_range(1..=max_terms);
    let terms = (0..n).map(|_| {
        let mut left = rng.gen_range(0..=max_deg);
        let mut e = vec![0u32; nvars];
        for slot in e.iter_mut() {
            let k = rng.gen_range(0..=left);
            *slot = k;
            left -= k;
        }
        let c: i64 = rng.gen_range(-max_coeff..=max_coeff);
        (Monomial::new(e), BigInt::from(c))
    });
    Polynomial::from_terms(nvars, order, terms)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Gcd of all `k x k` minors (0 when every minor vanishes).
pub fn minor_gcd(m: &[Vec<i64>], k: usize) -> i128 {
    if k == 0 {
        return 1;
    }
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut g: i128 = 0;
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<i128>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect())
                .collect();
            g = g.gcd(&det(&sub));
            if g == 1 {
                return 1;
            }
        }
    }
    g
}

pub fn rank(m: &[Vec<i64>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    (1..=m.len().min(cols))
        .rev()
        .find(|&k| minor_gcd(m, k) != 0)
        .unwrap_or(0)
}

/// Smith invariants from determinantal divisors: `d_k = D_k / D_{k-1}`.
pub fn snf_oracle(m: &[Vec<i64>]) -> Vec<i128> {
    let r = rank(m);
    (1..=r)
        .map(|k| minor_gcd(m, k) / minor_gcd(m, k - 1))
        .collect()
}

/// `v` lies in the row lattice of `m` iff appending it changes neither the
/// rank nor the gcd of the maximal minors.
pub fn lattice_contains_oracle(m: &[Vec<i64>], v: &[i64]) -> bool {
    let r = rank(m);
    let mut ext = m.to_vec();
    ext.push(v.to_vec());
    if rank(&ext) != r {
        return false;
    }
    r == 0 || minor_gcd(&ext, r) == minor_gcd(m, r)
}

/// All exponent vectors with `e[i] < bounds[i]`.
pub fn box_monomials(bounds: &[u32]) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                (0..b).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// `x_var^d` plus random terms that are smaller than it in `order`, so the
/// pure power is the leading monomial.
pub fn monic_pure_power(
    rng: &mut impl Rng,
    nvars: usize,
    order: MonomialOrder,
    var: usize,
    d: u32,
    max_coeff: i64,
) -> Polynomial {
    let mut e = vec![0; nvars];
    e[var] = d;
    let lead = Monomial::new(e);
    let tail = random_poly(rng, nvars, order, d.saturating_sub(1).max(1), max_coeff, 3);
    let tail = Polynomial::from_terms(
        nvars,
        order,
        tail.terms()
            .iter()
            .filter(|(m, _)| order.cmp(m, &lead) == std::cmp::Ordering::Less)
            .cloned(),
    );
    &Polynomial::term(nvars, order, 1, lead) + &tail
}
