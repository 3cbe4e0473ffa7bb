//! Strong Gröbner bases of ideals in `Z[x1..xn]`.
//!
//! Reduction over the integers divides coefficients with the least
//! non-negative remainder: a term `c*m` is reducible by `g` when `lm(g)`
//! divides `m` and the quotient of `c = q*lc(g) + r` (`0 <= r < |lc(g)|`)
//! is nonzero. Closing a basis under both S-polynomials and G-polynomials
//! (the Bézout combination of two leading coefficients) yields a strong
//! basis, whose normal forms are unique.

use std::collections::BTreeSet;

use log::debug;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingContext};

/// Properties certified for a [`GroebnerBasis`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BasisFlags {
    pub strong: bool,
    pub reduced: bool,
    pub short_reduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    nvars: usize,
    order: MonomialOrder,
    flags: BasisFlags,
}

/// The ideal of `Z` generated by the leading coefficients of the basis
/// elements whose leading monomial divides a given monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingCoeffIdeal {
    pub monomial: Monomial,
    pub divisor_indices: BTreeSet<usize>,
    /// Non-negative generator; 0 stands for the zero ideal.
    pub generator: BigInt,
}

impl LeadingCoeffIdeal {
    /// The coset ring `Z / I` is trivial.
    pub fn is_unit(&self) -> bool {
        self.generator.is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generator.is_zero()
    }
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn flags(&self) -> BasisFlags {
        self.flags
    }

    /// Reduces `f` to its normal form modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self)
    }

    /// Ideal membership; exact only for strong bases.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// The basis of the zero ideal.
    pub fn zero_ideal(nvars: usize, order: MonomialOrder) -> GroebnerBasis {
        GroebnerBasis {
            elements: Vec::new(),
            nvars,
            order,
            flags: BasisFlags {
                strong: true,
                reduced: true,
                short_reduced: true,
            },
        }
    }

    /// Computes a strong basis of `gens` and short-reduces it.
    pub fn compute(gens: &[Polynomial], ctx: &RingContext) -> Result<GroebnerBasis> {
        short_reduce(&buchberger(gens, ctx)?)
    }
}

/// Least non-negative remainder division: `c = q*d + r`, `0 <= r < |d|`.
pub fn euclid_div(c: &BigInt, d: &BigInt) -> (BigInt, BigInt) {
    let r = c.mod_floor(&d.abs());
    let q = (c - &r) / d;
    (q, r)
}

/// Extended gcd with a pinned Bézout pair.
///
/// Returns `(g, u, v)` with `u*a + v*b = g = gcd(a, b) > 0`, where `u` is
/// the representative of its class modulo `m = |b/g|` lying in
/// `(-m/2, m/2]` (and `u = 0` when `m = 1`).
pub fn bezout(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    let g = e.gcd;
    debug_assert!(g.is_positive());
    let m = (b / &g).abs();
    let mut u = e.x.mod_floor(&m);
    if &u * 2 > m {
        u -= &m;
    }
    let v = (&g - &u * a) / b;
    (g, u, v)
}

/// Reduces `f` by an arbitrary list of divisors.
pub fn reduce_by(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = divisors.iter().collect();
    reduce_refs(f, &refs)
}

fn reduce_refs(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let n = f.nvars();
    let order = f.order();
    let mut p = f.clone();
    let mut rem = Vec::new();
    'outer: while !p.is_zero() {
        let (m, c) = {
            let (m, c) = p.leading_term().expect("nonzero");
            (m.clone(), c.clone())
        };
        for g in divisors {
            let Some(shift) = g.lm().quotient_of(&m) else {
                continue;
            };
            let (q, _) = euclid_div(&c, g.lc());
            if !q.is_zero() {
                p = p.add_scaled(&-q, &shift, g);
                continue 'outer;
            }
        }
        rem.push((m, c));
        p = p.tail();
    }
    Polynomial::from_terms(n, order, rem)
}

/// Normal form of `f` modulo `basis`; unique when the basis is strong.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    if basis.is_empty() {
        return f.clone();
    }
    reduce_by(&f.with_order(basis.order), &basis.elements)
}

fn lcm_shifts(f: &Polynomial, g: &Polynomial) -> (Monomial, Monomial) {
    let l = f.lm().lcm(g.lm());
    (
        f.lm().quotient_of(&l).expect("lcm"),
        g.lm().quotient_of(&l).expect("lcm"),
    )
}

/// `(l/lc f)(L/lm f) f - (l/lc g)(L/lm g) g` with `L`, `l` the monomial and
/// coefficient lcms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (sf, sg) = lcm_shifts(f, g);
    let l = f.lc().lcm(g.lc());
    let a = &l / f.lc();
    let b = &l / g.lc();
    Ok(f.mul_term(&a, &sf).add_scaled(&-b, &sg, g))
}

/// `u (L/lm f) f + v (L/lm g) g` for the pinned Bézout pair of the leading
/// coefficients; its leading term is `gcd(lc f, lc g) * L`.
pub fn g_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (sf, sg) = lcm_shifts(f, g);
    let (_, u, v) = bezout(f.lc(), g.lc());
    Ok(f.mul_term(&u, &sf).add_scaled(&v, &sg, g))
}

/// Working state of the completion: every polynomial ever added, which of
/// them are still live, and the pending pairs `(i, j, lcm)` with `i < j`.
#[derive(Default)]
struct PairState {
    basis: Vec<Polynomial>,
    live: Vec<bool>,
    pairs: Vec<(usize, usize, Monomial)>,
}

impl PairState {
    /// Reduces `h` by the live elements and, if nonzero, adds it. Live
    /// elements whose leading term becomes divisible by the new one are
    /// retired and their reductions added in turn.
    fn add(&mut self, h: Polynomial) {
        let mut queue = vec![h];
        while let Some(h) = queue.pop() {
            let h = {
                let live: Vec<&Polynomial> = self.live_elements().collect();
                reduce_refs(&h, &live)
            };
            if h.is_zero() {
                continue;
            }
            let h = h.normalize_sign();
            let j = self.basis.len();
            let mut retired = false;
            for i in 0..j {
                if self.live[i] && lt_divides(&h, &self.basis[i]) {
                    self.live[i] = false;
                    queue.push(self.basis[i].clone());
                    retired = true;
                }
            }
            if retired {
                let live = &self.live;
                self.pairs.retain(|(a, b, _)| live[*a] && live[*b]);
            }
            for i in 0..j {
                if self.live[i] {
                    self.pairs.push((i, j, self.basis[i].lm().lcm(h.lm())));
                }
            }
            self.basis.push(h);
            self.live.push(true);
        }
    }

    fn live_elements(&self) -> impl Iterator<Item = &Polynomial> {
        self.basis
            .iter()
            .zip(&self.live)
            .filter_map(|(g, &live)| live.then_some(g))
    }
}

/// Strong Buchberger over `Z` with the normal selection strategy.
pub fn buchberger(gens: &[Polynomial], ctx: &RingContext) -> Result<GroebnerBasis> {
    buchberger_limited(gens, ctx, None)
}

/// As [`buchberger`], aborting with [`Error::ResourceLimit`] once more
/// than `max_steps` critical pairs have been processed.
pub fn buchberger_limited(
    gens: &[Polynomial],
    ctx: &RingContext,
    max_steps: Option<usize>,
) -> Result<GroebnerBasis> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let order = ctx.order();
    let n = ctx.nvars();
    for g in gens {
        if g.nvars() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: g.nvars(),
            });
        }
    }

    let mut state = PairState::default();
    for g in gens {
        state.add(g.with_order(order));
    }

    let mut steps = 0usize;
    while !state.pairs.is_empty() {
        steps += 1;
        if max_steps.is_some_and(|k| steps > k) {
            return Err(Error::ResourceLimit { steps: steps - 1 });
        }
        let pairs = &state.pairs;
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (ia, ja, la) = &pairs[a];
                let (ib, jb, lb) = &pairs[b];
                order.cmp(la, lb).then((ja, ia).cmp(&(jb, ib)))
            })
            .expect("nonempty");
        let (i, j, _) = state.pairs.swap_remove(best);
        let (f, g) = (state.basis[i].clone(), state.basis[j].clone());

        let (cf, cg) = (f.lc(), g.lc());
        let divisible = cg.is_multiple_of(cf) || cf.is_multiple_of(cg);
        if !divisible {
            state.add(g_polynomial(&f, &g)?);
        }
        let coprime = f.lm().is_coprime(g.lm()) && cf.gcd(cg).is_one();
        if !coprime && state.live[i] && state.live[j] {
            state.add(s_polynomial(&f, &g)?);
        }
    }
    let basis: Vec<Polynomial> = state
        .basis
        .into_iter()
        .zip(state.live)
        .filter_map(|(g, live)| live.then_some(g))
        .collect();
    debug!("buchberger: {} pairs, {} elements", steps, basis.len());

    Ok(GroebnerBasis {
        elements: basis,
        nvars: n,
        order,
        flags: BasisFlags {
            strong: true,
            ..BasisFlags::default()
        },
    })
}

/// Whether the leading term of `a` divides that of `b`, monomial and
/// coefficient.
fn lt_divides(a: &Polynomial, b: &Polynomial) -> bool {
    a.lm().divides(b.lm()) && b.lc().is_multiple_of(a.lc())
}

/// The unique reduced strong basis of the ideal generated by `basis`.
///
/// Drops elements whose leading term is divisible by another leading term,
/// makes every leading coefficient positive, reduces all tails, and sorts
/// ascending by leading monomial.
pub fn inter_reduce(basis: &GroebnerBasis) -> Result<GroebnerBasis> {
    if !basis.flags.strong {
        return Err(Error::BasisFlags("inter_reduce needs a strong basis"));
    }
    let order = basis.order;
    let mut elems: Vec<Polynomial> = basis
        .elements
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clone().normalize_sign())
        .collect();
    // a stable sort makes the survivor among equal leading terms deterministic
    elems.sort_by(|a, b| order.cmp(a.lm(), b.lm()).then_with(|| a.lc().cmp(b.lc())));

    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in elems.iter().enumerate() {
        let redundant = elems
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && lt_divides(h, g) && (!lt_divides(g, h) || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }

    let mut reduced = minimal.clone();
    for i in 0..reduced.len() {
        let others: Vec<Polynomial> = reduced
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &reduced[i];
        let lead = Polynomial::term(g.nvars(), order, g.lc().clone(), g.lm().clone());
        let tail = reduce_by(&g.tail(), &others);
        reduced[i] = &lead + &tail;
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    Ok(GroebnerBasis {
        elements: reduced,
        nvars: basis.nvars,
        order,
        flags: BasisFlags {
            strong: true,
            reduced: true,
            short_reduced: false,
        },
    })
}

/// Reduced basis in which each leading coefficient ideal of a leading
/// monomial is generated by a single element: the gcd of the leading
/// coefficients of the elements whose leading monomial divides it.
pub fn short_reduce(basis: &GroebnerBasis) -> Result<GroebnerBasis> {
    let mut g = inter_reduce(basis)?;
    for e in &g.elements {
        let ideal = leading_coeff_ideal(&g, e.lm());
        if &ideal.generator != e.lc() {
            // cannot happen for a strong input basis
            return Err(Error::BasisFlags(
                "leading coefficient ideal is not generated by a basis element",
            ));
        }
    }
    g.flags.short_reduced = true;
    Ok(g)
}

/// Every element has leading coefficient 1.
pub fn is_monic(basis: &GroebnerBasis) -> Result<bool> {
    if !basis.flags.short_reduced {
        return Err(Error::BasisFlags("is_monic needs a short reduced basis"));
    }
    Ok(basis.elements.iter().all(|g| g.lc().is_one()))
}

pub fn leading_coeff_ideal(basis: &GroebnerBasis, m: &Monomial) -> LeadingCoeffIdeal {
    let mut divisor_indices = BTreeSet::new();
    let mut generator = BigInt::zero();
    for (i, g) in basis.elements.iter().enumerate() {
        if g.lm().divides(m) {
            divisor_indices.insert(i);
            generator = generator.gcd(g.lc());
        }
    }
    LeadingCoeffIdeal {
        monomial: m.clone(),
        divisor_indices,
        generator,
    }
}

/// Checks the strong-basis criterion: every S- and G-polynomial of every
/// pair reduces to zero. Quadratic in the basis size.
pub fn is_strong_groebner(basis: &GroebnerBasis) -> bool {
    let e = &basis.elements;
    for i in 0..e.len() {
        for j in (i + 1)..e.len() {
            for p in [s_polynomial(&e[i], &e[j]), g_polynomial(&e[i], &e[j])] {
                if !reduce_by(&p.expect("nonzero elements"), e).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
