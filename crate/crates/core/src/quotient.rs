//! The `Z`-module structure of `Z[x1..xn]/a` read off a short reduced basis.
//!
//! A monomial whose leading coefficient ideal is `Z` vanishes in the
//! quotient; one with ideal `{0}` contributes a free summand `Z`; one with
//! ideal `dZ`, `d > 1`, contributes torsion `Z/dZ`. The quotient is free of
//! finite rank exactly when the short reduced basis is monic and the unit
//! leading monomials cut out a finite staircase.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{is_monic, leading_coeff_ideal, GroebnerBasis, LeadingCoeffIdeal};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Upper bound on the number of monomials enumerated inside the staircase box.
pub const MAX_STAIRCASE: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStructure {
    basis_monomials: Vec<Monomial>,
    coeff_ideals: Vec<LeadingCoeffIdeal>,
    free: bool,
    order: MonomialOrder,
    nvars: usize,
    index: HashMap<Monomial, usize>,
}

fn require_short_reduced(g: &GroebnerBasis) -> Result<()> {
    if g.flags().short_reduced {
        Ok(())
    } else {
        Err(Error::BasisFlags("a short reduced basis is required"))
    }
}

/// Per variable, the smallest exponent `k` with `x_i^k` divisible by a
/// leading monomial of a unit-leading-coefficient element.
fn staircase_bounds(g: &GroebnerBasis) -> Option<Vec<u32>> {
    let mut bounds: Vec<Option<u32>> = vec![None; g.nvars()];
    for e in g.elements().iter().filter(|e| e.lc().is_one()) {
        match e.lm().pure_power() {
            Some((None, _)) => return Some(vec![0; g.nvars()]),
            Some((Some(i), k)) => {
                bounds[i] = Some(bounds[i].map_or(k, |b| b.min(k)));
            }
            None => {}
        }
    }
    bounds.into_iter().collect()
}

/// All monomials with `e_i < bounds[i]`.
fn box_monomials(bounds: &[u32]) -> Result<Vec<Monomial>> {
    let total = bounds
        .iter()
        .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize))
        .filter(|&t| t <= MAX_STAIRCASE)
        .ok_or(Error::ResourceLimit {
            steps: MAX_STAIRCASE,
        })?;
    if total == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(total);
    let mut e = vec![0u32; bounds.len()];
    'outer: loop {
        out.push(Monomial::new(e.clone()));
        for i in (0..e.len()).rev() {
            e[i] += 1;
            if e[i] < bounds[i] {
                continue 'outer;
            }
            e[i] = 0;
        }
        break;
    }
    Ok(out)
}

/// The quotient is finitely generated: every variable has a pure power that
/// is a leading monomial of a unit-leading-coefficient element.
pub fn is_finitely_generated(g: &GroebnerBasis) -> Result<bool> {
    require_short_reduced(g)?;
    Ok(staircase_bounds(g).is_some())
}

/// Monomials divisible by no leading monomial, ascending in the basis order.
pub fn standard_monomials(g: &GroebnerBasis) -> Result<Vec<Monomial>> {
    if !is_monic(g)? {
        return Err(Error::NotMonic);
    }
    let bounds = staircase_bounds(g).ok_or(Error::NotFinitelyGenerated)?;
    let mut ms: Vec<Monomial> = box_monomials(&bounds)?
        .into_iter()
        .filter(|m| !g.elements().iter().any(|e| e.lm().divides(m)))
        .collect();
    let order = g.order();
    ms.sort_by(|a, b| order.cmp(a, b));
    Ok(ms)
}

/// Freeness of a finitely generated quotient.
pub fn is_free(g: &GroebnerBasis) -> Result<bool> {
    if !is_finitely_generated(g)? {
        return Err(Error::NotFinitelyGenerated);
    }
    is_monic(g)
}

impl QuotientStructure {
    /// Analyses a finitely generated quotient.
    pub fn new(g: &GroebnerBasis) -> Result<Self> {
        require_short_reduced(g)?;
        let bounds = staircase_bounds(g).ok_or(Error::NotFinitelyGenerated)?;
        let order = g.order();
        let mut basis_monomials = Vec::new();
        let mut coeff_ideals = Vec::new();
        for m in box_monomials(&bounds)? {
            let ideal = leading_coeff_ideal(g, &m);
            if ideal.is_zero_ideal() {
                basis_monomials.push(m);
            } else if !ideal.is_unit() {
                coeff_ideals.push(ideal);
            }
        }
        basis_monomials.sort_by(|a, b| order.cmp(a, b));
        coeff_ideals.sort_by(|a, b| order.cmp(&a.monomial, &b.monomial));
        let index = basis_monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(QuotientStructure {
            free: coeff_ideals.is_empty(),
            basis_monomials,
            coeff_ideals,
            order,
            nvars: g.nvars(),
            index,
        })
    }

    /// Ascending standard monomials spanning the free part.
    pub fn basis_monomials(&self) -> &[Monomial] {
        &self.basis_monomials
    }

    /// Monomials carrying torsion `Z/dZ`, with their leading coefficient
    /// ideals; empty exactly when the quotient is free.
    pub fn coeff_ideals(&self) -> &[LeadingCoeffIdeal] {
        &self.coeff_ideals
    }

    pub fn is_free(&self) -> bool {
        self.free
    }

    /// Rank of the free part; equals the dimension when free.
    pub fn rank(&self) -> usize {
        self.basis_monomials.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Position of a standard monomial in the basis.
    pub fn coordinate_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// The polynomial `sum v_i b_i`.
    pub fn phi_inverse(&self, v: &[BigInt]) -> Result<Polynomial> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(Polynomial::from_terms(
            self.nvars,
            self.order,
            self.basis_monomials.iter().cloned().zip(v.iter().cloned()),
        ))
    }

    fn not_free_error(&self) -> Error {
        let ideal = &self.coeff_ideals[0];
        Error::NotFree {
            monomial: ideal.monomial.to_string(),
            coefficient: ideal.generator.to_string(),
        }
    }
}

/// Coordinates of the class of `f` on the standard monomial basis.
pub fn phi_vector(f: &Polynomial, q: &QuotientStructure, g: &GroebnerBasis) -> Result<Vec<BigInt>> {
    if !q.free {
        return Err(q.not_free_error());
    }
    if f.nvars() != q.nvars {
        return Err(Error::ArityMismatch {
            expected: q.nvars,
            found: f.nvars(),
        });
    }
    let r = g.normal_form(f);
    let mut v = vec![BigInt::zero(); q.rank()];
    for (m, c) in r.terms() {
        let i = q
            .coordinate_of(m)
            .expect("normal form modulo a monic basis lies on standard monomials");
        v[i] = c.clone();
    }
    Ok(v)
}
