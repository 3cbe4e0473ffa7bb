use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Sparse polynomial in `Z[x1..xn]`.
///
/// Terms are kept sorted strictly descending in `order` and never carry a
/// zero coefficient, so structural equality is ideal-free equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: impl Into<BigInt>) -> Self {
        Self::term(nvars, order, c, Monomial::one(nvars))
    }

    pub fn term(nvars: usize, order: MonomialOrder, c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        assert_eq!(m.nvars(), nvars, "monomial arity");
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    /// Collects arbitrary terms, merging like monomials and dropping zeros.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial and coefficient.
    pub fn leading_term(&self) -> Result<(&Monomial, &BigInt)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading monomial; panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms.first().expect("leading monomial of zero").0
    }

    /// Leading coefficient; panics on zero.
    pub fn lc(&self) -> &BigInt {
        &self.terms.first().expect("leading coefficient of zero").1
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(t, _)| self.order.cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    /// Same polynomial with terms re-sorted for another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        // multiplication by a monomial preserves the term order
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect();
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.nvars))
    }

    /// `self + c * m * other`, the workhorse of reduction.
    pub fn add_scaled(&self, c: &BigInt, m: &Monomial, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), d * c))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ta, _)), Some((tb, _))) => match order.cmp(ta, tb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (t, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((t.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial {
            nvars: self.nvars,
            order,
            terms: out,
        }
    }

    /// Drops the leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// Multiplies by -1 if the leading coefficient is negative.
    pub fn normalize_sign(self) -> Polynomial {
        if self.terms.first().is_some_and(|(_, c)| c.is_negative()) {
            -self
        } else {
            self
        }
    }

    /// Content: gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Substitutes variables by monomials: variable `i` is mapped through
    /// `map[i]` into a ring with `nvars` variables. Used to move between rings.
    pub fn remap(&self, nvars: usize, order: MonomialOrder, map: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            order,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0u32; nvars];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            }),
        )
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
        assert_eq!(self.order, other.order, "polynomials use different orders");
    }

    pub fn one(nvars: usize, order: MonomialOrder) -> Self {
        Self::constant(nvars, order, BigInt::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(&BigInt::one(), &Monomial::one(self.nvars), rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(&-BigInt::one(), &Monomial::one(self.nvars), rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Polynomial::from_terms(self.nvars, self.order, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
