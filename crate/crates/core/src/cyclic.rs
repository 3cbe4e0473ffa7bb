//! Coefficient tensors of `Z[x1..xn]/<x1^r1 - 1, ..., xn^rn - 1>` and the
//! axis-wise cyclic shifts that model multiplication by a variable.
//!
//! Tensor entry `(i1, ..., in)` holds the coefficient of `x1^i1 ... xn^in`.
//! Flattening is row-major with axis 0 slowest: position
//! `sum_k i_k * prod_{l > k} r_l`. This is generally not the ascending
//! monomial order used for quotient coordinates, so
//! [`quotient_to_tensor_permutation`] bridges the two.
//!
//! Axes are 0-based throughout.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{from_json_ints, to_json_ints, JsonInt};
use crate::lattice::IntegerLattice;
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingContext};
use crate::quotient::QuotientStructure;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorShape {
    radices: Vec<usize>,
}

impl TensorShape {
    pub fn new(radices: Vec<usize>) -> Result<Self> {
        if radices.is_empty() {
            return Err(Error::InvalidShape("at least one axis is required".into()));
        }
        if radices.contains(&0) {
            return Err(Error::InvalidShape("radices must be at least 1".into()));
        }
        if radices
            .iter()
            .any(|&r| r > crate::poly::MAX_EXPONENT as usize)
        {
            return Err(Error::InvalidShape("radix too large".into()));
        }
        Ok(TensorShape { radices })
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn order(&self) -> usize {
        self.radices.len()
    }

    /// Number of entries `N = r1 * ... * rn`.
    pub fn size(&self) -> usize {
        self.radices.iter().product()
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        idx.iter()
            .zip(&self.radices)
            .fold(0, |acc, (&i, &r)| acc * r + i)
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.radices.len()];
        for (k, &r) in self.radices.iter().enumerate().rev() {
            idx[k] = flat % r;
            flat /= r;
        }
        idx
    }

    /// Generators `x_i^{r_i} - 1` of the cyclic ideal.
    pub fn cyclic_generators(&self, ctx: &RingContext) -> Result<Vec<Polynomial>> {
        if ctx.nvars() != self.order() {
            return Err(Error::ArityMismatch {
                expected: self.order(),
                found: ctx.nvars(),
            });
        }
        Ok((0..self.order())
            .map(|i| {
                let mut e = vec![0; self.order()];
                e[i] = self.radices[i] as u32;
                &ctx.monomial(Monomial::new(e)) - &ctx.one()
            })
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffTensor {
    shape: TensorShape,
    entries: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    shape: Vec<usize>,
    entries: Vec<JsonInt>,
}

impl CoeffTensor {
    pub fn zeros(shape: TensorShape) -> Self {
        let n = shape.size();
        CoeffTensor {
            shape,
            entries: vec![BigInt::zero(); n],
        }
    }

    pub fn from_flat(shape: TensorShape, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::DimensionMismatch {
                expected: shape.size(),
                found: entries.len(),
            });
        }
        Ok(CoeffTensor { shape, entries })
    }

    pub fn shape(&self) -> &TensorShape {
        &self.shape
    }

    /// Entries in flattening order.
    pub fn flat(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, idx: &[usize]) -> &BigInt {
        &self.entries[self.shape.flat_index(idx)]
    }

    /// Tensor of a polynomial whose exponents already lie below the radices.
    pub fn from_polynomial(f: &Polynomial, shape: &TensorShape) -> Result<Self> {
        Self::build(f, shape, false)
    }

    /// Tensor of the class of `f`, reducing exponents modulo the radices
    /// (`x_i^{r_i} = 1`).
    pub fn from_polynomial_reduced(f: &Polynomial, shape: &TensorShape) -> Result<Self> {
        Self::build(f, shape, true)
    }

    fn build(f: &Polynomial, shape: &TensorShape, reduce: bool) -> Result<Self> {
        if f.nvars() != shape.order() {
            return Err(Error::ArityMismatch {
                expected: shape.order(),
                found: f.nvars(),
            });
        }
        let mut t = CoeffTensor::zeros(shape.clone());
        for (m, c) in f.terms() {
            let mut idx = Vec::with_capacity(shape.order());
            for (var, (&e, &r)) in m.exponents().iter().zip(&shape.radices).enumerate() {
                let e = e as usize;
                if e >= r && !reduce {
                    return Err(Error::ExponentOutOfRange {
                        var,
                        exponent: e as u32,
                        radix: r,
                    });
                }
                idx.push(e % r);
            }
            let k = shape.flat_index(&idx);
            t.entries[k] += c;
        }
        Ok(t)
    }

    pub fn to_polynomial(&self, order: MonomialOrder) -> Polynomial {
        Polynomial::from_terms(
            self.shape.order(),
            order,
            self.entries
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let idx = self.shape.multi_index(k);
                    (
                        Monomial::new(idx.iter().map(|&i| i as u32).collect()),
                        c.clone(),
                    )
                }),
        )
    }

    /// The shift along `axis`: slice `j` moves to slice `j + 1 mod r`,
    /// which is multiplication by `x_axis` in the cyclic quotient.
    pub fn cyclic_shift(&self, axis: usize) -> Result<CoeffTensor> {
        let n = self.shape.order();
        if axis >= n {
            return Err(Error::AxisOutOfRange { axis, order: n });
        }
        let r = self.shape.radices[axis];
        let stride: usize = self.shape.radices[axis + 1..].iter().product();
        let mut out = vec![BigInt::zero(); self.entries.len()];
        for (k, c) in self.entries.iter().enumerate() {
            let j = (k / stride) % r;
            let target = if j + 1 == r {
                k - j * stride
            } else {
                k + stride
            };
            out[target] = c.clone();
        }
        Ok(CoeffTensor {
            shape: self.shape.clone(),
            entries: out,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TensorJson {
            shape: self.shape.radices.clone(),
            entries: to_json_ints(&self.entries),
        })
        .expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: TensorJson = serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        Self::from_flat(TensorShape::new(j.shape)?, from_json_ints(j.entries))
    }
}

/// First basis row and axis whose shift leaves the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicViolation {
    pub row: usize,
    pub axis: usize,
}

/// Closure of the lattice (in tensor coordinates) under every shift,
/// checked on the basis rows since each shift is `Z`-linear.
pub fn cyclic_violation(
    lattice: &IntegerLattice,
    shape: &TensorShape,
) -> Result<Option<CyclicViolation>> {
    if lattice.ambient_dim() != shape.size() {
        return Err(Error::DimensionMismatch {
            expected: shape.size(),
            found: lattice.ambient_dim(),
        });
    }
    for row in 0..lattice.rank() {
        let t = CoeffTensor::from_flat(shape.clone(), lattice.basis().row(row).to_vec())?;
        for axis in 0..shape.order() {
            if !lattice.contains(t.cyclic_shift(axis)?.flat())? {
                return Ok(Some(CyclicViolation { row, axis }));
            }
        }
    }
    Ok(None)
}

pub fn is_multivariate_cyclic(lattice: &IntegerLattice, shape: &TensorShape) -> Result<bool> {
    Ok(cyclic_violation(lattice, shape)?.is_none())
}

/// `perm[i]` is the tensor position of the `i`-th quotient basis monomial.
/// Fails unless the quotient basis is exactly the box of exponents below
/// the radices.
pub fn quotient_to_tensor_permutation(
    q: &QuotientStructure,
    shape: &TensorShape,
) -> Result<Vec<usize>> {
    if q.nvars() != shape.order() {
        return Err(Error::ArityMismatch {
            expected: shape.order(),
            found: q.nvars(),
        });
    }
    if q.rank() != shape.size() {
        return Err(Error::DimensionMismatch {
            expected: shape.size(),
            found: q.rank(),
        });
    }
    let mut seen = vec![false; shape.size()];
    let mut perm = Vec::with_capacity(q.rank());
    for m in q.basis_monomials() {
        let mut idx = Vec::with_capacity(shape.order());
        for (var, (&e, &r)) in m.exponents().iter().zip(shape.radices()).enumerate() {
            if e as usize >= r {
                return Err(Error::ExponentOutOfRange {
                    var,
                    exponent: e,
                    radix: r,
                });
            }
            idx.push(e as usize);
        }
        let k = shape.flat_index(&idx);
        seen[k] = true;
        perm.push(k);
    }
    debug_assert!(seen.iter().all(|&s| s));
    Ok(perm)
}

/// Re-expresses a lattice given in quotient coordinates in tensor
/// coordinates.
pub fn to_tensor_coordinates(
    lattice: &IntegerLattice,
    q: &QuotientStructure,
    shape: &TensorShape,
) -> Result<IntegerLattice> {
    lattice.permute_coordinates(&quotient_to_tensor_permutation(q, shape)?)
}

/// The unit tensor at `idx`.
pub fn basis_tensor(shape: &TensorShape, idx: &[usize]) -> CoeffTensor {
    let mut t = CoeffTensor::zeros(shape.clone());
    let k = shape.flat_index(idx);
    t.entries[k] = BigInt::one();
    t
}
