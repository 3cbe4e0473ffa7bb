//! Integer lattices in row Hermite normal form, and the embedding of ideals
//! of a free quotient as sublattices of `Z^N`.
//!
//! Row HNF convention: pivot columns strictly increase down the rows, pivots
//! are positive, and entries above a pivot lie in `[0, pivot)`. Zero rows
//! are dropped, so the HNF of a generating matrix is a canonical basis of
//! the lattice it spans.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::json::JsonInt;
use crate::poly::Polynomial;
use crate::quotient::{phi_vector, QuotientStructure};

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(IntegerMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("ragged matrix literal")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

fn axpy(target: &mut [BigInt], k: &BigInt, src: &[BigInt]) {
    if k.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        *t += k * s;
    }
}

/// Row Hermite normal form with zero rows dropped.
pub fn hnf(m: &IntegerMatrix) -> IntegerMatrix {
    let cols = m.cols;
    let mut rows = m.row_vecs();
    let n = rows.len();
    let mut r = 0;
    for col in 0..cols {
        if r == n {
            break;
        }
        for i in (r + 1)..n {
            if rows[i][col].is_zero() {
                continue;
            }
            if rows[r][col].is_zero() {
                rows.swap(r, i);
                continue;
            }
            let a = rows[r][col].clone();
            let b = rows[i][col].clone();
            let e = a.extended_gcd(&b);
            let (mut d, mut u, mut v) = (e.gcd, e.x, e.y);
            if d.is_negative() {
                d = -d;
                u = -u;
                v = -v;
            }
            let (p, q) = (-(&b / &d), &a / &d);
            // [u v; p q] has determinant (u a + v b) / d = 1
            let new_r: Vec<BigInt> = rows[r]
                .iter()
                .zip(&rows[i])
                .map(|(x, y)| &u * x + &v * y)
                .collect();
            let new_i: Vec<BigInt> = rows[r]
                .iter()
                .zip(&rows[i])
                .map(|(x, y)| &p * x + &q * y)
                .collect();
            rows[r] = new_r;
            rows[i] = new_i;
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        let pivot_row = rows[r].clone();
        let pivot = &pivot_row[col];
        for row in rows.iter_mut().take(r) {
            let k = row[col].div_floor(pivot);
            axpy(row, &-k, &pivot_row);
        }
        r += 1;
    }
    rows.truncate(r);
    IntegerMatrix::from_rows(cols, rows).expect("rectangular")
}

/// A sublattice of `Z^N` with its canonical HNF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient_dim: usize,
    basis: IntegerMatrix,
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    ambient_dim: usize,
    basis: Vec<Vec<JsonInt>>,
}

impl IntegerLattice {
    /// The lattice spanned by the rows of `m`.
    pub fn from_generators(m: &IntegerMatrix) -> Self {
        IntegerLattice {
            ambient_dim: m.cols,
            basis: hnf(m),
        }
    }

    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        Ok(Self::from_generators(&IntegerMatrix::from_rows(
            ambient_dim,
            rows,
        )?))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        IntegerLattice {
            ambient_dim,
            basis: IntegerMatrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        IntegerLattice {
            ambient_dim,
            basis: IntegerMatrix::identity(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.rank())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("HNF rows are nonzero")
            })
            .collect()
    }

    /// Determinant (covolume) of a full-rank lattice: the product of pivots.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_full_rank() {
            return Err(Error::NotFullRank {
                rank: self.rank(),
                dim: self.ambient_dim,
            });
        }
        Ok((0..self.rank())
            .map(|i| self.basis[(i, i)].clone())
            .product())
    }

    /// Membership by back-substitution against the HNF rows.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        let mut done = 0;
        for (k, p) in self.pivots().into_iter().enumerate() {
            if w[done..p].iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
            let row = self.basis.row(k);
            let (q, r) = w[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Ok(false);
            }
            axpy(&mut w, &-q, row);
            done = p + 1;
        }
        Ok(w[done..].iter().all(|x| x.is_zero()))
    }

    /// `self` is a sublattice of `other`.
    pub fn is_sublattice_of(&self, other: &IntegerLattice) -> Result<bool> {
        for i in 0..self.rank() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Applies a coordinate permutation: coordinate `i` moves to `perm[i]`.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Result<IntegerLattice> {
        if perm.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: perm.len(),
            });
        }
        let rows = self
            .basis
            .row_vecs()
            .into_iter()
            .map(|r| {
                let mut out = vec![BigInt::zero(); r.len()];
                for (i, x) in r.into_iter().enumerate() {
                    out[perm[i]] = x;
                }
                out
            })
            .collect();
        IntegerLattice::from_rows(self.ambient_dim, rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(LatticeJson {
            ambient_dim: self.ambient_dim,
            basis: self
                .basis
                .row_vecs()
                .iter()
                .map(|r| crate::json::to_json_ints(r))
                .collect(),
        })
        .expect("serializable")
    }

    /// Reads `{"ambient_dim": N, "basis": [[...], ...]}`; the rows are
    /// re-normalised, so any generating set is accepted.
    pub fn from_json(text: &str) -> Result<Self> {
        let j: LatticeJson = serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        let rows = j
            .basis
            .into_iter()
            .map(crate::json::from_json_ints)
            .collect();
        Self::from_rows(j.ambient_dim, rows)
    }
}

/// Embeds the ideal generated by `gens` in the free quotient described by
/// `q` as the lattice spanned by the coordinate vectors of `f_j * b_i`.
pub fn embed_ideal(
    gens: &[Polynomial],
    g: &GroebnerBasis,
    q: &QuotientStructure,
) -> Result<IntegerLattice> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut rows = Vec::with_capacity(gens.len() * q.rank());
    for f in gens {
        let f = f.with_order(q.order());
        for b in q.basis_monomials() {
            let fb = f.mul_term(&BigInt::one(), b);
            rows.push(phi_vector(&fb, q, g)?);
        }
    }
    IntegerLattice::from_rows(q.rank(), rows)
}
