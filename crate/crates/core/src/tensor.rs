//! Tensor-leg bookkeeping for maps between tensor powers.
//!
//! Basis tuples of `V₁⊗…⊗V_r` are flattened with the left factor most
//! significant: `(i₁,…,i_r) ↦ ((i₁·d₂ + i₂)·d₃ + …)`. [`LegChain`] composes
//! maps acting on contiguous legs without materialising `id⊗f⊗id`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::par;
use crate::scalar::{Field, Scalar};

pub fn flatten(index: &[usize], dims: &[usize]) -> usize {
    debug_assert_eq!(index.len(), dims.len());
    index.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

pub fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

/// The flip `V⊗W → W⊗V`.
pub fn swap_matrix(field: Field, v: usize, w: usize) -> Matrix {
    permutation_matrix(field, &[v, w], &[1, 0])
}

/// Matrix sending leg list `dims` to the reordering whose leg `k` is old leg
/// `order[k]`.
pub fn permutation_matrix(field: Field, dims: &[usize], order: &[usize]) -> Matrix {
    let total: usize = dims.iter().product();
    let new_dims: Vec<usize> = order.iter().map(|&o| dims[o]).collect();
    let mut m = Matrix::zeros(field, total, total);
    for col in 0..total {
        let old = unflatten(col, dims);
        let new: Vec<usize> = order.iter().map(|&o| old[o]).collect();
        m.set(flatten(&new, &new_dims), col, field.one());
    }
    m
}

/// A linear map under construction, tracked as a list of output legs.
///
/// Columns are kept sparse: checks start from the identity on `V^{⊗3}` or
/// larger, where a dense representation would be mostly zeros.
#[derive(Clone, Debug)]
pub struct LegChain {
    field: Field,
    legs: Vec<usize>,
    columns: Vec<Vec<(usize, Scalar)>>,
}

/// Sorts by row and merges duplicates, dropping cancellations.
fn normalize(mut terms: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    terms.sort_by_key(|t| t.0);
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
    for (r, v) in terms {
        match out.last_mut() {
            Some((last, acc)) if *last == r => *acc = &*acc + &v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl LegChain {
    /// The identity on `V₁⊗…⊗V_r`.
    pub fn new(field: Field, legs: &[usize]) -> Self {
        let total = legs.iter().product();
        let columns = (0..total).map(|c| vec![(c, field.one())]).collect();
        LegChain { field, legs: legs.to_vec(), columns }
    }

    /// Starts from an existing map whose output splits as `legs`.
    pub fn from_map(map: Matrix, legs: &[usize]) -> Result<Self> {
        if legs.iter().product::<usize>() != map.rows() {
            return Err(Error::shape("leg dimensions do not match the map"));
        }
        let columns = (0..map.cols())
            .map(|c| (0..map.rows()).filter(|&r| !map.get(r, c).is_zero()).map(|r| (r, map.get(r, c).clone())).collect())
            .collect();
        Ok(LegChain { field: map.field(), legs: legs.to_vec(), columns })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Applies `f` to the `count` legs starting at `at`; `out_legs` are the
    /// legs `f` produces (empty for a functional).
    pub fn apply(mut self, f: &Matrix, at: usize, count: usize, out_legs: &[usize]) -> Result<Self> {
        if at + count > self.legs.len() {
            return Err(Error::shape(format!(
                "legs {at}..{} out of {}",
                at + count,
                self.legs.len()
            )));
        }
        if f.field() != self.field {
            return Err(Error::FieldMismatch { left: self.field, right: f.field() });
        }
        let in_block: usize = self.legs[at..at + count].iter().product();
        let out_block: usize = out_legs.iter().product();
        if f.cols() != in_block || f.rows() != out_block {
            return Err(Error::shape(format!(
                "map {}×{} applied to legs of size {in_block} -> {out_block}",
                f.rows(),
                f.cols()
            )));
        }
        let suffix: usize = self.legs[at + count..].iter().product();
        let fcols: Vec<Vec<(usize, Scalar)>> = (0..in_block)
            .map(|x| (0..out_block).filter(|&y| !f.get(y, x).is_zero()).map(|y| (y, f.get(y, x).clone())).collect())
            .collect();
        let step = |col: &Vec<(usize, Scalar)>| {
            let mut terms = Vec::new();
            for (r, v) in col {
                let s = r % suffix;
                let x = (r / suffix) % in_block;
                let p = r / (suffix * in_block);
                for (y, c) in &fcols[x] {
                    terms.push(((p * out_block + y) * suffix + s, v * c));
                }
            }
            normalize(terms)
        };
        let nnz: usize = self.columns.iter().map(Vec::len).sum();
        self.columns = if nnz >= par::MIN_PARALLEL_WORK {
            par::map(&self.columns, step)
        } else {
            self.columns.iter().map(step).collect()
        };
        self.legs.splice(at..at + count, out_legs.iter().copied());
        Ok(self)
    }

    /// Applies an endomorphism of a single leg.
    pub fn on(self, f: &Matrix, leg: usize) -> Result<Self> {
        let d = *self.legs.get(leg).ok_or_else(|| Error::shape("leg out of range"))?;
        self.apply(f, leg, 1, &[d])
    }

    /// Inserts a vector (a map from the ground field) as new legs at `at`.
    pub fn insert(self, v: &Matrix, at: usize, out_legs: &[usize]) -> Result<Self> {
        self.apply(v, at, 0, out_legs)
    }

    /// Reorders legs: new leg `k` is old leg `order[k]`.
    pub fn permute(mut self, order: &[usize]) -> Result<Self> {
        if order.len() != self.legs.len() {
            return Err(Error::shape("permutation length"));
        }
        let mut seen = vec![false; order.len()];
        for &o in order {
            if o >= order.len() || std::mem::replace(&mut seen[o], true) {
                return Err(Error::shape("not a permutation"));
            }
        }
        let new_legs: Vec<usize> = order.iter().map(|&o| self.legs[o]).collect();
        let legs = self.legs.clone();
        let relabel = |r: usize| {
            let old = unflatten(r, &legs);
            let new: Vec<usize> = order.iter().map(|&o| old[o]).collect();
            flatten(&new, &new_legs)
        };
        for col in &mut self.columns {
            let moved = col.drain(..).map(|(r, v)| (relabel(r), v)).collect();
            *col = normalize(moved);
        }
        self.legs = new_legs;
        Ok(self)
    }

    /// Swaps legs `i` and `i + 1`.
    pub fn swap(self, i: usize) -> Result<Self> {
        let mut order: Vec<usize> = (0..self.legs.len()).collect();
        if i + 1 >= order.len() {
            return Err(Error::shape("swap out of range"));
        }
        order.swap(i, i + 1);
        self.permute(&order)
    }

    pub fn finish(self) -> Matrix {
        let rows: usize = self.legs.iter().product();
        let mut m = Matrix::zeros(self.field, rows, self.columns.len());
        for (c, col) in self.columns.into_iter().enumerate() {
            for (r, v) in col {
                m.set(r, c, v);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::kron;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn flatten_round_trip() {
        let dims = [2, 3, 4];
        for flat in 0..24 {
            assert_eq!(flatten(&unflatten(flat, &dims), &dims), flat);
        }
        assert_eq!(flatten(&[1, 2], &[2, 3]), 5);
    }

    #[test]
    fn apply_matches_kron_with_identities() {
        let f = Matrix::from_i64_rows(q(), &[&[1, 2, 0, 1, 3, 0], &[0, 1, 1, 0, 0, 2]]);
        let chain = LegChain::new(q(), &[2, 2, 3, 2]).apply(&f, 1, 2, &[2]).unwrap().finish();
        let i2 = Matrix::identity(q(), 2);
        let expected = kron(&kron(&i2, &f).unwrap(), &i2).unwrap();
        assert_eq!(chain, expected);
    }

    #[test]
    fn insert_and_functional() {
        let v = Matrix::from_i64_rows(q(), &[&[1], &[5]]);
        let eps = Matrix::from_i64_rows(q(), &[&[1, 1]]);
        let m = LegChain::new(q(), &[2]).insert(&v, 0, &[2]).unwrap();
        assert_eq!(m.legs(), &[2, 2]);
        let back = m.apply(&eps, 0, 1, &[]).unwrap().finish();
        assert_eq!(back, Matrix::identity(q(), 2).scale(&q().from_i64(6)).unwrap());
    }

    #[test]
    fn permute_matches_permutation_matrix() {
        let dims = [2, 3, 2];
        let order = [2, 0, 1];
        let chain = LegChain::new(q(), &dims).permute(&order).unwrap().finish();
        assert_eq!(chain, permutation_matrix(q(), &dims, &order));
        let s = LegChain::new(q(), &[2, 3]).swap(0).unwrap().finish();
        assert_eq!(s, swap_matrix(q(), 2, 3));
    }
}
