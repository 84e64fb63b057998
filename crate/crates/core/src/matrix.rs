//! Dense exact matrices. A linear map `V -> W` is a `dim W × dim V` matrix, so
//! composition `f ∘ g` is the product `f · g`.

use std::fmt;

use crate::error::{Error, Result};
use crate::par;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

/// Outcome of [`maps_equal`]: equality, or the first differing entry in
/// row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equality {
    Equal,
    Differs { row: usize, col: usize, left: Scalar, right: Scalar },
}

impl Equality {
    pub fn holds(&self) -> bool {
        matches!(self, Equality::Equal)
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn diagonal(field: Field, diag: &[Scalar]) -> Result<Self> {
        let n = diag.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            d.expect_field(field)?;
            m.entries[i * n + i] = d.clone();
        }
        Ok(m)
    }

    pub fn from_entries(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            e.expect_field(field)?;
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("ragged rows"));
        }
        Matrix::from_entries(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience for tests and catalog tables: integer entries.
    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Matrix::from_rows(field, data).expect("well-formed integer rows")
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, field, entries }
    }

    /// Column vector.
    pub fn column(field: Field, values: Vec<Scalar>) -> Result<Self> {
        let n = values.len();
        Matrix::from_entries(field, n, 1, values)
    }

    /// Row vector (linear functional).
    pub fn row_vector(field: Field, values: Vec<Scalar>) -> Result<Self> {
        let n = values.len();
        Matrix::from_entries(field, 1, n, values)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar field mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// The image of basis vector `c`.
    pub fn column_values(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| {
                let e = self.get(r, c);
                if r == c { e.is_one() } else { e.is_zero() }
            }))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Result<Matrix> {
        s.expect_field(self.field)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| e * s).collect(),
        })
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::shape(format!(
                "{}×{} vs {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    /// Matrix product `self · rhs`, i.e. the composite `self ∘ rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch { left: self.field, right: rhs.field });
        }
        if self.cols != rhs.rows {
            return Err(Error::shape(format!(
                "cannot compose {}×{} after {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        let work = self.rows * self.cols * rhs.cols;
        par::for_each_row(&mut out.entries, rhs.cols, work, |i, acc| {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (slot, b) in acc.iter_mut().zip(rhs.row(k)) {
                    if !b.is_zero() {
                        slot.add_product(a, b);
                    }
                }
            }
        });
        Ok(out)
    }

    /// Composite `self ∘ rhs`; alias of [`Matrix::mul`] that reads like the maths.
    pub fn after(&self, rhs: &Matrix) -> Result<Matrix> {
        self.mul(rhs)
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::shape(format!("cannot invert {}×{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.entries[r * 2 * n + c] = self.get(r, c).clone();
            }
            aug.entries[r * 2 * n + n + r] = self.field.one();
        }
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return Err(Error::Singular(format!("rank {} < {n}", pivots.len())));
        }
        Ok(Matrix::from_fn(self.field, n, n, |r, c| aug.get(r, n + c).clone()))
    }

    /// Integer power; negative exponents go through [`Matrix::invert`].
    pub fn pow(&self, exp: i32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::shape("power of a non-square matrix"));
        }
        let base = if exp < 0 { self.invert()? } else { self.clone() };
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Reduced row echelon form over the first `pivot_cols` columns.
    /// Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.entries.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inv().expect("pivot is nonzero");
            for c in 0..self.cols {
                let v = self.get(row, c) * &inv;
                self.entries[row * self.cols + c] = v;
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in 0..self.cols {
                    let delta = &factor * self.get(row, c);
                    let v = self.get(r, c) - &delta;
                    self.entries[r * self.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place(self.cols).len()
    }

    /// Solves `self · x = rhs` for a column `rhs`, returning the unique solution.
    pub fn solve_unique(&self, rhs: &Matrix) -> Result<Matrix> {
        if rhs.cols != 1 || rhs.rows != self.rows {
            return Err(Error::shape("right-hand side must be a matching column"));
        }
        if self.field != rhs.field {
            return Err(Error::FieldMismatch { left: self.field, right: rhs.field });
        }
        let n = self.cols;
        let mut aug = Matrix::zeros(self.field, self.rows, n + 1);
        for r in 0..self.rows {
            for c in 0..n {
                aug.entries[r * (n + 1) + c] = self.get(r, c).clone();
            }
            aug.entries[r * (n + 1) + n] = rhs.get(r, 0).clone();
        }
        let pivots = aug.rref_in_place(n);
        let inconsistent = (pivots.len()..self.rows).any(|r| !aug.get(r, n).is_zero());
        if inconsistent {
            return Err(Error::invalid("linear system has no solution"));
        }
        if pivots.len() < n {
            return Err(Error::invalid(format!(
                "linear system has a {}-dimensional solution space",
                n - pivots.len()
            )));
        }
        let values = (0..n).map(|r| aug.get(r, n).clone()).collect();
        Matrix::column(self.field, values)
    }
}

/// Kronecker product: entry `((i,i'),(j,j'))` is `a[i][j]·b[i'][j']`, with
/// `(i,i') ↦ i·rows(b) + i'` (left factor most significant, zero-based).
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field != b.field {
        return Err(Error::FieldMismatch { left: a.field, right: b.field });
    }
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = Matrix::zeros(a.field, rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for ii in 0..b.rows {
                for jj in 0..b.cols {
                    let y = b.get(ii, jj);
                    if !y.is_zero() {
                        out.entries[(i * b.rows + ii) * cols + j * b.cols + jj] = x * y;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Kronecker product of several factors, left to right.
pub fn kron_all(factors: &[&Matrix]) -> Result<Matrix> {
    let (first, rest) = factors.split_first().ok_or_else(|| Error::shape("empty tensor product"))?;
    rest.iter().try_fold((*first).clone(), |acc, f| kron(&acc, f))
}

/// Exact entrywise comparison with a row-major first-difference witness.
pub fn maps_equal(f: &Matrix, g: &Matrix) -> Result<Equality> {
    f.same_shape(g)?;
    for (idx, (a, b)) in f.entries.iter().zip(&g.entries).enumerate() {
        if a != b {
            return Ok(Equality::Differs {
                row: idx / f.cols,
                col: idx % f.cols,
                left: a.clone(),
                right: b.clone(),
            });
        }
    }
    Ok(Equality::Equal)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn kron_identity_and_scalar_cases() {
        let i2 = Matrix::identity(q(), 2);
        assert_eq!(kron(&i2, &i2).unwrap(), Matrix::identity(q(), 4));
        let c = Matrix::from_i64_rows(q(), &[&[3]]);
        let b = Matrix::from_i64_rows(q(), &[&[1, 2], &[0, -1]]);
        assert_eq!(kron(&c, &b).unwrap(), b.scale(&q().from_i64(3)).unwrap());
    }

    #[test]
    fn kron_swap_block_pattern() {
        // Hand expansion of all 16 entries of kron([[0,1],[1,0]], I2).
        let swap = Matrix::from_i64_rows(q(), &[&[0, 1], &[1, 0]]);
        let expected = Matrix::from_i64_rows(
            q(),
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
        );
        assert_eq!(kron(&swap, &Matrix::identity(q(), 2)).unwrap(), expected);
    }

    #[test]
    fn kron_rejects_mixed_fields() {
        let f7 = Field::prime(7).unwrap();
        let a = Matrix::identity(q(), 1);
        let b = Matrix::identity(f7, 1);
        assert!(matches!(kron(&a, &b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn invert_examples() {
        let i3 = Matrix::identity(q(), 3);
        assert_eq!(i3.invert().unwrap(), i3);
        let d = Matrix::from_i64_rows(q(), &[&[2, 0], &[0, 2]]);
        let half = q().ratio(1, 2).unwrap();
        assert_eq!(d.invert().unwrap(), Matrix::diagonal(q(), &[half.clone(), half]).unwrap());
        let u = Matrix::from_i64_rows(q(), &[&[1, 1], &[0, 1]]);
        let inv = u.invert().unwrap();
        assert_eq!(inv, Matrix::from_i64_rows(q(), &[&[1, -1], &[0, 1]]));
        assert!(u.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn singular_matrix_is_reported() {
        let s = Matrix::from_i64_rows(q(), &[&[1, 2], &[2, 4]]);
        assert!(matches!(s.invert(), Err(Error::Singular(_))));
        assert!(Matrix::zeros(q(), 2, 3).invert().is_err());
    }

    #[test]
    fn maps_equal_reports_first_difference() {
        let i2 = Matrix::identity(q(), 2);
        assert!(maps_equal(&i2, &i2).unwrap().holds());
        let flip = Matrix::from_i64_rows(q(), &[&[1, 0], &[0, -1]]);
        match maps_equal(&i2, &flip).unwrap() {
            Equality::Differs { row, col, left, right } => {
                assert_eq!((row, col), (1, 1));
                assert_eq!(left, q().from_i64(1));
                assert_eq!(right, q().from_i64(-1));
            }
            Equality::Equal => panic!("expected a difference"),
        }
        assert!(maps_equal(&i2, &Matrix::identity(q(), 3)).is_err());
    }

    #[test]
    fn solve_unique_and_degenerate_systems() {
        let a = Matrix::from_i64_rows(q(), &[&[2, 1], &[1, 1], &[3, 2]]);
        let b = Matrix::from_i64_rows(q(), &[&[5], &[3], &[8]]);
        assert_eq!(a.solve_unique(&b).unwrap(), Matrix::from_i64_rows(q(), &[&[2], &[1]]));
        let bad = Matrix::from_i64_rows(q(), &[&[5], &[3], &[9]]);
        assert!(a.solve_unique(&bad).is_err());
        let flat = Matrix::from_i64_rows(q(), &[&[1, 1]]);
        assert!(flat.solve_unique(&Matrix::from_i64_rows(q(), &[&[1]])).is_err());
    }
}
