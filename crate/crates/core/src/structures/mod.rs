//! Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras given
//! by structure constants, with exhaustive axiom checkers.

mod algebra;
mod bialgebra;
mod coalgebra;

pub use algebra::{check_hom_algebra, tensor_hom_algebra, HomAlgebra, MultCube};
pub use bialgebra::{
    check_antipode, check_hom_bialgebra, convolution, solve_antipode, yau_twist, HomBialgebra, HomHopf,
};
pub use coalgebra::{check_hom_coalgebra, tensor_hom_coalgebra, ComultMap, HomCoalgebra};

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

/// Named basis of a finite-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis {
    labels: Vec<String>,
}

impl Basis {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::invalid(format!("basis label `{l}` must be non-empty without spaces")));
            }
            if labels[..i].contains(l) {
                return Err(Error::invalid(format!("duplicate basis label `{l}`")));
            }
        }
        Ok(Basis { labels })
    }

    /// `e0, e1, …`
    pub fn indexed(dim: usize) -> Self {
        Basis { labels: (0..dim).map(|i| format!("e{i}")).collect() }
    }

    /// The one-dimensional ground field, labelled `1`.
    pub fn ground() -> Self {
        Basis { labels: vec!["1".into()] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Basis of `self ⊗ other` in the global flattening order.
    pub fn tensor(&self, other: &Basis) -> Basis {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Basis { labels }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.labels.join(" "))
    }
}

/// An invertible twist map together with its cached inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Twist {
    map: Matrix,
    inverse: Matrix,
}

impl Twist {
    pub fn new(map: Matrix) -> Result<Self> {
        let inverse = map
            .invert()
            .map_err(|_| Error::Singular("claimed automorphism is not invertible".into()))?;
        Ok(Twist { map, inverse })
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        let id = Matrix::identity(field, dim);
        Twist { map: id.clone(), inverse: id }
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn dim(&self) -> usize {
        self.map.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }

    /// `twist^e` for any integer `e`.
    pub fn pow(&self, e: i32) -> Matrix {
        let base = if e < 0 { &self.inverse } else { &self.map };
        let mut acc = Matrix::identity(self.map.field(), self.dim());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(base).expect("square twist");
        }
        acc
    }

    pub fn tensor(&self, other: &Twist) -> Twist {
        use crate::matrix::kron;
        Twist {
            map: kron(&self.map, &other.map).expect("same field"),
            inverse: kron(&self.inverse, &other.inverse).expect("same field"),
        }
    }
}

pub(crate) fn expect_square(m: &Matrix, n: usize, what: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::shape(format!("{what} must be {n}×{n}, got {}×{}", m.rows(), m.cols())));
    }
    Ok(())
}

pub(crate) fn expect_shape(m: &Matrix, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::shape(format!(
            "{what} must be {rows}×{cols}, got {}×{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

pub(crate) fn expect_field(m: &Matrix, field: Field) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch { left: field, right: m.field() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_validation() {
        assert!(Basis::new(["1", "a"]).is_ok());
        assert!(Basis::new(["1", "1"]).is_err());
        assert!(Basis::new(["x y"]).is_err());
        let b = Basis::new(["1", "a"]).unwrap();
        assert_eq!(b.tensor(&b).labels(), &["1⊗1", "1⊗a", "a⊗1", "a⊗a"]);
    }

    #[test]
    fn twist_powers() {
        let q = Field::Rational;
        let t = Twist::new(Matrix::from_i64_rows(q, &[&[2, 0], &[0, 1]])).unwrap();
        assert_eq!(t.pow(2), Matrix::from_i64_rows(q, &[&[4, 0], &[0, 1]]));
        assert!(t.pow(-3).mul(&t.pow(3)).unwrap().is_identity());
        assert!(Twist::new(Matrix::zeros(q, 2, 2)).is_err());
    }
}
