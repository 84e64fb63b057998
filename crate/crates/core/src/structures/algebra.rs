use crate::error::{Error, Result};
use crate::matrix::{kron, Matrix};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::tensor::LegChain;

use super::{expect_field, expect_shape, Basis, Twist};

/// Structure constants `e_i·e_j = Σ_k μ[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultCube {
    dim: usize,
    entries: Vec<Scalar>,
}

impl MultCube {
    pub fn zeros(field: Field, dim: usize) -> Self {
        MultCube { dim, entries: vec![field.zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.dim;
        self.entries[(i * n + j) * n + k] = v;
    }

    /// The `n × n²` matrix of `μ`.
    pub fn to_matrix(&self, field: Field) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(field, n, n * n, |k, ij| self.get(ij / n, ij % n, k).clone())
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let n = m.rows();
        expect_shape(m, n, n * n, "multiplication")?;
        let mut cube = MultCube::zeros(m.field(), n);
        for k in 0..n {
            for ij in 0..n * n {
                cube.set(ij / n, ij % n, k, m.get(k, ij).clone());
            }
        }
        Ok(cube)
    }
}

/// `(A, μ, 1_A, α)`. Construct with [`HomAlgebra::new`], which refuses
/// structures failing the axioms; [`HomAlgebra::new_unchecked`] only
/// validates shapes and invertibility of `α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomAlgebra {
    basis: Basis,
    mult: Matrix,
    unit: Matrix,
    twist: Twist,
}

impl HomAlgebra {
    pub fn new(basis: Basis, mult: Matrix, unit: Matrix, twist: Matrix) -> Result<Self> {
        let a = HomAlgebra::new_unchecked(basis, mult, unit, twist)?;
        let report = check_hom_algebra(&a)?;
        if !report.passed() {
            return Err(Error::Axioms(Box::new(report)));
        }
        Ok(a)
    }

    pub fn new_unchecked(basis: Basis, mult: Matrix, unit: Matrix, twist: Matrix) -> Result<Self> {
        let n = basis.dim();
        let field = mult.field();
        expect_shape(&mult, n, n * n, "multiplication")?;
        expect_shape(&unit, n, 1, "unit")?;
        expect_shape(&twist, n, n, "twist")?;
        expect_field(&unit, field)?;
        expect_field(&twist, field)?;
        Ok(HomAlgebra { basis, mult, unit, twist: Twist::new(twist)? })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn cube(&self) -> MultCube {
        MultCube::from_matrix(&self.mult).expect("validated shape")
    }

    /// Product of two basis elements as a coefficient vector.
    pub fn product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mult.column_values(i * self.dim() + j)
    }
}

pub fn check_hom_algebra(a: &HomAlgebra) -> Result<Report> {
    let f = a.field();
    let n = a.dim();
    let b = a.basis();
    let alpha = a.twist().map();
    let mut r = Report::new(format!("Hom-algebra on ({b})"));

    let lhs = alpha.mul(a.mult())?;
    let rhs = a.mult().mul(&kron(alpha, alpha)?)?;
    r.compare("HA1 multiplicativity α(aa') = α(a)α(a')", &lhs, &rhs, &[b, b], &[b])?;
    r.compare("HA1 unit α(1) = 1", &alpha.mul(a.unit())?, a.unit(), &[], &[b])?;

    let lhs = LegChain::new(f, &[n, n, n])
        .apply(a.mult(), 1, 2, &[n])?
        .on(alpha, 0)?
        .apply(a.mult(), 0, 2, &[n])?
        .finish();
    let rhs = LegChain::new(f, &[n, n, n])
        .apply(a.mult(), 0, 2, &[n])?
        .on(alpha, 1)?
        .apply(a.mult(), 0, 2, &[n])?
        .finish();
    r.compare("HA2 associativity α(a)(a'a'') = (aa')α(a'')", &lhs, &rhs, &[b, b, b], &[b])?;

    let right = LegChain::new(f, &[n]).insert(a.unit(), 1, &[n])?.apply(a.mult(), 0, 2, &[n])?.finish();
    let left = LegChain::new(f, &[n]).insert(a.unit(), 0, &[n])?.apply(a.mult(), 0, 2, &[n])?.finish();
    r.compare("HA2 right unit a1 = α(a)", &right, alpha, &[b], &[b])?;
    r.compare("HA2 left unit 1a = α(a)", &left, alpha, &[b], &[b])?;
    Ok(r)
}

/// `(A⊗B, (a⊗b)(a'⊗b') = aa'⊗bb', α⊗β)`.
pub fn tensor_hom_algebra(a: &HomAlgebra, b: &HomAlgebra) -> Result<HomAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch { left: a.field(), right: b.field() });
    }
    let (m, n) = (a.dim(), b.dim());
    let mult = LegChain::new(a.field(), &[m, n, m, n])
        .permute(&[0, 2, 1, 3])?
        .apply(a.mult(), 0, 2, &[m])?
        .apply(b.mult(), 1, 2, &[n])?
        .finish();
    let unit = kron(a.unit(), b.unit())?;
    let twist = a.twist().tensor(b.twist());
    Ok(HomAlgebra { basis: a.basis().tensor(b.basis()), mult, unit, twist })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kz2(f: Field) -> HomAlgebra {
        let mult = Matrix::from_i64_rows(f, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let unit = Matrix::from_i64_rows(f, &[&[1], &[0]]);
        HomAlgebra::new(Basis::new(["1", "a"]).unwrap(), mult, unit, Matrix::identity(f, 2)).unwrap()
    }

    #[test]
    fn group_algebra_passes() {
        let a = kz2(Field::Rational);
        assert!(check_hom_algebra(&a).unwrap().passed());
        assert_eq!(a.product(1, 1), vec![Field::Rational.one(), Field::Rational.zero()]);
    }

    #[test]
    fn swapping_twist_fails_unit_law() {
        let f = Field::Rational;
        let a = kz2(f);
        let swap = Matrix::from_i64_rows(f, &[&[0, 1], &[1, 0]]);
        let bad = HomAlgebra::new_unchecked(a.basis().clone(), a.mult().clone(), a.unit().clone(), swap.clone())
            .unwrap();
        let r = check_hom_algebra(&bad).unwrap();
        let w = r.verdict("HA1 unit α(1) = 1").witness().unwrap();
        assert_eq!(w.output, vec!["1"]);
        assert!(HomAlgebra::new(a.basis().clone(), a.mult().clone(), a.unit().clone(), swap).is_err());
    }

    #[test]
    fn cube_matrix_round_trip() {
        let a = kz2(Field::Rational);
        assert_eq!(a.cube().to_matrix(a.field()), *a.mult());
    }

    #[test]
    fn tensor_of_group_algebras() {
        let a = kz2(Field::Rational);
        let t = tensor_hom_algebra(&a, &a).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.unit().column_values(0)[0], Field::Rational.one());
        assert!(check_hom_algebra(&t).unwrap().passed());
    }
}
