use crate::error::{Error, Result};
use crate::matrix::{kron, Matrix};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::tensor::LegChain;

use super::{expect_field, expect_shape, Basis, Twist};

/// `Δ(e_i) = Σ c·e_j⊗e_k`, listed per `i` with nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComultMap {
    dim: usize,
    terms: Vec<Vec<(usize, usize, Scalar)>>,
}

impl ComultMap {
    pub fn new(dim: usize, terms: Vec<Vec<(usize, usize, Scalar)>>) -> Result<Self> {
        if terms.len() != dim {
            return Err(Error::shape(format!("{} comultiplication rows for dimension {dim}", terms.len())));
        }
        for (i, row) in terms.iter().enumerate() {
            for (t, (j, k, c)) in row.iter().enumerate() {
                if *j >= dim || *k >= dim {
                    return Err(Error::shape(format!("Δ(e{i}) names index beyond {dim}")));
                }
                if c.is_zero() {
                    return Err(Error::invalid(format!("Δ(e{i}) lists a zero coefficient")));
                }
                if row[..t].iter().any(|(jj, kk, _)| (jj, kk) == (j, k)) {
                    return Err(Error::invalid(format!("Δ(e{i}) lists ({j},{k}) twice")));
                }
            }
        }
        Ok(ComultMap { dim, terms })
    }

    pub fn terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.terms[i]
    }

    /// The `n² × n` matrix of `Δ`.
    pub fn to_matrix(&self, field: Field) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(field, n * n, n);
        for (i, row) in self.terms.iter().enumerate() {
            for (j, k, c) in row {
                m.set(j * n + k, i, c.clone());
            }
        }
        m
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let n = m.cols();
        expect_shape(m, n * n, n, "comultiplication")?;
        let terms = (0..n)
            .map(|i| {
                (0..n * n)
                    .filter(|&jk| !m.get(jk, i).is_zero())
                    .map(|jk| (jk / n, jk % n, m.get(jk, i).clone()))
                    .collect()
            })
            .collect();
        Ok(ComultMap { dim: n, terms })
    }
}

/// `(C, Δ, ε, β)`, checked or unchecked as for [`super::HomAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomCoalgebra {
    basis: Basis,
    comult: Matrix,
    counit: Matrix,
    twist: Twist,
}

impl HomCoalgebra {
    pub fn new(basis: Basis, comult: Matrix, counit: Matrix, twist: Matrix) -> Result<Self> {
        let c = HomCoalgebra::new_unchecked(basis, comult, counit, twist)?;
        let report = check_hom_coalgebra(&c)?;
        if !report.passed() {
            return Err(Error::Axioms(Box::new(report)));
        }
        Ok(c)
    }

    pub fn new_unchecked(basis: Basis, comult: Matrix, counit: Matrix, twist: Matrix) -> Result<Self> {
        let n = basis.dim();
        let field = comult.field();
        expect_shape(&comult, n * n, n, "comultiplication")?;
        expect_shape(&counit, 1, n, "counit")?;
        expect_shape(&twist, n, n, "twist")?;
        expect_field(&counit, field)?;
        expect_field(&twist, field)?;
        Ok(HomCoalgebra { basis, comult, counit, twist: Twist::new(twist)? })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn comult_map(&self) -> ComultMap {
        ComultMap::from_matrix(&self.comult).expect("validated shape")
    }

    pub(crate) fn with_basis(mut self, basis: Basis) -> Self {
        assert_eq!(basis.dim(), self.dim());
        self.basis = basis;
        self
    }
}

pub fn check_hom_coalgebra(c: &HomCoalgebra) -> Result<Report> {
    let n = c.dim();
    let b = c.basis();
    let beta = c.twist().map();
    let mut r = Report::new(format!("Hom-coalgebra on ({b})"));

    let lhs = c.comult().mul(beta)?;
    let rhs = kron(beta, beta)?.mul(c.comult())?;
    r.compare("HC1 comultiplicativity Δβ = (β⊗β)Δ", &lhs, &rhs, &[b], &[b, b])?;
    r.compare("HC1 counit εβ = ε", &c.counit().mul(beta)?, c.counit(), &[b], &[])?;

    let lhs = LegChain::from_map(c.comult().clone(), &[n, n])?
        .on(beta, 0)?
        .apply(c.comult(), 1, 1, &[n, n])?
        .finish();
    let rhs = LegChain::from_map(c.comult().clone(), &[n, n])?
        .apply(c.comult(), 0, 1, &[n, n])?
        .on(beta, 2)?
        .finish();
    r.compare("HC2 coassociativity (β⊗Δ)Δ = (Δ⊗β)Δ", &lhs, &rhs, &[b], &[b, b, b])?;

    let left = LegChain::from_map(c.comult().clone(), &[n, n])?.apply(c.counit(), 0, 1, &[])?.finish();
    let right = LegChain::from_map(c.comult().clone(), &[n, n])?.apply(c.counit(), 1, 1, &[])?.finish();
    r.compare("HC2 left counit (ε⊗id)Δ = β", &left, beta, &[b], &[b])?;
    r.compare("HC2 right counit (id⊗ε)Δ = β", &right, beta, &[b], &[b])?;
    Ok(r)
}

/// `(C⊗D, Δ(c⊗d) = c₁⊗d₁⊗c₂⊗d₂, α⊗β)`.
pub fn tensor_hom_coalgebra(c: &HomCoalgebra, d: &HomCoalgebra) -> Result<HomCoalgebra> {
    if c.field() != d.field() {
        return Err(Error::FieldMismatch { left: c.field(), right: d.field() });
    }
    let (m, n) = (c.dim(), d.dim());
    let comult = LegChain::new(c.field(), &[m, n])
        .apply(c.comult(), 0, 1, &[m, m])?
        .apply(d.comult(), 2, 1, &[n, n])?
        .permute(&[0, 2, 1, 3])?
        .finish();
    let counit = kron(c.counit(), d.counit())?;
    Ok(HomCoalgebra {
        basis: c.basis().tensor(d.basis()),
        comult,
        counit,
        twist: c.twist().tensor(d.twist()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group_like(f: Field) -> HomCoalgebra {
        let comult = ComultMap::new(2, vec![vec![(0, 0, f.one())], vec![(1, 1, f.one())]]).unwrap();
        HomCoalgebra::new(
            Basis::new(["1", "a"]).unwrap(),
            comult.to_matrix(f),
            Matrix::from_i64_rows(f, &[&[1, 1]]),
            Matrix::identity(f, 2),
        )
        .unwrap()
    }

    #[test]
    fn group_like_basis_passes() {
        let c = group_like(Field::Rational);
        assert!(check_hom_coalgebra(&c).unwrap().passed());
        assert_eq!(c.comult_map().to_matrix(c.field()), *c.comult());
    }

    #[test]
    fn comult_map_rejects_duplicates() {
        let f = Field::Rational;
        assert!(ComultMap::new(1, vec![vec![(0, 0, f.one()), (0, 0, f.one())]]).is_err());
        assert!(ComultMap::new(1, vec![vec![(0, 1, f.one())]]).is_err());
        assert!(ComultMap::new(1, vec![vec![(0, 0, f.zero())]]).is_err());
    }

    #[test]
    fn tensor_coalgebra_passes() {
        let c = group_like(Field::Rational);
        let t = tensor_hom_coalgebra(&c, &c).unwrap();
        assert!(check_hom_coalgebra(&t).unwrap().passed());
    }
}
