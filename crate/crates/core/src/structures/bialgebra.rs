use std::ops::Deref;

use crate::error::{Error, Result};
use crate::matrix::{kron, Matrix};
use crate::report::{Report, Verdict};
use crate::scalar::Field;
use crate::tensor::LegChain;

use super::{check_hom_algebra, check_hom_coalgebra, expect_square, Basis, HomAlgebra, HomCoalgebra, Twist};

/// A Hom-algebra and Hom-coalgebra on one space with one twist `γ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomBialgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
}

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        let h = HomBialgebra::new_unchecked(algebra, coalgebra)?;
        let report = check_hom_bialgebra(&h)?;
        if !report.passed() {
            return Err(Error::Axioms(Box::new(report)));
        }
        Ok(h)
    }

    /// Only checks that both halves live on the same space with the same twist.
    pub fn new_unchecked(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch { left: algebra.field(), right: coalgebra.field() });
        }
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::shape("algebra and coalgebra dimensions differ"));
        }
        if algebra.twist() != coalgebra.twist() {
            return Err(Error::invalid("algebra and coalgebra twists differ"));
        }
        let basis = algebra.basis().clone();
        Ok(HomBialgebra { algebra, coalgebra: coalgebra.with_basis(basis) })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis(&self) -> &Basis {
        self.algebra.basis()
    }

    pub fn mult(&self) -> &Matrix {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &Matrix {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &Matrix {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &Matrix {
        self.coalgebra.counit()
    }

    pub fn twist(&self) -> &Twist {
        self.algebra.twist()
    }
}

/// A Hom-bialgebra with an antipode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomHopf {
    bialgebra: HomBialgebra,
    antipode: Matrix,
}

impl HomHopf {
    pub fn new(bialgebra: HomBialgebra, antipode: Matrix) -> Result<Self> {
        let h = HomHopf::new_unchecked(bialgebra, antipode)?;
        let report = check_antipode(&h.bialgebra, &h.antipode)?;
        if !report.passed() {
            return Err(Error::Axioms(Box::new(report)));
        }
        Ok(h)
    }

    pub fn new_unchecked(bialgebra: HomBialgebra, antipode: Matrix) -> Result<Self> {
        expect_square(&antipode, bialgebra.dim(), "antipode")?;
        super::expect_field(&antipode, bialgebra.field())?;
        Ok(HomHopf { bialgebra, antipode })
    }

    pub fn bialgebra(&self) -> &HomBialgebra {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// `S⁻¹`, when the antipode is bijective.
    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode
            .invert()
            .map_err(|_| Error::Singular("antipode is not invertible".into()))
    }
}

impl Deref for HomHopf {
    type Target = HomBialgebra;

    fn deref(&self) -> &HomBialgebra {
        &self.bialgebra
    }
}

/// Full report: algebra axioms, coalgebra axioms, and compatibility.
pub fn check_hom_bialgebra(h: &HomBialgebra) -> Result<Report> {
    let f = h.field();
    let n = h.dim();
    let b = h.basis();
    let mut r = Report::new(format!("Hom-bialgebra on ({b})"));
    r.absorb("", check_hom_algebra(h.algebra())?);
    r.absorb("", check_hom_coalgebra(h.coalgebra())?);

    let lhs = h.comult().mul(h.mult())?;
    let rhs = LegChain::new(f, &[n, n])
        .apply(h.comult(), 0, 1, &[n, n])?
        .apply(h.comult(), 2, 1, &[n, n])?
        .permute(&[0, 2, 1, 3])?
        .apply(h.mult(), 0, 2, &[n])?
        .apply(h.mult(), 1, 2, &[n])?
        .finish();
    r.compare("Δ multiplicative Δ(hh') = Δ(h)Δ(h')", &lhs, &rhs, &[b, b], &[b, b])?;
    r.compare("Δ unital Δ(1) = 1⊗1", &h.comult().mul(h.unit())?, &kron(h.unit(), h.unit())?, &[], &[b, b])?;
    let lhs = h.counit().mul(h.mult())?;
    r.compare("ε multiplicative ε(hh') = ε(h)ε(h')", &lhs, &kron(h.counit(), h.counit())?, &[b, b], &[])?;
    r.compare("ε unital ε(1) = 1", &h.counit().mul(h.unit())?, &Matrix::identity(f, 1), &[], &[])?;
    Ok(r)
}

/// The matrix of `h ↦ f(h₁)g(h₂)`.
pub fn convolution(f: &Matrix, g: &Matrix, h: &HomBialgebra) -> Result<Matrix> {
    let n = h.dim();
    expect_square(f, n, "convolution factor")?;
    expect_square(g, n, "convolution factor")?;
    Ok(LegChain::from_map(h.comult().clone(), &[n, n])?
        .on(f, 0)?
        .on(g, 1)?
        .apply(h.mult(), 0, 2, &[n])?
        .finish())
}

pub fn check_antipode(h: &HomBialgebra, s: &Matrix) -> Result<Report> {
    expect_square(s, h.dim(), "antipode")?;
    let b = h.basis();
    let id = Matrix::identity(h.field(), h.dim());
    let ue = h.unit().mul(h.counit())?;
    let mut r = Report::new(format!("antipode on ({b})"));
    r.compare("S(h₁)h₂ = ε(h)1", &convolution(s, &id, h)?, &ue, &[b], &[b])?;
    r.compare("h₁S(h₂) = ε(h)1", &convolution(&id, s, h)?, &ue, &[b], &[b])?;
    let gamma = h.twist().map();
    r.compare("Sγ = γS", &s.mul(gamma)?, &gamma.mul(s)?, &[b], &[b])?;
    Ok(r)
}

/// Solves the antipode equations for `S` exactly; fails unless the solution
/// is unique.
pub fn solve_antipode(h: &HomBialgebra) -> Result<Matrix> {
    let f = h.field();
    let n = h.dim();
    let gamma = h.twist().map();
    let ue = h.unit().mul(h.counit())?;
    // Unknown s[r][c] sits at index r·n + c. Each equation is linear in S, so
    // its coefficient column is the image of the corresponding matrix unit.
    let unit_matrix = |idx: usize| {
        let mut e = Matrix::zeros(f, n, n);
        e.set(idx / n, idx % n, f.one());
        e
    };
    let id = Matrix::identity(f, n);
    let eqs = 3 * n * n;
    let mut system = Matrix::zeros(f, eqs, n * n);
    for idx in 0..n * n {
        let e = unit_matrix(idx);
        let images = [
            convolution(&e, &id, h)?,
            convolution(&id, &e, h)?,
            e.mul(gamma)?.sub(&gamma.mul(&e)?)?,
        ];
        for (block, img) in images.iter().enumerate() {
            for (k, v) in img.entries().iter().enumerate() {
                if !v.is_zero() {
                    system.set(block * n * n + k, idx, v.clone());
                }
            }
        }
    }
    let mut rhs = Matrix::zeros(f, eqs, 1);
    for (k, v) in ue.entries().iter().enumerate() {
        rhs.set(k, 0, v.clone());
        rhs.set(n * n + k, 0, v.clone());
    }
    let sol = system.solve_unique(&rhs).map_err(|e| Error::invalid(format!("antipode: {e}")))?;
    Ok(Matrix::from_fn(f, n, n, |r, c| sol.get(r * n + c, 0).clone()))
}

/// Yau twist of a classical Hopf algebra along a Hopf automorphism `γ`:
/// `μ_γ = γ∘μ`, `Δ_γ = Δ∘γ`, twist `γ`.
pub fn yau_twist(h: &HomHopf, gamma: &Matrix) -> Result<HomHopf> {
    if !h.twist().is_identity() {
        return Err(Error::invalid("Yau twist needs a classical (identity-twisted) input"));
    }
    expect_square(gamma, h.dim(), "twisting automorphism")?;
    let b = h.basis();
    let mut r = Report::new(format!("Hopf automorphism of ({b})"));
    r.push("invertible", Verdict::from_bool(gamma.invert().is_ok(), "γ is singular"));
    r.compare("γ(hh') = γ(h)γ(h')", &gamma.mul(h.mult())?, &h.mult().mul(&kron(gamma, gamma)?)?, &[b, b], &[b])?;
    r.compare("γ(1) = 1", &gamma.mul(h.unit())?, h.unit(), &[], &[b])?;
    r.compare("Δγ = (γ⊗γ)Δ", &h.comult().mul(gamma)?, &kron(gamma, gamma)?.mul(h.comult())?, &[b], &[b, b])?;
    r.compare("εγ = ε", &h.counit().mul(gamma)?, h.counit(), &[b], &[])?;
    r.compare("Sγ = γS", &h.antipode().mul(gamma)?, &gamma.mul(h.antipode())?, &[b], &[b])?;
    if !r.passed() {
        return Err(Error::Precondition(Box::new(r)));
    }
    let alg = HomAlgebra::new_unchecked(b.clone(), gamma.mul(h.mult())?, h.unit().clone(), gamma.clone())?;
    let coalg = HomCoalgebra::new_unchecked(b.clone(), h.comult().mul(gamma)?, h.counit().clone(), gamma.clone())?;
    let bi = HomBialgebra::new(alg, coalg)?;
    HomHopf::new(bi, h.antipode().clone())
}
