//! Quasitriangular structures and their induced coactions; bilinear forms and
//! their induced actions.
//!
//! No list of cobraiding axioms is built in. A form `σ` is judged by
//! [`check_form_correspondence`]: the induced action `h▷g = σ(g₁, β⁻³(h))g₂`
//! must make `H` a module Hom-algebra and, with `Δ_H` as coaction, a
//! Hom-Yetter-Drinfeld module over itself.

use std::sync::Arc;

use crate::actions::{
    check_action_axioms, check_coaction_axioms, check_hyd, ActionKind, ActionMap, CoactionKind, CoactionMap,
    YDModule,
};
use crate::error::{Error, Result};
use crate::matrix::{kron, Matrix};
use crate::report::{compare_maps, Equivalence, Report};
use crate::structures::{expect_field, expect_shape, HomBialgebra, HomHopf};
use crate::tensor::LegChain;

/// An element `R = R¹⊗R²` of `H⊗H`, as a column of length `n²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    vector: Matrix,
}

impl RMatrix {
    pub fn new(h: &HomBialgebra, vector: Matrix) -> Result<Self> {
        let n = h.dim();
        expect_shape(&vector, n * n, 1, "R-matrix")?;
        expect_field(&vector, h.field())?;
        Ok(RMatrix { vector })
    }

    /// `1⊗1`.
    pub fn trivial(h: &HomBialgebra) -> Self {
        RMatrix { vector: kron(h.unit(), h.unit()).expect("same field") }
    }

    pub fn vector(&self) -> &Matrix {
        &self.vector
    }
}

/// A bilinear form `σ: H⊗H → K`, as a row of length `n²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobraidingForm {
    row: Matrix,
}

impl CobraidingForm {
    pub fn new(h: &HomBialgebra, row: Matrix) -> Result<Self> {
        let n = h.dim();
        expect_shape(&row, 1, n * n, "bilinear form")?;
        expect_field(&row, h.field())?;
        Ok(CobraidingForm { row })
    }

    /// From the table `σ(e_i, e_j)`.
    pub fn from_table(h: &HomBialgebra, table: &Matrix) -> Result<Self> {
        let n = h.dim();
        expect_shape(table, n, n, "bilinear form table")?;
        let row = Matrix::from_fn(h.field(), 1, n * n, |_, ij| table.get(ij / n, ij % n).clone());
        CobraidingForm::new(h, row)
    }

    /// `σ = ε⊗ε`.
    pub fn counit(h: &HomBialgebra) -> Self {
        CobraidingForm { row: kron(h.counit(), h.counit()).expect("same field") }
    }

    pub fn row(&self) -> &Matrix {
        &self.row
    }
}

/// QHA1–QHA5 for `R` on the Hom-Hopf algebra `H`.
pub fn check_quasitriangular(h: &HomHopf, r_mat: &RMatrix) -> Result<Report> {
    let f = h.field();
    let n = h.dim();
    let b = h.basis();
    let beta = h.twist().map();
    let rv = r_mat.vector();
    let mut r = Report::new(format!("quasitriangular structure on ({b})"));

    let left = LegChain::from_map(rv.clone(), &[n, n])?.apply(h.counit(), 0, 1, &[])?.finish();
    let right = LegChain::from_map(rv.clone(), &[n, n])?.apply(h.counit(), 1, 1, &[])?.finish();
    r.compare("QHA1 ε(R¹)R² = 1", &left, h.unit(), &[], &[b])?;
    r.compare("QHA1 R¹ε(R²) = 1", &right, h.unit(), &[], &[b])?;

    let two = LegChain::from_map(rv.clone(), &[n, n])?.insert(rv, 2, &[n, n])?;
    let lhs = LegChain::from_map(rv.clone(), &[n, n])?
        .apply(h.comult(), 0, 1, &[n, n])?
        .on(beta, 2)?
        .finish();
    let rhs = two
        .clone()
        .permute(&[0, 2, 1, 3])?
        .on(beta, 0)?
        .on(beta, 1)?
        .apply(h.mult(), 2, 2, &[n])?
        .finish();
    r.compare("QHA2 R¹₁⊗R¹₂⊗β(R²) = β(R¹)⊗β(r¹)⊗R²r²", &lhs, &rhs, &[], &[b, b, b])?;

    let lhs = LegChain::from_map(rv.clone(), &[n, n])?
        .apply(h.comult(), 1, 1, &[n, n])?
        .on(beta, 0)?
        .finish();
    let rhs = two
        .permute(&[0, 2, 3, 1])?
        .apply(h.mult(), 0, 2, &[n])?
        .on(beta, 1)?
        .on(beta, 2)?
        .finish();
    r.compare("QHA3 β(R¹)⊗R²₁⊗R²₂ = R¹r¹⊗β(r²)⊗β(R²)", &lhs, &rhs, &[], &[b, b, b])?;

    let base = LegChain::new(f, &[n]).apply(h.comult(), 0, 1, &[n, n])?.insert(rv, 2, &[n, n])?;
    let lhs = base
        .clone()
        .permute(&[1, 2, 0, 3])?
        .apply(h.mult(), 0, 2, &[n])?
        .apply(h.mult(), 1, 2, &[n])?
        .finish();
    let rhs = base
        .permute(&[2, 0, 3, 1])?
        .apply(h.mult(), 0, 2, &[n])?
        .apply(h.mult(), 1, 2, &[n])?
        .finish();
    r.compare("QHA4 h₂R¹⊗h₁R² = R¹h₁⊗R²h₂", &lhs, &rhs, &[b], &[b, b])?;

    r.compare("QHA5 (β⊗β)(R) = R", &kron(beta, beta)?.mul(rv)?, rv, &[], &[b, b])?;
    Ok(r)
}

fn arc(h: &HomHopf) -> Arc<HomBialgebra> {
    Arc::new(h.bialgebra().clone())
}

fn induced_matrix(h: &HomBialgebra, r_mat: &RMatrix) -> Result<Matrix> {
    let n = h.dim();
    Ok(LegChain::new(h.field(), &[n])
        .insert(r_mat.vector(), 0, &[n, n])?
        .swap(0)?
        .on(&h.twist().pow(-3), 0)?
        .apply(h.mult(), 1, 2, &[n])?
        .finish())
}

/// `ρ(h) = β⁻³(R²)⊗R¹h`, a coaction of `H` on itself with twist `β`. Not
/// gated: pair with [`check_r_matrix_correspondence`].
pub fn induced_coaction(h: &HomHopf, r_mat: &RMatrix) -> Result<CoactionMap> {
    let bi = arc(h);
    let matrix = induced_matrix(&bi, r_mat)?;
    CoactionMap::new_unchecked(bi.clone(), bi.basis().clone(), matrix, bi.twist().map().clone())
}

/// The Yetter-Drinfeld candidate `(H, μ_H, ρ, β)`.
pub fn regular_module_with(coaction: CoactionMap) -> Result<YDModule> {
    let act = ActionMap::regular(coaction.coacting().clone())?;
    YDModule::new_unchecked(act, coaction)
}

/// Recovers `R = flip((β³⊗β⁻¹)ρ(1))` from a coaction of the induced shape.
pub fn decompile_coaction(h: &HomHopf, coact: &CoactionMap) -> Result<RMatrix> {
    if coact.coacting().as_ref() != h.bialgebra() || coact.carrier() != h.basis() {
        return Err(Error::invalid("coaction is not a self-coaction of this Hom-Hopf algebra"));
    }
    let n = h.dim();
    let beta = h.twist();
    let vector = LegChain::from_map(coact.matrix().mul(h.unit())?, &[n, n])?
        .on(&beta.pow(3), 0)?
        .on(beta.inverse(), 1)?
        .swap(0)?
        .finish();
    let r_mat = RMatrix::new(h, vector)?;
    if induced_matrix(h, &r_mat)? != *coact.matrix() || coact.twist() != h.twist() {
        return Err(Error::invalid("shape not induced: coaction is not h ↦ β⁻³(R²)⊗R¹h for any R"));
    }
    Ok(r_mat)
}

fn coaction_side(coact: &CoactionMap) -> Result<Report> {
    let h = coact.coacting().clone();
    let mut r = Report::new(format!("induced coaction on ({})", h.basis()));
    r.absorb("comodule Hom-coalgebra", check_coaction_axioms(coact, CoactionKind::ComoduleCoalgebra(h.coalgebra()))?);
    let y = regular_module_with(coact.clone())?;
    r.absorb("(H, μ, ρ, β)", check_hyd(&y)?);
    Ok(r)
}

/// QHA1–5 for `R` versus the induced coaction being a comodule Hom-coalgebra
/// and making `H` a Hom-Yetter-Drinfeld module over itself.
pub fn check_r_matrix_correspondence(h: &HomHopf, r_mat: &RMatrix) -> Result<Equivalence> {
    let left = check_quasitriangular(h, r_mat)?;
    let right = coaction_side(&induced_coaction(h, r_mat)?)?;
    Ok(Equivalence { left, right })
}

/// The reverse direction: decompile `R` from a coaction of the induced shape
/// and compare. Fails with "shape not induced" otherwise.
pub fn check_coaction_correspondence(h: &HomHopf, coact: &CoactionMap) -> Result<Equivalence> {
    let r_mat = decompile_coaction(h, coact)?;
    let left = check_quasitriangular(h, &r_mat)?;
    let right = coaction_side(coact)?;
    Ok(Equivalence { left, right })
}

/// `h▷g = σ(g₁, β⁻³(h))g₂`, an action of `H` on itself with twist `β`.
pub fn induced_action_from_form(h: &HomHopf, sigma: &CobraidingForm) -> Result<ActionMap> {
    let bi = arc(h);
    let n = bi.dim();
    let matrix = LegChain::new(bi.field(), &[n, n])
        .apply(bi.comult(), 1, 1, &[n, n])?
        .on(&bi.twist().pow(-3), 0)?
        .permute(&[1, 0, 2])?
        .apply(sigma.row(), 0, 2, &[])?
        .finish();
    ActionMap::new_unchecked(bi.clone(), bi.basis().clone(), matrix, bi.twist().map().clone())
}

/// The induced action is a module Hom-algebra structure and
/// `(H, ▷, Δ_H, β)` is a Hom-Yetter-Drinfeld module.
pub fn check_form_correspondence(h: &HomHopf, sigma: &CobraidingForm) -> Result<Report> {
    let act = induced_action_from_form(h, sigma)?;
    let bi = act.acting().clone();
    let mut r = Report::new(format!("bilinear form on ({})", bi.basis()));
    r.absorb("module Hom-algebra", check_action_axioms(&act, ActionKind::ModuleAlgebra(bi.algebra()))?);
    let y = YDModule::new_unchecked(act, CoactionMap::regular(bi)?)?;
    r.absorb("(H, ▷, Δ, β)", check_hyd(&y)?);
    Ok(r)
}

/// `ρ∘β = (β⊗β)∘ρ` for the induced coaction.
pub fn check_induced_twist_invariance(h: &HomHopf, r_mat: &RMatrix, sigma: &CobraidingForm) -> Result<Report> {
    let b = h.basis();
    let beta = h.twist().map();
    let rho = induced_coaction(h, r_mat)?;
    let act = induced_action_from_form(h, sigma)?;
    let mut r = Report::new(format!("twist invariance of induced structures on ({b})"));
    r.push(
        "ρβ = (β⊗β)ρ",
        compare_maps(&rho.matrix().mul(beta)?, &kron(beta, beta)?.mul(rho.matrix())?, &[b], &[b, b])?,
    );
    r.push(
        "β(h▷g) = β(h)▷β(g)",
        compare_maps(&beta.mul(act.matrix())?, &act.matrix().mul(&kron(beta, beta)?)?, &[b, b], &[b])?,
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::kz2;
    use crate::scalar::Field;

    #[test]
    fn r_matrix_shape_is_checked() {
        let f = Field::Rational;
        let h = kz2(f);
        assert!(matches!(RMatrix::new(h.bialgebra(), Matrix::zeros(f, 3, 1)), Err(Error::Shape(_))));
        assert!(RMatrix::new(h.bialgebra(), Matrix::zeros(Field::Prime(7), 4, 1)).is_err());
    }

    #[test]
    fn trivial_r_induces_the_trivial_coaction() {
        let f = Field::Rational;
        let h = kz2(f);
        let rho = induced_coaction(&h, &RMatrix::trivial(h.bialgebra())).unwrap();
        let trivial = CoactionMap::trivial(arc(&h), h.basis().clone(), Matrix::identity(f, 2)).unwrap();
        assert_eq!(rho.matrix(), trivial.matrix());
        assert_eq!(decompile_coaction(&h, &rho).unwrap(), RMatrix::trivial(h.bialgebra()));
    }

    #[test]
    fn counit_form_induces_the_trivial_action() {
        let f = Field::Prime(7);
        let h = kz2(f);
        let act = induced_action_from_form(&h, &CobraidingForm::counit(h.bialgebra())).unwrap();
        let trivial = ActionMap::trivial(arc(&h), h.basis().clone(), Matrix::identity(f, 2)).unwrap();
        assert_eq!(act.matrix(), trivial.matrix());
    }
}
