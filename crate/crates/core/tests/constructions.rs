use std::sync::Arc;

use hom_yd::actions::{check_action_axioms, check_coaction_axioms, ActionKind, ActionMap, CoactionKind, CoactionMap};
use hom_yd::catalog::{
    kz2, line_algebra, line_biproduct, line_biproduct_antipode_table, line_bundle, taft, taft_biproduct,
    taft_biproduct_antipode_table, taft_bundle, taft_twisted,
};
use hom_yd::constructions::{
    assemble_biproduct, check_action_symmetry_gate, check_biproduct_hypotheses, check_coaction_symmetry_gate,
    check_radford_conditions, check_t_conditions, radford_biproduct, smash_coproduct, smash_product, t_smash_coproduct,
    BiproductData, TwistMapT,
};
use hom_yd::structures::{check_antipode, check_hom_bialgebra, tensor_hom_algebra, tensor_hom_coalgebra, HomHopf};
use hom_yd::tensor::LegChain;
use hom_yd::{Error, Field, Matrix};

const Q: Field = Field::Rational;

fn element(dim: usize, at: usize, coeff: i64) -> Vec<hom_yd::Scalar> {
    (0..dim).map(|i| if i == at { Q.from_i64(coeff) } else { Q.zero() }).collect()
}

#[test]
fn regular_action_and_coaction() {
    let h = Arc::new(kz2(Q).bialgebra().clone());
    let act = ActionMap::regular(h.clone()).unwrap();
    assert!(check_action_axioms(&act, ActionKind::Module).unwrap().passed());
    let co = CoactionMap::regular(h.clone()).unwrap();
    assert!(check_coaction_axioms(&co, CoactionKind::Comodule).unwrap().passed());
    assert!(check_coaction_axioms(&co, CoactionKind::ComoduleAlgebra(h.algebra())).unwrap().passed());
}

#[test]
fn unscaled_line_coaction_fails_the_counit_law() {
    let l = Q.from_i64(2);
    let (a, _) = line_algebra(Q, &l).unwrap();
    let h = Arc::new(kz2(Q).bialgebra().clone());
    // ρ(1) = 1⊗1, ρ(z) = a⊗z
    let rho = Matrix::from_i64_rows(Q, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
    let co = CoactionMap::new_unchecked(h, a.basis().clone(), rho, a.twist().map().clone()).unwrap();
    let r = check_coaction_axioms(&co, CoactionKind::Comodule).unwrap();
    let v = r.verdict("HCM2 ε(m₋₁)m₀ = α_M(m)");
    let w = v.witness().unwrap();
    assert_eq!(w.input, vec!["z"]);
    assert_eq!((w.left.to_string(), w.right.to_string()), ("1".to_string(), "2".to_string()));
    assert!(CoactionMap::new(co.coacting().clone(), a.basis().clone(), co.matrix().clone(), a.twist().map().clone()).is_err());
}

#[test]
fn taft_smash_product_kills_x_squared() {
    for k in [1, 2, 3, -1] {
        let b = taft_bundle(Q, &Q.from_i64(k)).unwrap();
        let s = smash_product(b.data.algebra(), b.data.action()).unwrap().value;
        let basis = s.basis();
        let p = s.product(basis.index_of("x⊗1").unwrap(), basis.index_of("x⊗a").unwrap());
        assert!(p.iter().all(|v| v.is_zero()));
    }
}

#[test]
fn line_smash_product_of_a_and_z() {
    for l in [1, 2, 3] {
        let b = line_bundle(Q, &Q.from_i64(l)).unwrap();
        let s = smash_product(b.data.algebra(), b.data.action()).unwrap().value;
        let basis = s.basis();
        // (1⊗a)(z⊗1) = 1(a▷α⁻¹(z))⊗β⁻¹(a)1 = −l z⊗a
        let p = s.product(basis.index_of("1⊗a").unwrap(), basis.index_of("z⊗1").unwrap());
        assert_eq!(p, element(4, basis.index_of("z⊗a").unwrap(), -l));
    }
}

#[test]
fn t_smash_from_coaction_is_the_smash_coproduct() {
    for (c, co) in [
        {
            let b = taft_bundle(Q, &Q.from_i64(2)).unwrap();
            (b.data.coalgebra().clone(), b.data.coaction().clone())
        },
        {
            let b = line_bundle(Q, &Q.from_i64(3)).unwrap();
            (b.data.coalgebra().clone(), b.data.coaction().clone())
        },
    ] {
        let h = co.coacting().coalgebra().clone();
        let t = TwistMapT::from_coaction(&c, &co).unwrap();
        assert!(check_t_conditions(&c, &h, &t).unwrap().passed());
        let via_t = t_smash_coproduct(&c, &h, &t).unwrap().value;
        let direct = smash_coproduct(&c, &co).unwrap().value;
        assert_eq!(via_t.comult(), direct.comult());
        assert_eq!(via_t.counit(), direct.counit());
    }
}

#[test]
fn flip_twisted_by_a_non_comodule_map_fails() {
    let h = kz2(Q);
    let hc = h.bialgebra().coalgebra().clone();
    // With a nontrivial twist the plain flip already breaks C1.
    let line = line_bundle(Q, &Q.from_i64(2)).unwrap();
    let flip = TwistMapT::flip(line.data.coalgebra(), &hc).unwrap();
    assert!(!check_t_conditions(line.data.coalgebra(), &hc, &flip).unwrap().passed());

    let t = taft(Q);
    let c = t.bialgebra().coalgebra().clone();
    let flip = TwistMapT::flip(&c, &hc).unwrap();
    assert!(check_t_conditions(&c, &hc, &flip).unwrap().passed());
    let tensor = t_smash_coproduct(&c, &hc, &flip).unwrap().value;
    assert_eq!(tensor.comult(), tensor_hom_coalgebra(&c, &hc).unwrap().comult());
    // Follow the flip by h⊗c ↦ (1+a)h⊗c; c ↦ (1+a)⊗c is not coassociative.
    let left_a = LegChain::new(Q, &[2, 4])
        .insert(&Matrix::from_i64_rows(Q, &[&[1], &[1]]), 0, &[2])
        .unwrap()
        .apply(h.mult(), 0, 2, &[2])
        .unwrap()
        .finish();
    let t = TwistMapT::new(&c, &hc, left_a.mul(flip.matrix()).unwrap()).unwrap();
    let r = check_t_conditions(&c, &hc, &t).unwrap();
    let failed: Vec<_> = r.failures().map(|c| &c.name[..2]).collect();
    assert!(failed.contains(&"C2"), "{failed:?}");
    assert!(r.failures().all(|c| c.verdict.witness().is_some()));
    assert!(t_smash_coproduct(&c, &hc, &t).is_err());
}

#[test]
fn trivial_action_and_coaction_give_the_tensor_bialgebra() {
    let a = taft_twisted(Q, &Q.from_i64(2)).unwrap();
    let h = Arc::new(kz2(Q).bialgebra().clone());
    let alpha = a.twist().map().clone();
    let act = ActionMap::trivial(h.clone(), a.basis().clone(), alpha.clone()).unwrap();
    let co = CoactionMap::trivial(h.clone(), a.basis().clone(), alpha).unwrap();
    let d = BiproductData::new(a.bialgebra().algebra().clone(), a.bialgebra().coalgebra().clone(), act, co).unwrap();
    assert!(check_radford_conditions(&d).unwrap().passed());
    let b = radford_biproduct(&d).unwrap().value;
    let ta = tensor_hom_algebra(a.bialgebra().algebra(), h.algebra()).unwrap();
    let tc = tensor_hom_coalgebra(a.bialgebra().coalgebra(), h.coalgebra()).unwrap();
    assert_eq!(b.mult(), ta.mult());
    assert_eq!(b.comult(), tc.comult());
    assert_eq!(b.counit(), tc.counit());
}

#[test]
fn biproduct_antipodes_match_the_reference_tables() {
    for f in [Q, Field::Prime(7)] {
        for p in [1, 2, 3, -1] {
            let p = f.from_i64(p);
            let t = taft_biproduct(f, &p).unwrap();
            assert_eq!(&taft_biproduct_antipode_table().to_matrix(t.basis(), &p).unwrap(), t.antipode());
            assert!(check_antipode(t.bialgebra(), t.antipode()).unwrap().passed());
            let l = line_biproduct(f, &p).unwrap();
            assert_eq!(&line_biproduct_antipode_table().to_matrix(l.basis(), &p).unwrap(), l.antipode());
            assert!(check_antipode(l.bialgebra(), l.antipode()).unwrap().passed());
        }
    }
}

#[test]
fn assembled_and_gated_biproducts_coincide() {
    let b = taft_bundle(Q, &Q.from_i64(3)).unwrap();
    let assembled = assemble_biproduct(&b.data).unwrap();
    let gated = radford_biproduct(&b.data).unwrap();
    assert!(gated.gate.passed());
    assert_eq!(assembled.mult(), gated.value.mult());
    assert_eq!(assembled.comult(), gated.value.comult());
    assert!(check_hom_bialgebra(&assembled).unwrap().passed());
}

#[test]
fn mutated_data_is_refused_by_the_gate() {
    let b = hom_yd::catalog::taft_bundle_signed(Q, &Q.from_i64(2)).unwrap();
    assert!(check_biproduct_hypotheses(&b.data).unwrap().passed());
    let r = check_radford_conditions(&b.data).unwrap();
    let failed: Vec<_> = r.failures().map(|c| &c.name[..2]).collect();
    assert_eq!(failed, vec!["R4"]);
    match radford_biproduct(&b.data) {
        Err(Error::Precondition(gate)) => assert!(!gate.passed()),
        other => panic!("expected a refusal, got {other:?}"),
    }
    assert!(!check_hom_bialgebra(&assemble_biproduct(&b.data).unwrap()).unwrap().passed());
}

/// `h▷a = h₁aS(h₂)` on a classical Hopf algebra.
fn adjoint_action(h: &HomHopf) -> ActionMap {
    let n = h.dim();
    let m = LegChain::new(Q, &[n, n])
        .apply(h.comult(), 0, 1, &[n, n])
        .unwrap()
        .swap(1)
        .unwrap()
        .on(h.antipode(), 2)
        .unwrap()
        .apply(h.mult(), 0, 2, &[n])
        .unwrap()
        .apply(h.mult(), 0, 2, &[n])
        .unwrap()
        .finish();
    let shared = Arc::new(h.bialgebra().clone());
    ActionMap::new(shared, h.basis().clone(), m, Matrix::identity(Q, n)).unwrap()
}

#[test]
fn symmetry_gates() {
    // Kℤ₂ is cocommutative: its action on H_α passes the action gate, and the
    // gate agrees with the direct bialgebra check.
    let b = taft_bundle(Q, &Q.from_i64(2)).unwrap();
    let r = check_action_symmetry_gate(b.data.algebra(), b.data.coalgebra(), b.data.action()).unwrap();
    assert!(r.passed(), "{}", r.render(true));
    let r = check_coaction_symmetry_gate(b.data.algebra(), b.data.coalgebra(), b.data.coaction()).unwrap();
    assert!(r.passed(), "{}", r.render(true));

    // The Taft adjoint action is a module algebra structure, but the Taft
    // algebra is not cocommutative.
    let t = taft(Q);
    let ad = adjoint_action(&t);
    assert!(check_action_axioms(&ad, ActionKind::ModuleAlgebra(t.bialgebra().algebra())).unwrap().passed());
    let r = check_action_symmetry_gate(t.bialgebra().algebra(), t.bialgebra().coalgebra(), &ad).unwrap();
    assert!(!r.verdict("h₁⊗h₂▷a = h₂⊗h₁▷a").passed());
    assert!(r.verdict("gate agrees with the Hom-bialgebra check").passed());

    // A alone is not a Hom-bialgebra, so the gates refuse it.
    let l = line_bundle(Q, &Q.from_i64(2)).unwrap();
    assert!(matches!(
        check_action_symmetry_gate(l.data.algebra(), l.data.coalgebra(), l.data.action()),
        Err(Error::Precondition(_))
    ));
}
