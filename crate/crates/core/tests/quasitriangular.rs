use hom_yd::actions::{check_action_axioms, check_hyd, ActionKind};
use hom_yd::catalog::{kz2, kz2_bad_r_matrix, kz2_degenerate_form, kz2_dual_form, kz2_r_matrix};
use hom_yd::quasitriangular::{
    check_coaction_correspondence, check_form_correspondence, check_induced_twist_invariance, check_quasitriangular,
    check_r_matrix_correspondence, decompile_coaction, induced_action_from_form, induced_coaction,
    regular_module_with, CobraidingForm, RMatrix,
};
use hom_yd::{Error, Field, Matrix};

const FIELDS: [Field; 2] = [Field::Rational, Field::Prime(7)];

#[test]
fn the_z2_r_matrix_is_quasitriangular() {
    for f in FIELDS {
        let h = kz2(f);
        let r = kz2_r_matrix(f).unwrap();
        let rep = check_quasitriangular(&h, &r).unwrap();
        assert!(rep.passed(), "{}", rep.render(true));
        assert_eq!(rep.checks.len(), 6);
        for name in ["QHA1", "QHA2", "QHA3", "QHA4", "QHA5"] {
            assert!(rep.checks.iter().any(|c| c.name.starts_with(name)));
        }
        // ½ = 4 in GF(7)
        if f == Field::Prime(7) {
            assert_eq!(r.vector().get(0, 0), &f.from_i64(4));
        }
    }
    assert!(matches!(kz2_r_matrix(Field::Prime(2)), Err(Error::CharacteristicTwo { .. })));
}

#[test]
fn induced_coaction_round_trips_to_r() {
    for f in FIELDS {
        let h = kz2(f);
        let r = kz2_r_matrix(f).unwrap();
        let rho = induced_coaction(&h, &r).unwrap();
        assert_eq!(decompile_coaction(&h, &rho).unwrap(), r);
        assert!(check_hyd(&regular_module_with(rho.clone()).unwrap()).unwrap().passed());
        let back = check_coaction_correspondence(&h, &rho).unwrap();
        assert!(back.left.passed() && back.right.passed());
    }
}

#[test]
fn correspondence_on_good_trivial_and_bad_r() {
    for f in FIELDS {
        let h = kz2(f);
        let good = check_r_matrix_correspondence(&h, &kz2_r_matrix(f).unwrap()).unwrap();
        assert!(good.left.passed() && good.right.passed());
        let trivial = check_r_matrix_correspondence(&h, &RMatrix::trivial(h.bialgebra())).unwrap();
        assert!(trivial.left.passed() && trivial.right.passed());
        let bad = check_r_matrix_correspondence(&h, &kz2_bad_r_matrix(f)).unwrap();
        assert!(!bad.left.passed() && !bad.right.passed());
        assert!(bad.right.failures().all(|c| c.verdict.witness().is_some()));
    }
}

#[test]
fn non_induced_coactions_are_refused() {
    let f = Field::Rational;
    let h = kz2(f);
    let mut rho = induced_coaction(&h, &kz2_r_matrix(f).unwrap()).unwrap().matrix().clone();
    // Perturb the image of a only; ρ(1) still decompiles to some R.
    rho.set(0, 1, &rho.get(0, 1).clone() + &f.one());
    let shared = std::sync::Arc::new(h.bialgebra().clone());
    let co = hom_yd::actions::CoactionMap::new_unchecked(shared, h.basis().clone(), rho, Matrix::identity(f, 2)).unwrap();
    assert!(matches!(decompile_coaction(&h, &co), Err(Error::Invalid(_))));
}

#[test]
fn forms_induce_yetter_drinfeld_structures() {
    for f in FIELDS {
        let h = kz2(f);
        for sigma in [kz2_dual_form(f), CobraidingForm::counit(h.bialgebra())] {
            let rep = check_form_correspondence(&h, &sigma).unwrap();
            assert!(rep.passed(), "{}", rep.render(true));
        }
        // σ(aⁱ, aʲ) = (−1)^{ij} gives a▷a = −a.
        let act = induced_action_from_form(&h, &kz2_dual_form(f)).unwrap();
        assert_eq!(act.matrix().get(1, 3), &f.from_i64(-1));
        assert!(check_action_axioms(&act, ActionKind::Module).unwrap().passed());
        let inv = check_induced_twist_invariance(&h, &kz2_r_matrix(f).unwrap(), &kz2_dual_form(f)).unwrap();
        assert!(inv.passed());
    }
}

#[test]
fn degenerate_form_fails_module_laws() {
    let f = Field::Rational;
    let h = kz2(f);
    let rep = check_form_correspondence(&h, &kz2_degenerate_form(f)).unwrap();
    let failed: Vec<_> = rep.failures().map(|c| c.name.as_str()).collect();
    assert!(failed.iter().any(|n| n.contains("HM2")), "{failed:?}");
    assert!(failed.iter().any(|n| n.contains("HMA1")), "{failed:?}");
    let table = Matrix::from_i64_rows(f, &[&[1, 1], &[1, 0]]);
    assert_eq!(CobraidingForm::from_table(h.bialgebra(), &table).unwrap(), kz2_degenerate_form(f));
}
