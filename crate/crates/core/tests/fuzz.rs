use hom_yd::actions::check_hyd;
use hom_yd::braided::{carrier_module, check_bialgebra_equivalence, yd_tensor};
use hom_yd_testkit::acceptance::{biproduct_verdicts, compare_datum, fuzz_suite, FUZZ_INSTANCES};

#[test]
fn radford_conditions_decide_the_biproduct() {
    let suite = fuzz_suite().unwrap();
    assert!(suite.len() >= FUZZ_INSTANCES);
    let mut passing = 0;
    for inst in &suite {
        let (radford, bialgebra) = biproduct_verdicts(&inst.data).unwrap();
        assert_eq!(radford, bialgebra, "{}", inst.label);
        passing += usize::from(radford);
    }
    assert!(passing > 0 && passing < suite.len(), "{passing} of {}", suite.len());
    assert!(suite.iter().any(|i| !i.classical()));
}

#[test]
fn radford_conditions_match_the_braided_bialgebra_check() {
    for inst in fuzz_suite().unwrap() {
        if !inst.h().twist().pow(2).is_identity() {
            continue;
        }
        let e = check_bialgebra_equivalence(&inst.data).unwrap();
        assert!(e.agree(), "{}: {} vs {}", inst.label, e.left.passed(), e.right.passed());
    }
}

#[test]
fn untwisted_instances_agree_with_the_classical_oracle() {
    let mut problems = Vec::new();
    let mut compared = 0;
    for inst in fuzz_suite().unwrap().into_iter().filter(|i| i.classical()) {
        compared += compare_datum(&inst.label, &inst.hopf, &inst.data, &mut problems).unwrap();
    }
    assert!(compared > 100);
    assert!(problems.is_empty(), "{problems:#?}");
}

#[test]
fn tensor_products_of_fuzzed_modules_stay_yetter_drinfeld() {
    let suite = fuzz_suite().unwrap();
    let mut modules = Vec::new();
    for inst in &suite {
        let y = carrier_module(&inst.data).unwrap();
        if check_hyd(&y).unwrap().passed() {
            modules.push(y);
        }
    }
    let mut tensored = 0;
    for (i, m) in modules.iter().enumerate() {
        for n in modules[i..].iter().filter(|n| n.h() == m.h() && m.dim() * n.dim() <= 16).take(3) {
            let mn = yd_tensor(m, n).unwrap();
            assert!(check_hyd(&mn).unwrap().passed());
            tensored += 1;
        }
    }
    assert!(tensored >= 50, "only {tensored} products");
}
