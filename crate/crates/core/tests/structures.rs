use hom_yd::catalog::{
    kz2, line_algebra, line_comult_table, taft, taft_twist_map, taft_twisted, taft_twisted_comult_table,
};
use hom_yd::structures::{
    check_antipode, check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, convolution, solve_antipode,
    tensor_hom_algebra, yau_twist, Basis, HomAlgebra, HomBialgebra, HomCoalgebra,
};
use hom_yd::{Error, Field, Matrix, Verdict};

const Q: Field = Field::Rational;

fn witness_of(v: &Verdict) -> (Vec<&str>, Vec<&str>) {
    let w = v.witness().expect("failure carries a witness");
    (w.input.iter().map(String::as_str).collect(), w.output.iter().map(String::as_str).collect())
}

fn column(h: &Matrix, basis: &Basis, label: &str) -> Vec<i64> {
    let c = basis.index_of(label).unwrap();
    h.column_values(c).iter().map(|s| s.to_string().parse().unwrap()).collect()
}

#[test]
fn kz2_is_a_hopf_algebra() {
    let h = kz2(Q);
    assert!(check_hom_bialgebra(h.bialgebra()).unwrap().passed());
    assert!(check_antipode(h.bialgebra(), h.antipode()).unwrap().passed());
    // a·a = 1
    assert_eq!(h.bialgebra().algebra().product(1, 1), vec![Q.one(), Q.zero()]);
}

#[test]
fn swapping_twist_breaks_the_unit() {
    let h = kz2(Q);
    let a = h.bialgebra().algebra();
    let swap = Matrix::from_i64_rows(Q, &[&[0, 1], &[1, 0]]);
    let bad = HomAlgebra::new_unchecked(a.basis().clone(), a.mult().clone(), a.unit().clone(), swap).unwrap();
    let r = check_hom_algebra(&bad).unwrap();
    let v = r.verdict("HA1 unit α(1) = 1");
    assert!(!v.passed());
    assert_eq!(witness_of(v).1, vec!["1"]);
}

#[test]
fn line_counit_bumped_to_one_breaks_counitality() {
    let (_, c) = line_algebra(Q, &Q.from_i64(2)).unwrap();
    let counit = Matrix::from_i64_rows(Q, &[&[1, 1]]);
    let bad = HomCoalgebra::new_unchecked(c.basis().clone(), c.comult().clone(), counit, c.twist().map().clone()).unwrap();
    let r = check_hom_coalgebra(&bad).unwrap();
    assert!(!r.passed());
    let names: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
    assert!(names.iter().any(|n| n.contains("counit")), "{names:?}");
}

#[test]
fn line_algebra_alone_is_not_a_bialgebra() {
    let (a, c) = line_algebra(Q, &Q.from_i64(2)).unwrap();
    assert!(check_hom_algebra(&a).unwrap().passed());
    assert!(check_hom_coalgebra(&c).unwrap().passed());
    let b = HomBialgebra::new_unchecked(a, c).unwrap();
    let r = check_hom_bialgebra(&b).unwrap();
    let v = r.verdict("Δ multiplicative Δ(hh') = Δ(h)Δ(h')");
    let w = v.witness().unwrap();
    assert_eq!(w.input, vec!["z", "z"]);
    assert_eq!(w.output, vec!["z", "z"]);
    assert_eq!((w.left.to_string(), w.right.to_string()), ("0".to_string(), "32".to_string()));
    assert!(matches!(HomBialgebra::new(b.algebra().clone(), b.coalgebra().clone()), Err(Error::Axioms(_))));
}

#[test]
fn taft_twisted_structure_constants() {
    let k = Q.from_i64(3);
    let h = taft_twisted(Q, &k).unwrap();
    let b = h.basis();
    // μ_α(g, x) = k y
    let gx = h.bialgebra().algebra().product(b.index_of("g").unwrap(), b.index_of("x").unwrap());
    assert_eq!(gx, vec![Q.zero(), Q.zero(), Q.zero(), k.clone()]);
    // Δ_α(x) = k(x⊗g + 1⊗x)
    let bb = b.tensor(b);
    let dx = column(h.bialgebra().comult(), b, "x");
    for (i, v) in dx.iter().enumerate() {
        let want = if ["x⊗g", "1⊗x"].contains(&bb.label(i)) { 3 } else { 0 };
        assert_eq!(*v, want, "{}", bb.label(i));
    }
    for p in [1, 2, 3, -1] {
        let p = Q.from_i64(p);
        let h = taft_twisted(Q, &p).unwrap();
        let table = taft_twisted_comult_table().to_matrix(b, &p).unwrap();
        assert_eq!(&table, h.bialgebra().comult());
    }
}

#[test]
fn line_comultiplication_matches_its_table() {
    for l in [1, 2, 3] {
        let l = Q.from_i64(l);
        let (_, c) = line_algebra(Q, &l).unwrap();
        let table = line_comult_table().to_matrix(c.basis(), &l).unwrap();
        assert_eq!(&table, c.comult());
    }
}

#[test]
fn wrong_antipode_on_taft_twisted() {
    let h = taft_twisted(Q, &Q.from_i64(2)).unwrap();
    let mut s = h.antipode().clone();
    // S(x) = x in place of S(x) = y.
    let x = h.basis().index_of("x").unwrap();
    for r in 0..4 {
        s.set(r, x, if r == x { Q.one() } else { Q.zero() });
    }
    let r = check_antipode(h.bialgebra(), &s).unwrap();
    let bad: Vec<_> = r.failures().filter_map(|c| c.verdict.witness()).map(|w| w.input.clone()).collect();
    assert!(!bad.is_empty());
    assert!(bad.iter().all(|i| i == &vec!["x".to_string()]), "{bad:?}");
}

#[test]
fn convolution_with_the_antipode_is_unit_counit() {
    let h = taft_twisted(Q, &Q.from_i64(-1)).unwrap();
    let id = Matrix::identity(Q, 4);
    let ue = h.unit().mul(h.counit()).unwrap();
    assert_eq!(convolution(h.antipode(), &id, h.bialgebra()).unwrap(), ue);
    assert_eq!(convolution(&id, h.antipode(), h.bialgebra()).unwrap(), ue);
    // ε is the convolution unit.
    assert_eq!(convolution(&ue, &id, h.bialgebra()).unwrap(), h.twist().map().mul(h.twist().map()).unwrap());
}

#[test]
fn solved_antipode_is_the_printed_one() {
    for f in [Q, Field::Prime(7)] {
        for k in [1, 2, 3, -1] {
            let h = taft_twisted(f, &f.from_i64(k)).unwrap();
            assert_eq!(&solve_antipode(h.bialgebra()).unwrap(), h.antipode());
        }
    }
}

#[test]
fn tensor_algebra_of_line() {
    let (a, _) = line_algebra(Q, &Q.from_i64(2)).unwrap();
    let aa = tensor_hom_algebra(&a, &a).unwrap();
    assert!(check_hom_algebra(&aa).unwrap().passed());
    let b = aa.basis();
    let p = aa.product(b.index_of("z⊗1").unwrap(), b.index_of("1⊗z").unwrap());
    let zz = b.index_of("z⊗z").unwrap();
    assert_eq!(p[zz], Q.from_i64(4));
    assert!(p.iter().enumerate().all(|(i, v)| i == zz || v.is_zero()));
}

#[test]
fn yau_twist_refuses_affine_map() {
    let t = taft(Q);
    // γ(x) = x + 1
    let mut gamma = Matrix::identity(Q, 4);
    gamma.set(0, 2, Q.one());
    match yau_twist(&t, &gamma) {
        Err(Error::Precondition(r)) => assert!(!r.passed()),
        other => panic!("expected a refusal, got {other:?}"),
    }
    assert!(taft_twist_map(Q, &Q.zero()).is_err());
}

#[test]
fn prime_field_arithmetic_is_exact() {
    let f = Field::Prime(7);
    let h = taft_twisted(f, &f.from_i64(3)).unwrap();
    let inv = h.twist().inverse();
    assert_eq!(inv.mul(h.twist().map()).unwrap(), Matrix::identity(f, 4));
    // 3⁻¹ = 5 mod 7
    assert_eq!(inv.get(2, 2), &f.from_i64(5));
}
