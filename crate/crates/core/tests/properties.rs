use hom_yd::catalog::{self, taft_twisted};
use hom_yd::format::{parse, print};
use hom_yd::structures::{check_antipode, check_hom_bialgebra, solve_antipode};
use hom_yd::tensor::LegChain;
use hom_yd::{kron, maps_equal, Equality, Error, Field, Matrix, Scalar};
use proptest::prelude::*;

const GF7: Field = Field::Prime(7);

fn gf7_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0i64..7, rows * cols).prop_map(move |v| {
        Matrix::from_entries(GF7, rows, cols, v.into_iter().map(|x| GF7.from_i64(x)).collect()).unwrap()
    })
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Field::Rational.ratio(n, d).unwrap())
}

proptest! {
    #[test]
    fn kron_mixed_product(a in gf7_matrix(2, 3), b in gf7_matrix(2, 2), c in gf7_matrix(3, 2), d in gf7_matrix(2, 3)) {
        let lhs = kron(&a, &b).unwrap().mul(&kron(&c, &d).unwrap()).unwrap();
        let rhs = kron(&a.mul(&c).unwrap(), &b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_is_two_sided_or_singular(m in gf7_matrix(3, 3)) {
        match m.invert() {
            Ok(inv) => {
                prop_assert!(inv.mul(&m).unwrap().is_identity());
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert_eq!(m.rank(), 3);
            }
            Err(Error::Singular(_)) => prop_assert!(m.rank() < 3),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn maps_equal_finds_the_differing_entry(m in gf7_matrix(3, 4), r in 0usize..3, c in 0usize..4) {
        prop_assert!(maps_equal(&m, &m).unwrap().holds());
        let mut n = m.clone();
        n.set(r, c, m.get(r, c) + &GF7.one());
        match maps_equal(&m, &n).unwrap() {
            Equality::Differs { row, col, .. } => prop_assert_eq!((row, col), (r, c)),
            Equality::Equal => prop_assert!(false, "difference missed"),
        }
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalars_print_and_parse_back(a in rational(), v in -100i64..100) {
        prop_assert_eq!(Field::Rational.parse_scalar(&a.to_string()).unwrap(), a);
        let r = GF7.from_i64(v);
        prop_assert_eq!(GF7.parse_scalar(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn swapping_legs_twice_is_the_identity(m in gf7_matrix(6, 6)) {
        let back = LegChain::from_map(m.clone(), &[2, 3]).unwrap().swap(0).unwrap().swap(0).unwrap().finish();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn yau_twists_of_taft_stay_hopf(k in 1i64..7) {
        let h = taft_twisted(GF7, &GF7.from_i64(k)).unwrap();
        prop_assert!(check_hom_bialgebra(h.bialgebra()).unwrap().passed());
        prop_assert!(check_antipode(h.bialgebra(), h.antipode()).unwrap().passed());
        prop_assert_eq!(&solve_antipode(h.bialgebra()).unwrap(), h.antipode());
    }

    #[test]
    fn catalog_documents_round_trip(index in 0usize..14, p in 1i64..7, prime in any::<bool>()) {
        let entries = catalog::entries();
        let e = &entries[index % entries.len()];
        let f = if prime { GF7 } else { Field::Rational };
        let param = f.from_i64(p);
        let takes = !matches!(e.parameter, catalog::Parameter::None);
        let doc = catalog::document(e.id, f, takes.then_some(&param)).unwrap();
        let text = print(&doc);
        prop_assert_eq!(print(&parse(&text).unwrap()), text);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let text = "FORMAT 1\nFIELD Q\nBLOCK HOPF H\nDIM 2\nBASIS 1\n";
    match parse(text) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(matches!(parse("FORMAT 2\n"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(parse("FORMAT 1\nFIELD GF 4\n"), Err(Error::Parse { line: 2, .. })));
}
