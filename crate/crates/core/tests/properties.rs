//! Property tests for the linear-algebra kernel, the constructions and the
//! file formats.

use proptest::prelude::*;

use hopfcert_core::braided::{check_quasitriangular, transmutation, QuasitriangularStructure};
use hopfcert_core::constructions::{
    function_algebra, group_algebra, quantum_double_crossed_module, smash_product,
    sweedler_algebra, sweedler_r_matrix, CayleyTable,
};
use hopfcert_core::hopf::check_hopf;
use hopfcert_core::io::{from_json, to_json, AlgebraFile, MapFile, TensorFile};
use hopfcert_core::linalg::{inverse, kernel_basis, rank};
use hopfcert_core::two_group::{build_strict_2group, check_crossed_module, check_strict_2group};
use hopfcert_core::{Field, LinearMap, Vector};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(7)),
        Just(Field::Prime(101))
    ]
}

fn dense(field: Field, rows: usize, cols: usize, values: Vec<i64>) -> LinearMap {
    let table: Vec<Vec<_>> = values
        .chunks(cols)
        .map(|row| {
            row.iter()
                .map(|v| field.parse(&v.to_string()).unwrap())
                .collect()
        })
        .collect();
    LinearMap::from_dense(field, &table[..rows]).unwrap()
}

/// A sparse-ish random matrix with small integer entries.
fn matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
    let entry = prop_oneof![3 => Just(0i64), 2 => -3i64..=3];
    prop::collection::vec(entry, rows * cols).prop_map(move |v| dense(field, rows, cols, v))
}

fn any_matrix() -> impl Strategy<Value = LinearMap> {
    (fields(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

fn groups() -> impl Strategy<Value = (String, CayleyTable)> {
    prop_oneof![
        (2usize..7).prop_map(|n| (format!("Z{n}"), CayleyTable::cyclic(n))),
        Just(("S3".to_string(), CayleyTable::symmetric(3))),
    ]
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in (fields(), 1usize..5, 1usize..5, 1usize..5, 1usize..5)
        .prop_flat_map(|(f, n0, n1, n2, n3)| (matrix(f, n0, n1), matrix(f, n1, n2), matrix(f, n2, n3))))
    {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_is_functorial((a, b, c, d) in (fields(), 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4)
        .prop_flat_map(|(f, p, q, r, s, t, u)| (matrix(f, p, q), matrix(f, r, s), matrix(f, q, t), matrix(f, s, u))))
    {
        let lhs = a.kron(&b).unwrap().compose(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_is_annihilated_and_rank_nullity_holds(f in any_matrix()) {
        let k = kernel_basis(&f);
        for v in k.vectors() {
            prop_assert!(f.apply(v).is_zero());
        }
        prop_assert_eq!(rank(&f) + k.dim(), f.cols());
    }

    #[test]
    fn kernel_is_canonical_under_row_order((f, order) in any_matrix()
        .prop_flat_map(|f| { let n = f.rows(); (Just(f), Just((0..n).collect::<Vec<_>>()).prop_shuffle()) }))
    {
        let field = f.field();
        let perm = LinearMap::from_fn(field, order.len(), order.len(), |j| Vector::unit(field, order.len(), order[j]));
        let shuffled = perm.compose(&f).unwrap();
        prop_assert_eq!(kernel_basis(&shuffled), kernel_basis(&f));
    }

    #[test]
    fn map_file_round_trips(f in any_matrix()) {
        let text = to_json(&MapFile::from_map(&f));
        let back = from_json::<MapFile>(&text).unwrap().to_map(None).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn tensor_file_round_trips((f, n, v) in (fields(), 1usize..4)
        .prop_flat_map(|(f, n)| (Just(f), Just(n), matrix(f, n * n, 1).prop_map(|m| m.column(0).clone()))))
    {
        let text = to_json(&TensorFile::from_vector(f, n, &v));
        let back = from_json::<TensorFile>(&text).unwrap().to_vector(Some(f)).unwrap();
        prop_assert_eq!(back, v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn group_and_function_algebras_are_hopf((label, g) in groups(), field in fields()) {
        for h in [group_algebra(field, &g, &label), function_algebra(field, &g, &label)] {
            prop_assert!(check_hopf(&h).passed());
            let s_inv = inverse(&h.antipode).unwrap().expect("antipode invertible");
            prop_assert!(h.antipode.compose(&s_inv).unwrap().is_identity());
        }
        let kg = group_algebra(field, &g, &label);
        prop_assert!(kg.is_cocommutative());
        prop_assert!(kg.antipode.compose(&kg.antipode).unwrap().is_identity());
    }

    #[test]
    fn algebra_file_round_trips((label, g) in groups(), field in fields()) {
        for h in [group_algebra(field, &g, &label), function_algebra(field, &g, &label)] {
            let back = from_json::<AlgebraFile>(&to_json(&AlgebraFile::from_algebra(&h)))
                .unwrap()
                .to_algebra(None)
                .unwrap();
            prop_assert_eq!(back, h);
        }
    }

    #[test]
    fn trivial_transmutation_keeps_structure_constants((label, g) in groups()) {
        let h = group_algebra(Field::Rational, &g, &label);
        let b = transmutation(&QuasitriangularStructure::trivial(h.clone())).unwrap();
        prop_assert_eq!(&b.mul, &h.mul);
        prop_assert_eq!(&b.comul, &h.comul);
        prop_assert_eq!(&b.antipode, &h.antipode);
    }

    #[test]
    fn sweedler_family_is_quasitriangular(num in -4i64..5, den in 1i64..4) {
        let q = Field::Rational;
        let alpha = q.parse(&format!("{num}/{den}")).unwrap();
        let h = sweedler_algebra(q).unwrap();
        let r = sweedler_r_matrix(q, &alpha).unwrap();
        let report = check_quasitriangular(&QuasitriangularStructure::new(h, r).unwrap());
        prop_assert!(report.passed(), "{}", report.to_text());
        prop_assert!(report.holds("counit.left") && report.holds("counit.right"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn doubles_of_cyclic_groups_are_strict_2groups(n in 2usize..5, field in fields()) {
        let d = quantum_double_crossed_module(field, &CayleyTable::cyclic(n), &format!("Z{n}")).unwrap();
        let cm = &d.crossed;
        prop_assert!(check_crossed_module(cm).passed());
        let smash = smash_product(&cm.source, &cm.target, &cm.action).unwrap();
        prop_assert_eq!(smash.dim, cm.source.dim * cm.target.dim);
        let qg = build_strict_2group(cm).unwrap();
        prop_assert!(qg.source.compose(&qg.inclusion).unwrap().is_identity());
        prop_assert!(qg.target.compose(&qg.inclusion).unwrap().is_identity());
        let report = check_strict_2group(&qg);
        prop_assert!(report.passed(), "{}", report.to_text());
    }
}
