use hopfeq::catalog::{
    dual_numbers, dual_numbers_h4, dual_numbers_trivial, dual_numbers_z2, dual_numbers_z2_action, example59_s3_grading,
    example59_z4_grading, sweedler,
};
use hopfeq::modulealg::{regular_action_on_dual, G0Data, ModuleStructure};
use hopfeq::structconst::Law;
use hopfeq::{Matrix, F5, Q};

fn q(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| Q::from(x)).collect()
}

fn diag(a: i64, b: i64) -> Matrix<Q> {
    Matrix::diagonal(&q(&[a, b]))
}

#[test]
fn obstruction_for_the_dual_of_fs3() {
    let z = example59_s3_grading::<Q>().dual_action().unwrap();
    assert!(z.check().passed());
    let h = z.hopf.names().iter().position(|s| s == "h_(123)").unwrap();
    let (x, y) = z.obstruction_basis(h, 1, 2);
    assert_eq!(x, q(&[0, 0, 0, 1]));
    assert_eq!(y, q(&[0, 0, 0, 0]));
    assert!(z.cocommutativity_witness().is_some());
}

#[test]
fn the_dual_of_fz4_gives_no_obstruction() {
    let z = example59_z4_grading::<Q>().dual_action().unwrap();
    assert_eq!(z.cocommutativity_witness(), None);
}

#[test]
fn dual_actions_of_example59_are_support_equivalent() {
    let z1 = example59_s3_grading::<Q>().dual_action().unwrap();
    let z2 = example59_z4_grading::<Q>().dual_action().unwrap();
    let e = z1.support_equivalent(&z2, &Matrix::identity(4)).unwrap();
    assert!(e.equivalent);
    let units: Vec<Matrix<Q>> = (0..4).map(|i| Matrix::unit(4, 4, i, i)).collect();
    let diagonal = hopfeq::Subspace::span_of_matrices(&units, 4, 4).unwrap();
    assert_eq!(z1.image_span(), diagonal);
    assert_eq!(z2.image_span(), diagonal);
}

#[test]
fn dual_number_cases() {
    assert_eq!(dual_numbers_trivial::<Q>().classify_dual_numbers().unwrap().case, 1);
    assert_eq!(dual_numbers_z2::<Q>().classify_dual_numbers().unwrap().case, 2);
    assert_eq!(dual_numbers_h4::<Q>().classify_dual_numbers().unwrap().case, 3);
}

#[test]
fn a_non_module_algebra_is_rejected_before_classification() {
    // c 1 = 1 + x, c x = -x, v = 0: a module, but c is not multiplicative
    let c = Matrix::from_rows(vec![q(&[1, 0]), q(&[1, -1])], 2).unwrap();
    let zero = Matrix::zeros(2, 2);
    let action = vec![Matrix::identity(2), c, zero.clone(), zero];
    let bad = ModuleStructure::new(dual_numbers(), sweedler(), action).unwrap();
    let report = bad.check();
    assert!(report.first(Law::ModuleMultiplicative).is_none());
    assert!(report.first(Law::ModuleAlgebraCompatibility).is_some());
    assert!(bad.classify_dual_numbers().is_err());
}

#[test]
fn an_action_that_is_not_a_module_is_rejected() {
    let good = dual_numbers_h4::<Q>();
    let mut action = good.action.clone();
    // v x = x, v 1 = 0: compatible with products but vc != -cv
    action[2] = diag(0, 1);
    action[3] = &action[1] * &action[2];
    let bad = ModuleStructure::new(dual_numbers(), sweedler(), action).unwrap();
    let report = bad.check();
    assert!(report.first(Law::ModuleMultiplicative).is_some());
    assert!(report.first(Law::ModuleAlgebraCompatibility).is_none());
    assert!(bad.classify_dual_numbers().is_err());
}

#[test]
fn z2_action_cocommutative_data() {
    let z = dual_numbers_z2::<Q>();
    let d = z.cocommutative_data(1000).unwrap();
    assert_eq!(d.l0_basis, vec![diag(0, 1)]);
    assert!(d.hypotheses_hold);
    assert!(matches!(d.g0, G0Data::Oracle { span_dim: 2, .. }));
    assert!(z.g0_member(&diag(1, 7)));
    assert!(!z.g0_member(&diag(1, 0)));
    assert!(!z.g0_member(&diag(2, 1)));
}

#[test]
fn z2_action_g0_over_f5() {
    let z = dual_numbers_z2::<F5>();
    let d = z.cocommutative_data(1000).unwrap();
    let G0Data::Enumerated { elements } = d.g0 else { panic!("finite field enumerates") };
    let want: Vec<Matrix<F5>> = (1..5).map(|l| Matrix::diagonal(&[F5::new(1), F5::new(l)])).collect();
    let mut got = elements.clone();
    got.sort_by_key(|m| m.get(1, 1).value());
    assert_eq!(got, want);
    // conjugation fixes the one derivation
    assert!(d.conjugation.iter().all(|c| *c == Matrix::identity(1)));
    assert!(!d.hypotheses_hold);
}

#[test]
fn universal_group_of_the_z2_action() {
    let a = dual_numbers_z2_action::<F5>();
    let g = a.enumerate_universal_group(1000).unwrap();
    assert_eq!(g.len(), 4);
    assert!(a.universal_group_member(&Matrix::diagonal(&[F5::new(1), F5::new(3)])));
}

#[test]
fn correspondence_is_an_involution() {
    for z in [dual_numbers_trivial::<Q>(), dual_numbers_z2(), dual_numbers_h4()] {
        let rho = z.to_coaction();
        let back = ModuleStructure::from_coaction(&rho);
        assert_eq!(back.action, z.action);
        assert_eq!(back.to_coaction().coeff_table(), rho.coeff_table());
    }
}

#[test]
fn unital_eigen_functional_is_the_counit() {
    let r = dual_numbers_h4::<Q>().check_unital_eigen().unwrap();
    assert!(r.common_eigenvector);
    assert_eq!(r.matches_counit, Some(true));
    assert!(!r.contradiction);
}

#[test]
fn finer_module_structures() {
    let triv = dual_numbers_trivial::<Q>();
    let z2 = dual_numbers_z2::<Q>();
    let h4 = dual_numbers_h4::<Q>();
    assert!(h4.finer_than(&h4).unwrap());
    assert!(h4.finer_than(&z2).unwrap());
    assert!(z2.finer_than(&triv).unwrap());
    assert!(!z2.finer_than(&h4).unwrap());
    // different acting algebras on the same A compare by span
    assert!(h4.support_equivalent(&z2, &Matrix::identity(2)).map(|e| !e.equivalent).unwrap());
    assert!(!triv.support_equivalent(&z2, &Matrix::identity(2)).unwrap().equivalent);
}

#[test]
fn regular_action_on_the_dual_is_faithful() {
    let z = regular_action_on_dual(&sweedler::<Q>());
    assert!(z.check().passed());
    assert_eq!(z.kernel_dim(), 0);
    let can = z.can_map().unwrap();
    assert_eq!(can.base_dim, 1);
    assert!(can.injective);
    assert!(can.bijective());
}
