use hopfeq::catalog::{
    dual_numbers, dual_numbers_h4, dual_numbers_trivial, dual_numbers_z2, example59_s3_grading, example59_z4_grading,
    m2_z2_grading,
};
use hopfeq::grading::Grading;
use hopfeq::hident::{
    codim, codim_equiv_check, codim_series, dual_numbers_invariant_ideal_dim, graded_codim, growth_check, transport_map,
    CodimConfig, GrowthWindow, MultilinearHPolynomial,
};
use hopfeq::structconst::FiniteGroup;
use hopfeq::{Error, Matrix, Q};

fn cfg() -> CodimConfig {
    CodimConfig::default()
}

#[test]
fn codimension_sequences_of_the_dual_numbers() {
    let triv: Vec<usize> = (1..=5).map(|n| codim(&dual_numbers_trivial::<Q>(), n, &cfg()).unwrap()).collect();
    assert_eq!(triv, vec![1, 1, 1, 1, 1]);
    let z2: Vec<usize> = (1..=5).map(|n| codim(&dual_numbers_z2::<Q>(), n, &cfg()).unwrap()).collect();
    assert_eq!(z2, vec![2, 3, 4, 5, 6]);
    let h4: Vec<usize> = (1..=5).map(|n| codim(&dual_numbers_h4::<Q>(), n, &cfg()).unwrap()).collect();
    assert_eq!(h4, vec![3, 7, 15, 31, 63]);
}

#[test]
fn degree_seven_exceeds_the_default_budget() {
    let e = codim(&dual_numbers_h4::<Q>(), 7, &cfg()).unwrap_err();
    assert!(matches!(e, Error::BudgetExceeded { .. }));
}

#[test]
fn growth_verdicts() {
    let h4 = dual_numbers_h4::<Q>();
    let d = dual_numbers_invariant_ideal_dim(&h4).unwrap();
    assert_eq!(d, 0);
    let rep = codim_series(&h4, 5, Some(d), &cfg()).unwrap();
    assert_eq!(rep.ratios.last().unwrap(), "63/31");
    let v = growth_check(&rep, d, &GrowthWindow::default()).unwrap();
    assert_eq!(v.base, 2);
    assert!(v.ratio_in_window && v.passed);

    let z2 = dual_numbers_z2::<Q>();
    let d = dual_numbers_invariant_ideal_dim(&z2).unwrap();
    assert_eq!(d, 1);
    let rep = codim_series(&z2, 5, Some(d), &cfg()).unwrap();
    let v = growth_check(&rep, d, &GrowthWindow::default()).unwrap();
    assert_eq!(v.polynomial_bound, Some(true));
    assert!(v.passed);
}

#[test]
fn series_stops_at_the_budget() {
    let small = CodimConfig { budget: 1000, ..cfg() };
    let rep = codim_series(&dual_numbers_h4::<Q>(), 6, None, &small).unwrap();
    assert_eq!(rep.values, vec![3, 7, 15]);
    assert_eq!(rep.budget_exceeded_at, Some(4));
    assert!(rep.partial());
}

#[test]
fn graded_codimension_matches_the_dual_action() {
    let gradings: Vec<Grading<Q>> = vec![
        m2_z2_grading(),
        example59_s3_grading(),
        example59_z4_grading(),
        Grading::from_basis_degrees(dual_numbers(), FiniteGroup::cyclic(2), &[0, 1]).unwrap(),
    ];
    for g in &gradings {
        for n in 1..=3 {
            let r = graded_codim(g, n, &cfg()).unwrap();
            assert!(r.equal, "{r:?}");
        }
    }
}

#[test]
fn equivalent_structures_share_codimensions() {
    let odd_x = Grading::from_basis_degrees(dual_numbers::<Q>(), FiniteGroup::cyclic(2), &[0, 1]).unwrap();
    let z1 = dual_numbers_z2::<Q>();
    let z2 = odd_x.dual_action().unwrap();
    for n in 1..=4 {
        let r = codim_equiv_check(&z1, &z2, &Matrix::identity(2), n, &cfg()).unwrap();
        assert!(r.equal);
        assert_eq!(r.first, n + 1);
    }
    let triv = dual_numbers_trivial::<Q>();
    assert!(codim_equiv_check(&triv, &z1, &Matrix::identity(2), 1, &cfg()).is_err());
}

#[test]
fn commutator_is_an_identity_and_transports() {
    let z1 = dual_numbers_z2::<Q>();
    let names = z1.hopf.names().to_vec();
    let p = MultilinearHPolynomial::<Q>::parse("x1^{h:1} x2 - x2 x1^{h:1}", &names, z1.hopf.unit_index()).unwrap();
    assert_eq!(p.n, 2);
    assert!(p.is_identity(&z1).unwrap());
    let z2 = Grading::from_basis_degrees(dual_numbers::<Q>(), FiniteGroup::cyclic(2), &[0, 1])
        .unwrap()
        .dual_action()
        .unwrap();
    let xi = transport_map(&z1, &z2, &Matrix::identity(2)).unwrap();
    let p2 = p.transport(&xi).unwrap();
    assert!(p2.is_identity(&z2).unwrap());
}

#[test]
fn a_non_identity_reports_a_witness() {
    let z = dual_numbers_h4::<Q>();
    let names = z.hopf.names().to_vec();
    // v acting on x gives 1
    let p = MultilinearHPolynomial::<Q>::parse("x1^{h:v}", &names, z.hopf.unit_index()).unwrap();
    assert_eq!(p.identity_witness(&z).unwrap(), Some(vec![1]));
    let zero = MultilinearHPolynomial::<Q>::parse("x1 x2 - x2 x1", &names, z.hopf.unit_index()).unwrap();
    assert!(zero.is_identity(&z).unwrap());
}
