use hopfeq::catalog::{example59_algebra, example59_s3_grading, example59_z4_grading, m2, m2_z2_grading};
use hopfeq::grading::{enumerate_group, Grading, DEFAULT_COSET_BUDGET};
use hopfeq::structconst::FiniteGroup;
use hopfeq::{Matrix, F5, Q};
use num_bigint::BigInt;

fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn m2_z2_grading_is_valid_with_full_support() {
    let g = m2_z2_grading::<Q>();
    assert!(g.check().passed());
    assert_eq!(g.support(), vec![0, 1]);
    assert_eq!(g.component(0).dim(), 2);
    assert_eq!(g.component(1).dim(), 2);
}

#[test]
fn m2_z2_universal_group_is_z2() {
    let p = m2_z2_grading::<Q>().universal_group().unwrap();
    assert_eq!(p.generators, vec!["[0]", "[1]"]);
    assert_eq!(p.abelianization, big(&[2]));
    let g = enumerate_group(&p, DEFAULT_COSET_BUDGET).unwrap();
    assert_eq!(g.order(), 2);
}

#[test]
fn example59_universal_group_is_free_abelian_of_rank_two() {
    // 1 forces [id] = e and ab forces [ab] = [a][b]; nothing else relates [a], [b]
    for g in [example59_s3_grading::<Q>(), example59_z4_grading::<Q>()] {
        let p = g.universal_group().unwrap();
        assert_eq!(p.abelianization, big(&[0, 0]));
        assert_eq!(p.abelianization_order(), None);
    }
}

#[test]
fn example59_gradings_match_componentwise() {
    let s3 = example59_s3_grading::<Q>();
    let z4 = example59_z4_grading::<Q>();
    let e = s3.equivalent(&z4, &Matrix::identity(4)).unwrap();
    assert!(e.equivalent);
    let named: Vec<(String, String)> = e
        .bijection
        .iter()
        .map(|&(a, b)| (s3.group.names[a].clone(), z4.group.names[b].clone()))
        .collect();
    let want = [("id", "0"), ("(12)", "1"), ("(23)", "2"), ("(123)", "3")];
    assert_eq!(named, want.map(|(a, b)| (a.to_string(), b.to_string())).to_vec());
    assert!(e.separating.is_none());
}

#[test]
fn a_swap_of_generators_is_not_an_equivalence_of_these_gradings() {
    // a <-> b is not multiplicative since ab != 0 = ba
    let mut phi = Matrix::<Q>::identity(4);
    phi.swap_cols(1, 2);
    let s3 = example59_s3_grading::<Q>();
    assert!(s3.equivalent(&example59_z4_grading(), &phi).is_err());
}

#[test]
fn coarsening_is_detected() {
    let fine = m2_z2_grading::<Q>();
    let coarse = Grading::trivial(m2::<Q>());
    assert!(fine.finer_than(&coarse).unwrap());
    assert!(!coarse.finer_than(&fine).unwrap());
    assert!(fine.finer_than(&fine).unwrap());
    let e = fine.equivalent(&coarse, &Matrix::identity(4)).unwrap();
    assert!(!e.equivalent);
    assert!(e.separating.is_some());
}

#[test]
fn regrading_m2_by_z2_and_by_the_trivial_group() {
    let g = m2_z2_grading::<Q>();
    let ok = g.verify_regrading(&FiniteGroup::cyclic(2), &[0, 1]).unwrap();
    assert!(ok.relations_hold && ok.regrading_valid && ok.injective_on_support);
    let collapse = g.verify_regrading(&FiniteGroup::trivial(), &[0, 0]).unwrap();
    assert!(collapse.relations_hold);
    assert!(!collapse.injective_on_support);
}

#[test]
fn degrees_outside_a_homomorphism_are_rejected() {
    // sending [1] to 1 in Z/4 breaks [1][1] = [0]
    let r = m2_z2_grading::<Q>().verify_regrading(&FiniteGroup::cyclic(4), &[0, 1]).unwrap();
    assert!(!r.relations_hold);
    assert!(!r.regrading_valid);
}

#[test]
fn character_action_spans_the_projections_over_f5() {
    let g = example59_z4_grading::<F5>();
    let ca = g.character_action(&F5::new(2)).unwrap();
    assert!(ca.module.check().passed());
    assert_eq!(ca.module.image_span(), g.dual_action().unwrap().image_span());
    // 4 has order 2 in F5, not 4
    assert!(g.character_action(&F5::new(4)).is_err());
}

#[test]
fn misplaced_component_fails_the_product_check() {
    let bad = Grading::from_basis_degrees(example59_algebra::<Q>(), FiniteGroup::cyclic(4), &[0, 1, 2, 2]).unwrap();
    let r = bad.check();
    assert!(!r.passed());
    assert_eq!(r.failures[0].witness, vec![1, 2]);
}
