use hopfeq::catalog::{
    dual_numbers_h4, example59_s3_grading, m2, m2_z2_grading, regular_coaction, sweedler, trivial_hopf,
};
use hopfeq::comodule::{
    can_map, coarser_morphism, detect_grading, grading_to_coaction, induced_dual_module, relations_form_coideal,
    support_coalgebra, support_equivalent, universal_hopf_presentation, Coaction,
};
use hopfeq::modulealg::ModuleStructure;
use hopfeq::structconst::{smash_product, FinHopf, FiniteGroup, Law};
use hopfeq::{Matrix, Q};

fn trivial_coaction(h: FinHopf<Q>) -> Coaction<Q> {
    let a = m2::<Q>();
    let one = h.unit().to_vec();
    let zero = vec![Q::from(0); h.dim()];
    let coeff = (0..4)
        .map(|b| (0..4).map(|al| if al == b { one.clone() } else { zero.clone() }).collect())
        .collect();
    Coaction::new(a, h, coeff).unwrap()
}

#[test]
fn regular_coaction_of_sweedler_is_galois_and_not_a_grading() {
    let rho = regular_coaction(&sweedler::<Q>());
    assert!(rho.check().passed());
    assert_eq!(support_coalgebra(&rho).unwrap().dim(), 4);
    assert!(detect_grading(&rho).unwrap().is_none());
    let can = can_map(&rho).unwrap();
    assert_eq!((can.source_dim, can.target_dim, can.rank), (16, 16, 16));
    assert_eq!(can.base_dim, 1);
    assert!(can.bijective());
}

#[test]
fn grading_coaction_has_grouplike_support() {
    let g = m2_z2_grading::<Q>();
    let rho = grading_to_coaction(&g).unwrap();
    assert!(rho.check().passed());
    let c = support_coalgebra(&rho).unwrap();
    assert_eq!(c.dim(), 2);
    for j in 0..c.dim() {
        assert!(rho.hopf.is_grouplike(&c.inclusion.column(j)));
    }
    let d = detect_grading(&rho).unwrap().expect("a grading");
    assert_eq!(d.grading.support(), g.support());
    for s in g.support() {
        assert_eq!(d.grading.component(s), g.component(s));
    }
    assert_eq!(d.universal_group.abelianization, g.universal_group().unwrap().abelianization);
}

#[test]
fn trivial_coaction_on_m2_is_not_galois() {
    let rho = trivial_coaction(FinHopf::group_algebra(&FiniteGroup::cyclic(2)));
    assert!(rho.check().passed());
    let can = can_map(&rho).unwrap();
    assert_eq!(can.base_dim, 4);
    assert!(can.injective);
    assert!(!can.surjective);
    // over the one-dimensional Hopf algebra the same coaction is Galois
    assert!(can_map(&trivial_coaction(trivial_hopf())).unwrap().bijective());
}

#[test]
fn smash_product_coaction_is_galois() {
    let (alg, rho) = smash_product(&dual_numbers_h4::<Q>()).unwrap();
    assert_eq!(alg.dim(), 8);
    assert!(rho.check().passed());
    assert!(can_map(&rho).unwrap().bijective());
}

#[test]
fn presentation_of_sweedler_regular_coaction() {
    let rho = regular_coaction(&sweedler::<Q>());
    let p = universal_hopf_presentation(&rho).unwrap();
    // h_{beta alpha} for the coproduct: 16 symbols spanning H4
    assert_eq!(p.generators.len(), 4);
    assert_eq!(p.lin_deps.len(), 12);
    assert!(p.unital);
    assert!(p.antipode_closed);
    assert!(!p.relations.is_empty());
    for r in &p.relations {
        assert!(r.poly.eval(&p.counit) == Q::from(0), "{r:?}");
    }
    assert!(relations_form_coideal(&rho));
}

#[test]
fn presentation_of_a_grading_uses_the_unit_grouplike() {
    let rho = grading_to_coaction(&example59_s3_grading::<Q>()).unwrap();
    let p = universal_hopf_presentation(&rho).unwrap();
    assert_eq!(p.generators.len(), 4);
    assert!(p.unit_grouplike.is_some());
    for r in &p.relations {
        assert!(r.poly.eval(&p.counit) == Q::from(0));
    }
}

#[test]
fn module_and_comodule_pictures_agree() {
    let z = dual_numbers_h4::<Q>();
    let rho = z.to_coaction();
    assert!(rho.check().passed());
    assert_eq!(ModuleStructure::from_coaction(&rho).action, z.action);
    let back = induced_dual_module(&rho);
    assert_eq!(back.image_span(), z.image_span());
}

#[test]
fn support_equivalence_of_a_coaction_with_itself() {
    let rho = grading_to_coaction(&m2_z2_grading::<Q>()).unwrap();
    let e = support_equivalent(&rho, &rho, &Matrix::identity(4)).unwrap();
    assert!(e.equivalent);
    assert!(coarser_morphism(&rho, &rho).unwrap().is_some());
}

#[test]
fn coarser_map_exists_only_towards_the_coarser_coaction() {
    let fine = grading_to_coaction(&m2_z2_grading::<Q>()).unwrap();
    let coarse = trivial_coaction(trivial_hopf());
    assert!(coarser_morphism(&fine, &coarse).unwrap().is_some());
    assert!(coarser_morphism(&coarse, &fine).unwrap().is_none());
    assert!(!support_equivalent(&fine, &coarse, &Matrix::identity(4)).unwrap().equivalent);
}

#[test]
fn corrupted_coefficient_is_localized() {
    let rho = regular_coaction(&sweedler::<Q>());
    let mut t = rho.coeff_table();
    t[2][2][0] = Q::from(5);
    let bad = Coaction::new(rho.algebra.clone(), rho.hopf.clone(), t).unwrap();
    let r = bad.check();
    let f = r.first(Law::ComoduleCounit).unwrap();
    assert_eq!(f.witness, vec![2, 2]);
    assert!(can_map(&bad).is_err());
}
