use hopfeq::catalog::*;
use hopfeq::exactlin::basis_vector;
use hopfeq::structconst::{smash_product, FinHopf, FiniteGroup, GrouplikeSearch, Law};
use hopfeq::{Scalar, F5, F7, Q};

fn q(v: i64) -> Q {
    Q::from(v)
}

fn complete<S: Scalar>(g: GrouplikeSearch<S>) -> Vec<Vec<S>> {
    g.complete().expect("search should finish").to_vec()
}

#[test]
fn grouplikes_of_group_algebras_are_the_group() {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), FiniteGroup::symmetric3()] {
        let h = FinHopf::<Q>::group_algebra(&g);
        let found = complete(h.grouplikes());
        let want: Vec<Vec<Q>> = (0..g.order()).map(|i| basis_vector(g.order(), i)).collect();
        assert_eq!(found, want);
    }
}

#[test]
fn grouplikes_of_dual_z2_are_characters() {
    let h = FinHopf::<Q>::dual_group_algebra(&FiniteGroup::cyclic(2));
    let found = complete(h.grouplikes());
    assert_eq!(found, vec![vec![q(1), q(-1)], vec![q(1), q(1)]]);
}

#[test]
fn grouplikes_of_dual_s3_are_the_two_linear_characters() {
    let g = FiniteGroup::symmetric3();
    let h = FinHopf::<Q>::dual_group_algebra(&g);
    let found = complete(h.grouplikes());
    assert_eq!(found.len(), 2);
    assert!(found.contains(&vec![q(1); 6]));
    // sign character: transpositions go to -1
    assert!(found.contains(&vec![q(1), q(-1), q(-1), q(-1), q(1), q(1)]));
}

#[test]
fn sweedler_grouplikes_and_primitives() {
    let h = sweedler::<Q>();
    assert_eq!(complete(h.grouplikes()), vec![basis_vector(4, 0), basis_vector(4, 1)]);
    assert_eq!(h.primitives().dim(), 0);
    let d = h.dual();
    assert!(d.check().passed());
    assert_eq!(complete(d.grouplikes()), vec![vec![q(1), q(-1), q(0), q(0)], vec![q(1), q(1), q(0), q(0)]]);
}

#[test]
fn eigen_search_agrees_with_exhaustive_over_f5() {
    let hs: Vec<FinHopf<F5>> = vec![
        sweedler(),
        sweedler::<F5>().dual(),
        FinHopf::group_algebra(&FiniteGroup::cyclic(4)),
        FinHopf::dual_group_algebra(&FiniteGroup::cyclic(4)),
    ];
    for h in hs {
        let exhaustive = h.grouplikes_exhaustive(&F5::elements().unwrap());
        assert_eq!(complete(h.grouplikes()), exhaustive);
    }
}

#[test]
fn dual_group_algebra_over_f5_has_four_characters() {
    // F_5 contains a primitive 4th root of unity, so (F Z/4)* has 4 group-likes
    let h = FinHopf::<F5>::dual_group_algebra(&FiniteGroup::cyclic(4));
    assert_eq!(complete(h.grouplikes()).len(), 4);
    // F_7 does not, so only the characters with values +-1 survive
    let h = FinHopf::<F7>::dual_group_algebra(&FiniteGroup::cyclic(4));
    assert_eq!(complete(h.grouplikes()).len(), 2);
}

#[test]
fn primitives_in_characteristic_p() {
    // in F_p[Z/p] the element g - 1 is not primitive, but over the dual,
    // sum_g g * h_g is: it is the additive character
    let g = FiniteGroup::cyclic(5);
    let h = FinHopf::<F5>::dual_group_algebra(&g);
    let p = h.primitives();
    assert_eq!(p.dim(), 1);
    let h = FinHopf::<Q>::dual_group_algebra(&g);
    assert_eq!(h.primitives().dim(), 0);
}

#[test]
fn double_dual_is_the_original_table() {
    let h = sweedler::<Q>();
    let dd = h.dual().dual();
    assert_eq!(dd.algebra().mult_table(), h.algebra().mult_table());
    assert_eq!(dd.antipode(), h.antipode());
    assert_eq!(dd.names(), h.names());
}

#[test]
fn smash_product_with_sweedler() {
    let (alg, co) = smash_product(&dual_numbers_h4::<Q>()).unwrap();
    assert_eq!(alg.dim(), 8);
    assert!(alg.check().passed());
    let r = co.check();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.unital, Some(true));
    // (1 # v)(x # 1) = (v_(1) x) # v_(2) = (c x) # v + (v x) # 1 = -x # v + 1 # 1
    let e = |i| basis_vector::<Q>(8, i);
    let prod = alg.product(&e(2), &e(4));
    let mut want = vec![q(0); 8];
    want[6] = q(-1);
    want[0] = q(1);
    assert_eq!(prod, want);
}

#[test]
fn corrupted_action_is_rejected_by_smash() {
    let mut m = dual_numbers_h4::<Q>();
    m.action[2].set(1, 1, q(1));
    assert!(smash_product(&m).is_err());
    let r = m.check();
    assert!(r.first(Law::ModuleMultiplicative).is_some() || r.first(Law::ModuleAlgebraCompatibility).is_some());
}
