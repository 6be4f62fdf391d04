//! Built-in structures used in the examples and tests.

use crate::comodule::Coaction;
use crate::error::{Error, Result};
use crate::exactlin::{basis_vector, Matrix, Scalar};
use crate::grading::Grading;
use crate::modulealg::{GroupAction, ModuleStructure};
use crate::structconst::{FinAlgebra, FinCoalgebra, FinHopf, FiniteGroup};

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn s<S: Scalar>(v: i64) -> S {
    S::from_i64(v)
}

fn mat<S: Scalar>(rows: &[&[i64]]) -> Matrix<S> {
    let cols = rows[0].len();
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| s(x)).collect()).collect(), cols).unwrap()
}

/// `F[x]/(x^2)` on the basis `(1, x)`.
pub fn dual_numbers<S: Scalar>() -> FinAlgebra<S> {
    FinAlgebra::from_fn(names(&["1", "x"]), Some(basis_vector(2, 0)), |i, j| {
        if i + j >= 2 { vec![S::zero(); 2] } else { basis_vector(2, i + j) }
    })
    .unwrap()
}

/// `M_2(F)` on the matrix units `e11, e12, e21, e22`.
pub fn m2<S: Scalar>() -> FinAlgebra<S> {
    let unit = vec![S::one(), S::zero(), S::zero(), S::one()];
    FinAlgebra::from_fn(names(&["e11", "e12", "e21", "e22"]), Some(unit), |p, q| {
        let (i, j) = (p / 2, p % 2);
        let (k, l) = (q / 2, q % 2);
        if j == k { basis_vector(4, i * 2 + l) } else { vec![S::zero(); 4] }
    })
    .unwrap()
}

/// `span(1, a, b, ab)` with `a^2 = b^2 = ba = 0`.
pub fn example59_algebra<S: Scalar>() -> FinAlgebra<S> {
    // basis index as a bit mask: bit 0 = a, bit 1 = b
    FinAlgebra::from_fn(names(&["1", "a", "b", "ab"]), Some(basis_vector(4, 0)), |i, j| {
        let z = vec![S::zero(); 4];
        if i & j != 0 {
            return z;
        }
        // b before a vanishes
        if i & 2 != 0 && j & 1 != 0 {
            return z;
        }
        basis_vector(4, i | j)
    })
    .unwrap()
}

/// Sweedler's four-dimensional Hopf algebra on `(1, c, v, cv)`.
pub fn sweedler<S: Scalar>() -> FinHopf<S> {
    // c^i v^j with index i + 2j; v c = -c v
    let algebra = FinAlgebra::from_fn(names(&["1", "c", "v", "cv"]), Some(basis_vector(4, 0)), |p, q| {
        let (i1, j1) = (p % 2, p / 2);
        let (i2, j2) = (q % 2, q / 2);
        if j1 + j2 >= 2 {
            return vec![S::zero(); 4];
        }
        let sign = if j1 == 1 && i2 == 1 { -S::one() } else { S::one() };
        let mut v = vec![S::zero(); 4];
        v[(i1 + i2) % 2 + 2 * (j1 + j2)] = sign;
        v
    })
    .unwrap();
    let one = S::one();
    let delta = vec![
        vec![(0, 0, one.clone())],
        vec![(1, 1, one.clone())],
        vec![(1, 2, one.clone()), (2, 0, one.clone())],
        vec![(0, 3, one.clone()), (3, 1, one.clone())],
    ];
    let counit = vec![s(1), s(1), s(0), s(0)];
    let coalgebra = FinCoalgebra::new(names(&["1", "c", "v", "cv"]), delta, counit).unwrap();
    // S(1) = 1, S(c) = c, S(v) = -cv, S(cv) = v
    let antipode = mat(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    FinHopf::new(algebra, coalgebra, antipode).unwrap()
}

pub fn trivial_hopf<S: Scalar>() -> FinHopf<S> {
    FinHopf::group_algebra(&FiniteGroup::trivial())
}

/// `E11, E22` in degree 0 and `E12, E21` in degree 1.
pub fn m2_z2_grading<S: Scalar>() -> Grading<S> {
    Grading::from_basis_degrees(m2(), FiniteGroup::cyclic(2), &[0, 1, 1, 0]).unwrap()
}

/// `1, a, b, ab` in degrees `id, (12), (23), (123)`.
pub fn example59_s3_grading<S: Scalar>() -> Grading<S> {
    let g = FiniteGroup::symmetric3();
    let deg = ["id", "(12)", "(23)", "(123)"].map(|n| g.index_of(n).unwrap());
    Grading::from_basis_degrees(example59_algebra(), g, &deg).unwrap()
}

/// `1, a, b, ab` in degrees `0, 1, 2, 3` of `Z/4`.
pub fn example59_z4_grading<S: Scalar>() -> Grading<S> {
    Grading::from_basis_degrees(example59_algebra(), FiniteGroup::cyclic(4), &[0, 1, 2, 3]).unwrap()
}

/// The one-dimensional Hopf algebra acting trivially on the dual numbers.
pub fn dual_numbers_trivial<S: Scalar>() -> ModuleStructure<S> {
    ModuleStructure::new(dual_numbers(), trivial_hopf(), vec![Matrix::identity(2)]).unwrap()
}

/// `FZ/2` acting on the dual numbers by `c x = -x`.
pub fn dual_numbers_z2<S: Scalar>() -> ModuleStructure<S> {
    dual_numbers_z2_action().to_module()
}

pub fn dual_numbers_z2_action<S: Scalar>() -> GroupAction<S> {
    GroupAction::cyclic(dual_numbers(), 2, mat(&[&[1, 0], &[0, -1]])).unwrap()
}

/// `Z/n` acting on the dual numbers with the generator sending `x` to `lambda x`.
pub fn dual_numbers_cyclic_action<S: Scalar>(n: usize, lambda: S) -> Result<GroupAction<S>> {
    let g = Matrix::diagonal(&[S::one(), lambda.clone()]);
    let a = GroupAction::cyclic(dual_numbers(), n, g)?;
    if !a.check().passed() {
        return Err(Error::InvalidParams(format!("{lambda} does not have order dividing {n}")));
    }
    Ok(a)
}

/// Sweedler's algebra acting on the dual numbers: `c x = -x`, `v 1 = 0`, `v x = 1`.
pub fn dual_numbers_h4<S: Scalar>() -> ModuleStructure<S> {
    let action = vec![
        Matrix::identity(2),
        mat(&[&[1, 0], &[0, -1]]),
        mat(&[&[0, 1], &[0, 0]]),
        mat(&[&[0, 1], &[0, 0]]),
    ];
    ModuleStructure::new(dual_numbers(), sweedler(), action).unwrap()
}

/// A Hopf algebra coacting on itself through its coproduct.
pub fn regular_coaction<S: Scalar>(h: &FinHopf<S>) -> Coaction<S> {
    let n = h.dim();
    let mut coeff = vec![vec![vec![S::zero(); n]; n]; n];
    for alpha in 0..n {
        for (b, i, c) in h.coalgebra().delta_terms(alpha) {
            coeff[*b][alpha][*i] = coeff[*b][alpha][*i].clone() + c.clone();
        }
    }
    Coaction::new(h.algebra().clone(), h.clone(), coeff).unwrap()
}

pub use crate::json::Document as Builtin;

pub const BUILTIN_NAMES: &[&str] = &[
    "dual-numbers",
    "m2",
    "example59",
    "sweedler",
    "sweedler-dual",
    "z2",
    "z4",
    "s3",
    "group-algebra-z2",
    "group-algebra-z4",
    "group-algebra-s3",
    "dual-group-algebra-z2",
    "dual-group-algebra-z4",
    "dual-group-algebra-s3",
    "m2-z2-grading",
    "m2-trivial-grading",
    "example59-s3",
    "example59-z4",
    "dual-numbers-trivial",
    "dual-numbers-z2",
    "dual-numbers-h4",
    "dual-numbers-z2-action",
    "dual-numbers-z4-action",
    "sweedler-regular-coaction",
    "sweedler-smash-coaction",
];

fn group_named(s: &str) -> Option<FiniteGroup> {
    match s {
        "z2" => Some(FiniteGroup::cyclic(2)),
        "z4" => Some(FiniteGroup::cyclic(4)),
        "s3" => Some(FiniteGroup::symmetric3()),
        _ => None,
    }
}

pub fn builtin<S: Scalar>(name: &str) -> Result<Builtin<S>> {
    use Builtin::*;
    if let Some(g) = group_named(name) {
        return Ok(Group(g));
    }
    if let Some(g) = name.strip_prefix("group-algebra-").and_then(group_named) {
        return Ok(Hopf(FinHopf::group_algebra(&g)));
    }
    if let Some(g) = name.strip_prefix("dual-group-algebra-").and_then(group_named) {
        return Ok(Hopf(FinHopf::dual_group_algebra(&g)));
    }
    Ok(match name {
        "dual-numbers" => Algebra(dual_numbers()),
        "m2" => Algebra(m2()),
        "example59" => Algebra(example59_algebra()),
        "sweedler" => Hopf(sweedler()),
        "sweedler-dual" => Hopf(sweedler::<S>().dual()),
        "m2-z2-grading" => Grading(m2_z2_grading()),
        "m2-trivial-grading" => Grading(crate::grading::Grading::trivial(m2())),
        "example59-s3" => Grading(example59_s3_grading()),
        "example59-z4" => Grading(example59_z4_grading()),
        "dual-numbers-trivial" => Module(dual_numbers_trivial()),
        "dual-numbers-z2" => Module(dual_numbers_z2()),
        "dual-numbers-h4" | "dual-h4" => Module(dual_numbers_h4()),
        "dual-numbers-z2-action" => GroupAction(dual_numbers_z2_action()),
        "dual-numbers-z4-action" => {
            let lambda = S::elements()
                .and_then(|els| {
                    els.into_iter().find(|x| {
                        let x2 = x.clone() * x.clone();
                        x2 != S::one() && x2.clone() * x2 == S::one()
                    })
                })
                .ok_or_else(|| Error::InvalidParams("needs a prime field containing a primitive 4th root of unity".into()))?;
            GroupAction(dual_numbers_cyclic_action(4, lambda)?)
        }
        "sweedler-regular-coaction" => Coaction(regular_coaction(&sweedler())),
        "sweedler-smash-coaction" => Coaction(crate::structconst::smash_product(&dual_numbers_h4())?.1),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    })
}
