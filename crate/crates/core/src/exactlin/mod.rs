//! Exact linear algebra over Q and F_p.

mod fp;
mod matrix;
mod poly;
mod rational;
mod reducer;
mod scalar;
mod snf;
mod subspace;

pub use fp::{Fp, FP_ROOT_SEARCH_LIMIT};
pub use matrix::{Matrix, Rref};
pub use poly::char_poly;
pub use rational::Rational;
pub use reducer::RowReducer;
pub use scalar::{is_prime, FieldSpec, Scalar};
pub use snf::{abelian_invariants, smith_normal_form, SmithForm};
pub use subspace::Subspace;


/// `sum_i c_i v_i`.
pub fn lin_comb<S: Scalar>(coeffs: &[S], vectors: &[Vec<S>], dim: usize) -> Vec<S> {
    let mut out = vec![S::zero(); dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
    }
    out
}

pub fn basis_vector<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_scaled<S: Scalar>(acc: &mut [S], c: &S, v: &[S]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.clone() + c.clone() * x.clone();
        }
    }
}
