use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub u: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
}

pub fn smith_normal_form(a: &Matrix<BigInt>) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u: Matrix<BigInt> = Matrix::identity(m);
    let mut v: Matrix<BigInt> = Matrix::identity(n);

    let row_axpy = |mat: &mut Matrix<BigInt>, dst: usize, src: usize, k: &BigInt| {
        for j in 0..mat.cols() {
            let x = mat.get(dst, j).clone() - k * mat.get(src, j);
            mat.set(dst, j, x);
        }
    };
    let col_axpy = |mat: &mut Matrix<BigInt>, dst: usize, src: usize, k: &BigInt| {
        for i in 0..mat.rows() {
            let x = mat.get(i, dst).clone() - k * mat.get(i, src);
            mat.set(i, dst, x);
        }
    };

    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d.get(i, j);
                    if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut clean = true;
            let p = d.get(t, t).clone();
            for i in t + 1..m {
                let q = d.get(i, t).div_floor(&p);
                if !q.is_zero() {
                    row_axpy(&mut d, i, t, &q);
                    row_axpy(&mut u, i, t, &q);
                }
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = d.get(t, j).div_floor(&p);
                if !q.is_zero() {
                    col_axpy(&mut d, j, t, &q);
                    col_axpy(&mut v, j, t, &q);
                }
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let mut bad = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !d.get(i, j).is_multiple_of(&p) {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            for j in 0..n {
                let x = -d.get(t, j).clone();
                d.set(t, j, x);
            }
            for j in 0..m {
                let x = -u.get(t, j).clone();
                u.set(t, j, x);
            }
        }
    }
    let diagonal = (0..m.min(n)).map(|i| d.get(i, i).clone()).collect();
    SmithForm { diagonal, u, v }
}

/// Invariant factors of `Z^cols / rowspace(a)`: one entry per cyclic factor,
/// `0` standing for a copy of `Z`. Trivial factors are dropped.
pub fn abelian_invariants(a: &Matrix<BigInt>) -> Vec<BigInt> {
    let snf = smith_normal_form(a);
    let mut out: Vec<BigInt> = snf.diagonal.into_iter().filter(|x| !x.is_one()).collect();
    out.extend(std::iter::repeat(BigInt::zero()).take(a.cols().saturating_sub(a.rows())));
    out
}
