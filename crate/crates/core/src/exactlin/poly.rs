use super::matrix::Matrix;
use super::scalar::Scalar;

fn poly_mul_linear<S: Scalar>(p: &[S], c: &S) -> Vec<S> {
    // (x - c) * p
    let mut out = vec![S::zero(); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i + 1] = out[i + 1].clone() + a.clone();
        out[i] = out[i].clone() - c.clone() * a.clone();
    }
    out
}

/// Characteristic polynomial `det(xI - m)`, constant term first.
pub fn char_poly<S: Scalar>(m: &Matrix<S>) -> Vec<S> {
    assert!(m.is_square());
    let n = m.rows();
    let mut h = m.clone();
    for k in 1..n.saturating_sub(1) {
        let Some(i) = (k..n).find(|&i| !h.get(i, k - 1).is_zero()) else { continue };
        h.swap_rows(i, k);
        h.swap_cols(i, k);
        let piv = h.get(k, k - 1).inv().unwrap();
        for j in k + 1..n {
            let u = h.get(j, k - 1).clone() * piv.clone();
            if u.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = h.get(j, c).clone() - u.clone() * h.get(k, c).clone();
                h.set(j, c, v);
            }
            for r in 0..n {
                let v = h.get(r, k).clone() + u.clone() * h.get(r, j).clone();
                h.set(r, k, v);
            }
        }
    }
    let mut ps: Vec<Vec<S>> = vec![vec![S::one()]];
    for mm in 0..n {
        let mut next = poly_mul_linear(&ps[mm], h.get(mm, mm));
        let mut t = S::one();
        for i in (0..mm).rev() {
            t = t * h.get(i + 1, i).clone();
            let coef = t.clone() * h.get(i, mm).clone();
            if coef.is_zero() {
                continue;
            }
            for (d, a) in ps[i].iter().enumerate() {
                next[d] = next[d].clone() - coef.clone() * a.clone();
            }
        }
        ps.push(next);
    }
    ps.pop().unwrap()
}
