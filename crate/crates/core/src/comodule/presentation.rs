use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::exactlin::Scalar;

use super::coaction::Coaction;
use super::support::support_coalgebra;

/// Noncommutative polynomial: a sum of `coef * word`, words in generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NcPoly<S> {
    pub terms: Vec<(S, Vec<usize>)>,
}

impl<S: Scalar> NcPoly<S> {
    pub fn from_map(m: BTreeMap<Vec<usize>, S>) -> NcPoly<S> {
        NcPoly { terms: m.into_iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (c, w)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates under a character given by its values on generators.
    pub fn eval(&self, values: &[S]) -> S {
        self.terms.iter().fold(S::zero(), |acc, (c, w)| {
            acc + w.iter().fold(c.clone(), |p, &g| p * values[g].clone())
        })
    }
}

fn accumulate<S: Scalar, K: Ord>(m: &mut BTreeMap<K, S>, k: K, c: S) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k).or_insert_with(S::zero);
    *e = e.clone() + c;
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearDependency<S> {
    pub alpha: usize,
    pub beta: usize,
    /// `x_{alpha beta} = sum coef * generator`.
    pub combination: Vec<(usize, S)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfRelation<S> {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub poly: NcPoly<S>,
}

/// Presentation of the Hopf algebra generated by the coefficients of a
/// coaction, subject to the relations making the coaction multiplicative.
#[derive(Clone, Debug, Serialize)]
pub struct HopfPresentation<S> {
    /// `(alpha, beta)` of each generator `x_{alpha beta}`.
    pub generators: Vec<(usize, usize)>,
    pub lin_deps: Vec<LinearDependency<S>>,
    pub relations: Vec<HopfRelation<S>>,
    /// `Delta(x_j) = sum coef * x_p (x) x_q`, per generator.
    pub delta: Vec<Vec<(S, usize, usize)>>,
    /// `eps(x_j)`.
    pub counit: Vec<S>,
    pub antipode_closed: bool,
    pub unital: bool,
    /// The generator equal to the unit, when the unit is a single generator.
    pub unit_grouplike: Option<usize>,
    /// The unit written in the generators, whenever the coaction is unital.
    pub unit_element: Option<Vec<(usize, S)>>,
}

/// Raw relation on the `n^2` symbols `x_{ab}` (symbol index `a * n + b`).
fn raw_relation<S: Scalar>(rho: &Coaction<S>, alpha: usize, beta: usize, gamma: usize) -> BTreeMap<Vec<usize>, S> {
    let n = rho.dim();
    let a = &rho.algebra;
    let mut m = BTreeMap::new();
    for r in 0..n {
        for q in 0..n {
            let k = a.structure_const(r, q, gamma);
            if !k.is_zero() {
                accumulate(&mut m, vec![r * n + alpha, q * n + beta], k.clone());
            }
        }
    }
    for u in 0..n {
        let k = a.structure_const(alpha, beta, u);
        if !k.is_zero() {
            accumulate(&mut m, vec![gamma * n + u], -k.clone());
        }
    }
    m
}

pub fn universal_hopf_presentation<S: Scalar>(rho: &Coaction<S>) -> Result<HopfPresentation<S>> {
    let n = rho.dim();
    let sc = support_coalgebra(rho)?;
    let coords = &sc.coordinates;
    let symbol = |p: usize| -> Vec<(usize, S)> {
        coords[p]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect()
    };
    let gen_symbols: Vec<usize> = sc.generators.iter().map(|(a, b)| a * n + b).collect();
    let lin_deps = (0..n * n)
        .filter(|p| !gen_symbols.contains(p))
        .map(|p| LinearDependency { alpha: p / n, beta: p % n, combination: symbol(p) })
        .collect();
    let mut relations = Vec::new();
    for alpha in 0..n {
        for beta in 0..n {
            for gamma in 0..n {
                let raw = raw_relation(rho, alpha, beta, gamma);
                let mut m = BTreeMap::new();
                for (word, c) in raw {
                    // expand each symbol into generators
                    let mut partial: Vec<(Vec<usize>, S)> = vec![(Vec::new(), c)];
                    for p in word {
                        let combo = symbol(p);
                        partial = partial
                            .into_iter()
                            .flat_map(|(w, c)| {
                                combo.iter().map(move |(g, d)| {
                                    let mut w2 = w.clone();
                                    w2.push(*g);
                                    (w2, c.clone() * d.clone())
                                })
                            })
                            .collect();
                    }
                    for (w, c) in partial {
                        accumulate(&mut m, w, c);
                    }
                }
                let poly = NcPoly::from_map(m);
                if !poly.is_zero() {
                    relations.push(HopfRelation { alpha, beta, gamma, poly });
                }
            }
        }
    }
    let delta = (0..sc.dim())
        .map(|j| sc.coalgebra.delta_terms(j).iter().map(|(p, q, c)| (c.clone(), *p, *q)).collect())
        .collect();
    let report = rho.check();
    let unital = report.unital == Some(true);
    let (unit_grouplike, unit_element) = if unital {
        // rho(1) = 1 (x) 1_H gives 1_H = sum_a u_a h_{b a} / u_b for any u_b != 0
        let u = rho.algebra.unit().cloned().or_else(|| rho.algebra.find_unit()).unwrap();
        let b = u.iter().position(|x| !x.is_zero()).unwrap();
        let inv = u[b].inv().unwrap();
        let mut v = vec![S::zero(); sc.dim()];
        for (a, ua) in u.iter().enumerate() {
            crate::exactlin::add_scaled(&mut v, &(ua.clone() * inv.clone()), &coords[b * n + a]);
        }
        let elem: Vec<(usize, S)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j, c.clone())).collect();
        let single = (elem.len() == 1 && elem[0].1 == S::one()).then(|| elem[0].0);
        (single, Some(elem))
    } else {
        (None, None)
    };
    Ok(HopfPresentation {
        generators: sc.generators.clone(),
        lin_deps,
        relations,
        delta,
        counit: sc.coalgebra.counit().to_vec(),
        antipode_closed: true,
        unital,
        unit_grouplike,
        unit_element,
    })
}

type Tensor<S> = BTreeMap<(Vec<usize>, Vec<usize>), S>;

fn delta_word<S: Scalar>(word: &[usize], n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    // Delta x_{ab} = sum_g x_{ag} (x) x_{gb}
    let mut out = vec![(Vec::new(), Vec::new())];
    for &p in word {
        let (a, b) = (p / n, p % n);
        out = out
            .into_iter()
            .flat_map(|(l, r)| {
                (0..n).map(move |g| {
                    let mut l2 = l.clone();
                    let mut r2 = r.clone();
                    l2.push(a * n + g);
                    r2.push(g * n + b);
                    (l2, r2)
                })
            })
            .collect();
    }
    out
}

/// Checks, on the free algebra over the symbols `x_{ab}`, that every relation
/// `R(a, b, g)` is killed by the counit and satisfies
/// `Delta R(a,b,g) = sum R(p,q,g) (x) x_{pa} x_{qb} + sum x_{gv} (x) R(a,b,v)`,
/// so the relations span a coideal.
pub fn relations_form_coideal<S: Scalar>(rho: &Coaction<S>) -> bool {
    let n = rho.dim();
    let delta_sym = |p: usize| -> S { if p / n == p % n { S::one() } else { S::zero() } };
    let rel: Vec<BTreeMap<Vec<usize>, S>> = (0..n * n * n)
        .map(|t| raw_relation(rho, t / (n * n), (t / n) % n, t % n))
        .collect();
    let rel_at = |a: usize, b: usize, g: usize| &rel[(a * n + b) * n + g];
    for alpha in 0..n {
        for beta in 0..n {
            for gamma in 0..n {
                let r = rel_at(alpha, beta, gamma);
                let eps = r.iter().fold(S::zero(), |acc, (w, c)| {
                    acc + w.iter().fold(c.clone(), |x, &p| x * delta_sym(p))
                });
                if !eps.is_zero() {
                    return false;
                }
                let mut lhs: Tensor<S> = BTreeMap::new();
                for (w, c) in r {
                    for (l, rr) in delta_word::<S>(w, n) {
                        accumulate(&mut lhs, (l, rr), c.clone());
                    }
                }
                let mut rhs: Tensor<S> = BTreeMap::new();
                for p in 0..n {
                    for q in 0..n {
                        for (w, c) in rel_at(p, q, gamma) {
                            accumulate(&mut rhs, (w.clone(), vec![p * n + alpha, q * n + beta]), c.clone());
                        }
                    }
                }
                for v in 0..n {
                    for (w, c) in rel_at(alpha, beta, v) {
                        accumulate(&mut rhs, (vec![gamma * n + v], w.clone()), c.clone());
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                rhs.retain(|_, c| !c.is_zero());
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
