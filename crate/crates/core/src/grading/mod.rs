//! Group gradings, their dual and character actions, and universal groups.

mod coset;
mod presentation;

use std::collections::BTreeMap;

use serde::Serialize;

pub use coset::{enumerate_group, DEFAULT_COSET_BUDGET};
pub use presentation::GroupPresentation;

use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, Matrix, Scalar, Subspace};
use crate::modulealg::ModuleStructure;
use crate::structconst::{FinAlgebra, FinHopf, FiniteGroup, Law, Report};

/// `A = sum_g A^(g)`; only nonzero components are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading<S> {
    pub algebra: FinAlgebra<S>,
    pub group: FiniteGroup,
    components: BTreeMap<usize, Subspace<S>>,
}

impl<S: Scalar> Grading<S> {
    pub fn new(algebra: FinAlgebra<S>, group: FiniteGroup, components: Vec<(usize, Vec<Vec<S>>)>) -> Result<Grading<S>> {
        let n = algebra.dim();
        let mut map: BTreeMap<usize, Subspace<S>> = BTreeMap::new();
        for (g, vs) in components {
            if g >= group.order() {
                return Err(Error::InvalidStructure(format!("group index {g} out of range")));
            }
            let s = Subspace::span(n, vs)?;
            let merged = match map.remove(&g) {
                Some(old) => old.sum(&s)?,
                None => s,
            };
            if merged.dim() > 0 {
                map.insert(g, merged);
            }
        }
        Ok(Grading { algebra, group, components: map })
    }

    /// Each basis vector `a_i` placed in degree `degrees[i]`.
    pub fn from_basis_degrees(algebra: FinAlgebra<S>, group: FiniteGroup, degrees: &[usize]) -> Result<Grading<S>> {
        let n = algebra.dim();
        if degrees.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: degrees.len() });
        }
        let comps = degrees
            .iter()
            .enumerate()
            .map(|(i, &g)| (g, vec![crate::exactlin::basis_vector(n, i)]))
            .collect();
        Grading::new(algebra, group, comps)
    }

    pub fn trivial(algebra: FinAlgebra<S>) -> Grading<S> {
        let n = algebra.dim();
        Grading::new(algebra, FiniteGroup::trivial(), vec![(0, Subspace::<S>::full(n).basis().to_vec())]).unwrap()
    }

    pub fn component(&self, g: usize) -> Subspace<S> {
        self.components.get(&g).cloned().unwrap_or_else(|| Subspace::zero(self.algebra.dim()))
    }

    pub fn components(&self) -> &BTreeMap<usize, Subspace<S>> {
        &self.components
    }

    pub fn support(&self) -> Vec<usize> {
        self.components.keys().copied().collect()
    }

    pub fn check(&self) -> Report {
        let mut r = Report::default();
        let n = self.algebra.dim();
        let total: usize = self.components.values().map(|s| s.dim()).sum();
        let mut sum = Subspace::zero(n);
        for s in self.components.values() {
            sum = sum.sum(s).unwrap();
        }
        if total != n || sum.dim() != n {
            r.fail(Law::DirectSum, vec![]);
        }
        for (&g, sg) in &self.components {
            for (&h, sh) in &self.components {
                let target = self.component(self.group.mul(g, h));
                let ok = sg.basis().iter().all(|u| {
                    sh.basis().iter().all(|v| target.contains_vector(&self.algebra.product(u, v)))
                });
                if !ok {
                    r.fail(Law::GradedProduct, vec![g, h]);
                }
            }
        }
        r
    }

    /// Projections onto each component, indexed by group element.
    pub fn projections(&self) -> Result<Vec<Matrix<S>>> {
        let n = self.algebra.dim();
        let mut cols = Vec::new();
        let mut owner = Vec::new();
        for (&g, s) in &self.components {
            for v in s.basis() {
                cols.push(v.clone());
                owner.push(g);
            }
        }
        if cols.len() != n {
            return Err(Error::InvalidStructure("components do not form a direct sum".into()));
        }
        let p = Matrix::from_columns(&cols, n)?;
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::InvalidStructure("components do not form a direct sum".into()))?;
        Ok((0..self.group.order())
            .map(|g| {
                let d: Vec<S> = owner.iter().map(|&o| if o == g { S::one() } else { S::zero() }).collect();
                &(&p * &Matrix::diagonal(&d)) * &pinv
            })
            .collect())
    }

    /// The `(FG)*`-action whose `h_g` projects onto `A^(g)`.
    pub fn dual_action(&self) -> Result<ModuleStructure<S>> {
        let hopf = FinHopf::dual_group_algebra(&self.group);
        ModuleStructure::new(self.algebra.clone(), hopf, self.projections()?)
    }

    /// Homomorphisms `G -> F^x`, given an element `root` of multiplicative
    /// order equal to the exponent of `G`. Each character is listed by its
    /// values on the group elements.
    pub fn characters(&self, root: &S) -> Result<Vec<Vec<S>>> {
        characters(&self.group, root)
    }

    /// The action of the character group: `chi . a = chi(g) a` for `a` in `A^(g)`.
    pub fn character_action(&self, root: &S) -> Result<CharacterAction<S>> {
        let chars = self.characters(root)?;
        let m = chars.len();
        let idx = |v: &Vec<S>| chars.iter().position(|c| c == v).unwrap();
        let table: Vec<Vec<usize>> = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| idx(&chars[a].iter().zip(&chars[b]).map(|(x, y)| x.clone() * y.clone()).collect()))
                    .collect()
            })
            .collect();
        let trivial = idx(&vec![S::one(); self.group.order()]);
        let dual_group = FiniteGroup::new((0..m).map(|i| format!("chi{i}")).collect(), table, trivial)?;
        let projs = self.projections()?;
        let n = self.algebra.dim();
        let action = chars
            .iter()
            .map(|chi| {
                let mut acc = vec![S::zero(); n * n];
                for (g, p) in projs.iter().enumerate() {
                    add_scaled(&mut acc, &chi[g], p.as_flat());
                }
                Matrix::from_flat(n, n, acc).unwrap()
            })
            .collect();
        let module = ModuleStructure::new(self.algebra.clone(), FinHopf::group_algebra(&dual_group), action)?;
        Ok(CharacterAction { dual_group, characters: chars, module })
    }

    /// Whether `self` is finer than `other`: every component of `self` lies
    /// in a component of `other`. Decided by comparing the spans of the dual
    /// actions and cross-checked componentwise.
    pub fn finer_than(&self, other: &Grading<S>) -> Result<bool> {
        if self.algebra != other.algebra {
            return Err(Error::Precondition("gradings are on different algebras".into()));
        }
        let s1 = self.dual_action()?.image_span();
        let s2 = other.dual_action()?.image_span();
        let by_span = s1.contains(&s2)?;
        let by_components = self
            .components
            .values()
            .all(|c| other.components.values().any(|d| d.contains(c).unwrap()));
        if by_span != by_components {
            return Err(Error::InvalidStructure("span and componentwise tests disagree".into()));
        }
        Ok(by_span)
    }

    /// Equivalence along an algebra isomorphism `phi: A1 -> A2`.
    pub fn equivalent(&self, other: &Grading<S>, phi: &Matrix<S>) -> Result<GradingEquivalence<S>> {
        let phi_inv = self.algebra.check_isomorphism(&other.algebra, phi)?;
        let n = other.algebra.dim();
        let conj: Vec<Matrix<S>> = self
            .projections()?
            .iter()
            .map(|p| p.conjugate_by(phi, &phi_inv))
            .collect();
        let s1 = Subspace::span_of_matrices(&conj, n, n)?;
        let s2 = other.dual_action()?.image_span();
        let equivalent = s1 == s2;
        let mut bijection = Vec::new();
        for (&g, c) in &self.components {
            let img = c.image(phi)?;
            if let Some((&h, _)) = other.components.iter().find(|(_, d)| **d == img) {
                bijection.push((g, h));
            }
        }
        let componentwise = bijection.len() == self.components.len() && self.components.len() == other.components.len();
        if componentwise != equivalent {
            return Err(Error::InvalidStructure("span and componentwise tests disagree".into()));
        }
        let separating = if equivalent {
            None
        } else {
            s1.basis()
                .iter()
                .find(|v| !s2.contains_vector(v))
                .or_else(|| s2.basis().iter().find(|v| !s1.contains_vector(v)))
                .map(|v| Matrix::from_flat(n, n, v.clone()).unwrap())
        };
        Ok(GradingEquivalence { equivalent, bijection: if equivalent { bijection } else { Vec::new() }, separating })
    }

    /// Presentation of the universal group: one generator per support
    /// element and `[g][h] = [gh]` whenever `A^(g) A^(h) != 0`.
    pub fn universal_group(&self) -> Result<GroupPresentation> {
        let supp = self.support();
        let pos = |g: usize| supp.iter().position(|&x| x == g);
        let mut rels = Vec::new();
        for &g in &supp {
            for &h in &supp {
                let sg = &self.components[&g];
                let sh = &self.components[&h];
                let nonzero = sg.basis().iter().any(|u| {
                    sh.basis().iter().any(|v| !crate::exactlin::is_zero_vec(&self.algebra.product(u, v)))
                });
                if !nonzero {
                    continue;
                }
                let t = self.group.mul(g, h);
                let ti = pos(t).ok_or_else(|| {
                    Error::InvalidStructure(format!(
                        "product of components {} and {} lands outside the support",
                        self.group.names[g], self.group.names[h]
                    ))
                })?;
                rels.push(vec![(pos(g).unwrap(), 1), (pos(h).unwrap(), 1), (ti, -1)]);
            }
        }
        let gens = supp.iter().map(|&g| format!("[{}]", self.group.names[g])).collect();
        Ok(GroupPresentation::new(gens, rels))
    }

    /// Checks a proposed regrading by `target`, where `gen_map[i]` is the
    /// image of the `i`-th support element.
    pub fn verify_regrading(&self, target: &FiniteGroup, gen_map: &[usize]) -> Result<RegradingReport> {
        let supp = self.support();
        if gen_map.len() != supp.len() {
            return Err(Error::DimensionMismatch { expected: supp.len(), found: gen_map.len() });
        }
        if gen_map.iter().any(|&t| t >= target.order()) {
            return Err(Error::InvalidParams("target element out of range".into()));
        }
        let pres = self.universal_group()?;
        let violated = pres.relations.iter().position(|w| {
            let mut x = target.identity;
            for &(g, e) in w {
                let y = if e > 0 { gen_map[g] } else { target.inverse(gen_map[g]) };
                for _ in 0..e.unsigned_abs() {
                    x = target.mul(x, y);
                }
            }
            x != target.identity
        });
        let comps = supp
            .iter()
            .zip(gen_map)
            .map(|(g, &t)| (t, self.components[g].basis().to_vec()))
            .collect();
        let regraded = Grading::new(self.algebra.clone(), target.clone(), comps)?;
        let regrading_valid = regraded.check().passed();
        let mut seen = gen_map.to_vec();
        seen.sort_unstable();
        seen.dedup();
        Ok(RegradingReport {
            relations_hold: violated.is_none(),
            violated_relation: violated,
            regrading_valid,
            injective_on_support: seen.len() == gen_map.len(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingEquivalence<S> {
    pub equivalent: bool,
    /// Support elements matched by the isomorphism.
    pub bijection: Vec<(usize, usize)>,
    /// An operator in one span but not in the other, when inequivalent.
    pub separating: Option<Matrix<S>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegradingReport {
    /// The map on generators respects every defining relation, so it
    /// extends to a homomorphism from the universal group.
    pub relations_hold: bool,
    pub violated_relation: Option<usize>,
    pub regrading_valid: bool,
    pub injective_on_support: bool,
}

#[derive(Clone, Debug)]
pub struct CharacterAction<S> {
    pub dual_group: FiniteGroup,
    pub characters: Vec<Vec<S>>,
    pub module: ModuleStructure<S>,
}

fn has_order<S: Scalar>(x: &S, e: usize) -> bool {
    let mut p = S::one();
    for k in 1..=e {
        p = p * x.clone();
        if p == S::one() {
            return k == e;
        }
    }
    false
}

pub fn characters<S: Scalar>(g: &FiniteGroup, root: &S) -> Result<Vec<Vec<S>>> {
    if !g.is_abelian() {
        return Err(Error::Precondition("character action needs an abelian group".into()));
    }
    let e = g.exponent();
    if !has_order(root, e) {
        return Err(Error::Precondition(format!("{root} does not have multiplicative order {e}")));
    }
    let powers: Vec<S> = std::iter::successors(Some(S::one()), |p| Some(p.clone() * root.clone()))
        .take(e)
        .collect();
    // generators chosen greedily
    let n = g.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut reach = vec![false; n];
    reach[g.identity] = true;
    for x in 0..n {
        if reach[x] {
            continue;
        }
        gens.push(x);
        let mut frontier: Vec<usize> = (0..n).filter(|&i| reach[i]).collect();
        while let Some(y) = frontier.pop() {
            for &s in &gens {
                let z = g.mul(y, s);
                if !reach[z] {
                    reach[z] = true;
                    frontier.push(z);
                }
            }
        }
    }
    let mut out: Vec<Vec<S>> = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(chi) = extend_character(g, &gens, &choice, &powers) {
            if !out.contains(&chi) {
                out.push(chi);
            }
        }
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < e {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    if out.len() != n {
        return Err(Error::Precondition(format!("found {} characters, expected {n}", out.len())));
    }
    let pos = |c: &Vec<S>| c.iter().map(|x| powers.iter().position(|p| p == x).unwrap()).collect::<Vec<_>>();
    out.sort_by_key(pos);
    Ok(out)
}

fn extend_character<S: Scalar>(g: &FiniteGroup, gens: &[usize], choice: &[usize], powers: &[S]) -> Option<Vec<S>> {
    let n = g.order();
    let mut val: Vec<Option<S>> = vec![None; n];
    val[g.identity] = Some(S::one());
    let mut stack = vec![g.identity];
    while let Some(y) = stack.pop() {
        for (s, &c) in gens.iter().zip(choice) {
            let z = g.mul(y, *s);
            let v = val[y].clone().unwrap() * powers[c].clone();
            match &val[z] {
                Some(old) if *old != v => return None,
                Some(_) => {}
                None => {
                    val[z] = Some(v);
                    stack.push(z);
                }
            }
        }
    }
    val.into_iter().collect()
}
