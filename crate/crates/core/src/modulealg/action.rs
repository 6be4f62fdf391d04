use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::structconst::{FinAlgebra, FinHopf, FiniteGroup, Law, Report};

use super::structure::ModuleStructure;

/// A group acting on an algebra by automorphisms; `images[g]` is the matrix of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction<S> {
    pub algebra: FinAlgebra<S>,
    pub group: FiniteGroup,
    pub images: Vec<Matrix<S>>,
}

impl<S: Scalar> GroupAction<S> {
    pub fn new(algebra: FinAlgebra<S>, group: FiniteGroup, images: Vec<Matrix<S>>) -> Result<GroupAction<S>> {
        if images.len() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: images.len() });
        }
        let n = algebra.dim();
        if images.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::ShapeMismatch(format!("images must be {n}x{n}")));
        }
        Ok(GroupAction { algebra, group, images })
    }

    /// A cyclic group acting through powers of `generator`.
    pub fn cyclic(algebra: FinAlgebra<S>, order: usize, generator: Matrix<S>) -> Result<GroupAction<S>> {
        let n = algebra.dim();
        let mut images = vec![Matrix::identity(n)];
        for k in 1..order {
            images.push(&images[k - 1] * &generator);
        }
        GroupAction::new(algebra, FiniteGroup::cyclic(order), images)
    }

    pub fn check(&self) -> Report {
        let mut r = Report::default();
        for (g, m) in self.images.iter().enumerate() {
            if !self.algebra.is_automorphism(m) {
                r.fail(Law::Automorphism, vec![g]);
            }
        }
        for g in 0..self.group.order() {
            for h in 0..self.group.order() {
                if self.images[self.group.mul(g, h)] != &self.images[g] * &self.images[h] {
                    r.fail(Law::GroupHomomorphism, vec![g, h]);
                }
            }
        }
        r
    }

    pub fn to_module(&self) -> ModuleStructure<S> {
        ModuleStructure::new(self.algebra.clone(), FinHopf::group_algebra(&self.group), self.images.clone())
            .expect("shapes were validated")
    }

    pub fn image_span(&self) -> Subspace<S> {
        let n = self.algebra.dim();
        Subspace::span_of_matrices(&self.images, n, n).unwrap()
    }

    /// Equivalence along `phi: A1 -> A2`: the conjugated spans of the images agree.
    pub fn equivalent(&self, other: &GroupAction<S>, phi: &Matrix<S>) -> Result<bool> {
        let phi_inv = self.algebra.check_isomorphism(&other.algebra, phi)?;
        let n = other.algebra.dim();
        let conj: Vec<Matrix<S>> = self.images.iter().map(|m| m.conjugate_by(phi, &phi_inv)).collect();
        Ok(Subspace::span_of_matrices(&conj, n, n)? == other.image_span())
    }
}
