//! Comodule algebras and the coefficient tensor of a coaction.

mod coaction;
mod galois;
mod presentation;
mod support;

pub use coaction::Coaction;
pub use galois::{can_map, detect_grading, grading_to_coaction, CanReport, DetectedGrading};
pub(crate) use galois::finish_can;
pub use presentation::{
    relations_form_coideal, universal_hopf_presentation, HopfPresentation, HopfRelation, LinearDependency, NcPoly,
};
pub use support::{
    coarser_morphism, coefficient_dependencies, induced_dual_module, is_coalgebra_map, support_coalgebra,
    support_equivalent, CoalgebraMap, ComoduleEquivalence, SupportCoalgebra,
};
