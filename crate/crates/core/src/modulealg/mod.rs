//! Module algebras: actions of a Hopf algebra on an algebra.

mod action;
mod cocomm;
mod dualnum;
mod equiv;
mod regular;
mod structure;

pub use action::GroupAction;
pub use cocomm::{enumerate_g0, is_g0_member, CocommutativeData, G0Data, G0_DEFAULT_BUDGET};
pub use dualnum::{dual_numbers_basis, DualNumbersClass};
pub use equiv::{ModuleEquivalence, UnitalEigenReport};
pub use regular::regular_action_on_dual;
pub use structure::ModuleStructure;
