//! Structure-constant tables for algebras, coalgebras and Hopf algebras.

mod algebra;
mod coalgebra;
mod group;
mod grouplike;
mod hopf;
mod report;
mod smash;

pub use algebra::FinAlgebra;
pub use coalgebra::FinCoalgebra;
pub use group::FiniteGroup;
pub use grouplike::{GrouplikeSearch, EXHAUSTIVE_LIMIT};
pub use hopf::FinHopf;
pub use report::{Failure, Law, Report};
pub use smash::smash_product;

pub(crate) use coalgebra::sparse as coalgebra_sparse;
