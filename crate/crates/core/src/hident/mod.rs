//! Multilinear polynomial H-identities and their codimensions.

mod codim;
mod graded;
mod growth;
mod poly;

pub use codim::{codim, monomial_count, CodimConfig, DEFAULT_BUDGET, DEFAULT_SHARD_SIZE};
pub use graded::{codim_equiv_check, graded_codim, graded_codim_direct, CodimEquivReport, GradedCodimReport};
pub use growth::{codim_series, dual_numbers_invariant_ideal_dim, growth_check, CodimReport, GrowthVerdict, GrowthWindow};
pub use poly::{transport_map, HTerm, MultilinearHPolynomial};
