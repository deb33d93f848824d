//! Tree decompositions, balanced separations, Algorithm T and the
//! approximation-scheme dispatcher built on top of it.

mod algorithm_t;
mod decomposition;
mod fptas;
mod separation;

pub use algorithm_t::{algorithm_t, AlgorithmTResult};
pub use decomposition::{obtain_td, TdViolation, TreeDecomposition, EXACT_TD_MAX_VERTICES};
pub use fptas::{separator_branch_suffices, solve_fptas, solve_tw_combined, Branch, SchemeSolution};
pub(crate) use fptas::{check_eps, exact_or_advise};
pub use separation::{balanced_separation, indicator_weights, Separation};
