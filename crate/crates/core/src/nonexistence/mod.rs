//! Deciding parameter rows: constructions first, then refutation.

pub mod filters;
pub mod lambdas;
pub mod search;
pub mod verdict;

pub use lambdas::{pair_lambda_solutions, point_lambda_values, PairLambdaSolution, PointLambdas};
pub use verdict::{decide, decide_all, decide_with_catalog, Refutation, RefutationKind, Verdict, Witness};
