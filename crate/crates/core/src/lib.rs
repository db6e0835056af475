//! Local distance antimagic (LDA) labelings.
//!
//! A bijection `f: V -> {1..n}` is LDA when adjacent vertices get different
//! weights `w(v) = sum of f over N(v)`. The least number of distinct weights
//! over all LDA labelings is `chi_ld`. This crate has graph generators and
//! products, labeling verification, neighborhood balanced colorings,
//! closed-form constructions and an exhaustive solver.

pub mod coloring;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod solver;

pub use coloring::SignColoring;
pub use constructions::{ConstructionResult, MagicRectangle};
pub use error::{LdaError, Result};
pub use graph::{FamilySpec, Graph, Vertex};
pub use labeling::{verify_lda, Labeling, VerificationReport, WeightProfile};
pub use solver::{ChiLd, SearchBudget, SolveResult};
