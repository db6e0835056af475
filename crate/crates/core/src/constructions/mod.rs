//! Closed-form labelings for graph families and graph compositions.
//!
//! Every public constructor builds the graph with the id layout documented
//! in [`crate::graph`], computes the labeling, runs [`verify_lda`] and refuses
//! to return a labeling that is not LDA or exceeds its claimed color bound.

use serde::{Deserialize, Serialize};

use crate::coloring::{verify_nbc, SignColoring};
use crate::error::{LdaError, Result};
use crate::graph::Graph;
use crate::labeling::{verify_lda, Labeling, VerificationReport};

mod book;
mod copies;
mod corona;
mod direct;
mod lexi;
mod magic;
mod multipartite;

pub use book::{book_weight_values, label_book_c4};
pub use copies::{
    check_copy_condition, check_pendant_copy_conditions, copy_condition_violation, copy_weight_law,
    label_copies_nbc, label_copies_pendant, pendant_condition_violation,
};
pub use corona::label_corona;
pub use direct::{
    direct_bipartite_case, direct_bipartite_weights, label_direct_complete_bipartite,
    label_direct_nbc, DirectCase,
};
pub use lexi::{
    label_lexi_biregular, label_lexi_bistar, label_lexi_join_k1, label_lexi_regular_bipartite,
};
pub use magic::{magic_rectangle, magic_rectangle_seeded, MagicRectangle};
pub use multipartite::label_complete_multipartite;

/// A constructed graph with its verified labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub graph: Graph,
    #[serde(flatten)]
    pub labeling: Labeling,
    pub report: VerificationReport,
    /// Upper bound on the number of colors stated for these parameters.
    pub claimed_bound: usize,
}

impl ConstructionResult {
    pub fn color_count(&self) -> usize {
        self.report.color_count
    }
}

/// Verifies and packages a labeling produced by a formula.
pub(crate) fn finish(
    graph: Graph,
    labels: Vec<usize>,
    claimed_bound: usize,
) -> Result<ConstructionResult> {
    let labeling = Labeling::new(labels)
        .map_err(|e| LdaError::Verification(format!("labels are not a bijection: {e}")))?;
    let report = verify_lda(&graph, &labeling)?;
    if !report.is_lda {
        return Err(LdaError::Verification(format!(
            "adjacent equal weights on {:?}",
            &report.violations[..report.violations.len().min(5)]
        )));
    }
    if report.color_count > claimed_bound {
        return Err(LdaError::Verification(format!(
            "{} colors exceed the bound {claimed_bound}",
            report.color_count
        )));
    }
    Ok(ConstructionResult {
        graph,
        labeling,
        report,
        claimed_bound,
    })
}

/// Checks that `f` is an LDA labeling of `g` and returns its color count.
pub(crate) fn base_colors(g: &Graph, f: &Labeling) -> Result<usize> {
    let r = verify_lda(g, f)?;
    if !r.is_lda {
        return Err(LdaError::InvalidLabeling(format!(
            "base labeling is not LDA: equal weights on {:?}",
            r.violations[0]
        )));
    }
    Ok(r.color_count)
}

pub(crate) fn require_nbc(g: &Graph, sigma: &SignColoring) -> Result<()> {
    if !verify_nbc(g, sigma)? {
        return Err(LdaError::Precondition(
            "sign coloring is not neighborhood balanced".into(),
        ));
    }
    Ok(())
}

/// `m(f-1)+j` for a positive sign, `mf+1-j` for a negative one (`j` is
/// 1-based). Over `j = 1..=m` both fill the block `m(f-1)+1..=mf`.
#[inline]
pub(crate) fn spread(m: usize, f: usize, positive: bool, j: usize) -> usize {
    debug_assert!((1..=m).contains(&j));
    if positive {
        m * (f - 1) + j
    } else {
        m * f + 1 - j
    }
}
