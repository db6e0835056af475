use super::{base_colors, finish, ConstructionResult};
use crate::error::{LdaError, Result};
use crate::graph::{corona_empty, Graph};
use crate::labeling::Labeling;

/// Labels `G ∘ K̄_{2p}` from an LDA labeling `f` of `G`.
///
/// Base vertices keep `f`. Pendant `i` (1-based) of base vertex `v_j` gets
/// `i*n + j` for odd `i` and `(i+1)*n + 1 - j` for even `i`. Each pendant then
/// weighs `f(v_j)` and each base vertex weighs
/// `((2p+1)(2pn+n+1) - (n+1))/2 + w_f(v_j)`.
pub fn label_corona(g: &Graph, f: &Labeling, p: usize) -> Result<ConstructionResult> {
    if p == 0 {
        return Err(LdaError::Precondition("p must be positive".into()));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 1) {
        return Err(LdaError::Precondition(format!("vertex {v} is pendant")));
    }
    let colors = base_colors(g, f)?;
    let n = g.order();
    let r = 2 * p;
    let h = corona_empty(g, r)?;
    let mut labels = vec![0; h.order()];
    for v in 0..n {
        labels[v] = f.get(v);
        let j = v + 1;
        for i in 1..=r {
            labels[n + v * r + (i - 1)] = if i % 2 == 1 {
                i * n + j
            } else {
                (i + 1) * n + 1 - j
            };
        }
    }
    finish(h, labels, colors + n)
}
