use super::{finish, ConstructionResult};
use crate::error::{LdaError, Result};
use crate::graph::{generate, FamilySpec};

/// Labels `K_{n_1,...,n_r}` with exactly `r` colors.
///
/// A vertex's weight is the total label sum minus its own part's sum, so the
/// colors are the distinct part sums. Parts receive consecutive label blocks
/// in order of increasing size (ties by position): each block then starts
/// above the previous one and is at least as long, so the part sums strictly
/// increase.
pub fn label_complete_multipartite(parts: &[usize]) -> Result<ConstructionResult> {
    if parts.len() < 2 {
        return Err(LdaError::InvalidSpec("need at least two parts".into()));
    }
    let g = generate(&FamilySpec::CompleteMultipartite(parts.to_vec()))?;
    let mut starts = vec![0usize; parts.len()];
    let mut acc = 0;
    for (i, s) in parts.iter().enumerate() {
        starts[i] = acc;
        acc += s;
    }
    let mut by_size: Vec<usize> = (0..parts.len()).collect();
    by_size.sort_by_key(|&i| (parts[i], i));
    let mut f = vec![0; g.order()];
    let mut next = 1;
    for &p in &by_size {
        for label in &mut f[starts[p]..starts[p] + parts[p]] {
            *label = next;
            next += 1;
        }
    }
    finish(g, f, parts.len())
}
