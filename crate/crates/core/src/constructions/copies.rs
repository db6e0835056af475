use std::collections::BTreeSet;

use super::{base_colors, finish, require_nbc, spread, ConstructionResult};
use crate::coloring::{verify_non_pendant_balanced, SignColoring};
use crate::error::{LdaError, Result};
use crate::graph::{disjoint_union, Graph, Vertex};
use crate::labeling::{weights, Labeling};

/// Twice the common weight of every copy of `v` in `mG`:
/// `2m*w_f(v) + (1-m)*deg(v)`.
fn doubled_copy_weight(g: &Graph, w: &[u64], m: usize, v: Vertex) -> i64 {
    2 * m as i64 * w[v] as i64 + (1 - m as i64) * g.degree(v) as i64
}

/// Per-vertex weight `m*w_f(v) + (1-m)/2*deg(v)` shared by all copies of `v`
/// when `v` is balanced. Requires even degrees.
pub fn copy_weight_law(g: &Graph, f: &Labeling, m: usize) -> Result<Vec<i64>> {
    let w = weights(g, f)?.weights;
    g.vertices()
        .map(|v| {
            let d = doubled_copy_weight(g, &w, m, v);
            if d % 2 != 0 {
                return Err(LdaError::Precondition(format!("vertex {v} has odd degree")));
            }
            Ok(d / 2)
        })
        .collect()
}

/// First edge whose endpoints get equal copy weights.
pub fn copy_condition_violation(
    g: &Graph,
    f: &Labeling,
    m: usize,
) -> Result<Option<(Vertex, Vertex)>> {
    let w = weights(g, f)?.weights;
    Ok(g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| doubled_copy_weight(g, &w, m, u) == doubled_copy_weight(g, &w, m, v)))
}

/// Whether every edge has distinct copy weights at its endpoints.
pub fn check_copy_condition(g: &Graph, f: &Labeling, m: usize) -> Result<bool> {
    Ok(copy_condition_violation(g, f, m)?.is_none())
}

/// First failure of the pendant-copy conditions, described.
///
/// At each non-pendant support `y` the offset
/// `r = m(f(y) - w_f(y) + deg(y)/2) - deg(y)/2` must lie outside `0..=m-1`,
/// otherwise some pendant copy would weigh the same as its support copy.
/// Adjacent non-pendant vertices must have distinct copy weights.
pub fn pendant_condition_violation(g: &Graph, f: &Labeling, m: usize) -> Result<Option<String>> {
    let w = weights(g, f)?.weights;
    let pendant = |v: Vertex| g.degree(v) == 1;
    for y in g.pendant_classes() {
        if pendant(y) {
            continue;
        }
        let (m_, d) = (m as i64, g.degree(y) as i64);
        let twice_r = 2 * m_ * (f.get(y) as i64 - w[y] as i64) + (m_ - 1) * d;
        if (0..=2 * (m_ - 1)).contains(&twice_r) {
            return Ok(Some(format!(
                "support vertex {y}: offset {} lies in 0..={}",
                twice_r as f64 / 2.0,
                m - 1
            )));
        }
    }
    for &(u, v) in g.edges() {
        if !pendant(u)
            && !pendant(v)
            && doubled_copy_weight(g, &w, m, u) == doubled_copy_weight(g, &w, m, v)
        {
            return Ok(Some(format!(
                "adjacent non-pendant vertices {u} and {v} collide"
            )));
        }
    }
    Ok(None)
}

pub fn check_pendant_copy_conditions(g: &Graph, f: &Labeling, m: usize) -> Result<bool> {
    Ok(pendant_condition_violation(g, f, m)?.is_none())
}

/// Copy `i` (1-based) of `v` gets `m(f(v)-1)+i` or `m*f(v)+1-i` by the sign
/// of `v`.
fn copies_labels(g: &Graph, f: &Labeling, sigma: &SignColoring, m: usize) -> Vec<usize> {
    let n = g.order();
    let mut labels = vec![0; n * m];
    for i in 1..=m {
        for v in g.vertices() {
            labels[(i - 1) * n + v] = spread(m, f.get(v), sigma.is_positive(v), i);
        }
    }
    labels
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(LdaError::Precondition("need at least one copy".into()));
    }
    Ok(())
}

/// Labels `mG` from an LDA labeling `f` and an NBC `sigma` of `G`; every copy
/// of `v` then weighs `m*w_f(v) + (1-m)/2*deg(v)`, so `mG` uses no more colors
/// than `f`.
pub fn label_copies_nbc(
    g: &Graph,
    f: &Labeling,
    sigma: &SignColoring,
    m: usize,
) -> Result<ConstructionResult> {
    check_m(m)?;
    require_nbc(g, sigma)?;
    let colors = base_colors(g, f)?;
    if let Some((u, v)) = copy_condition_violation(g, f, m)? {
        return Err(LdaError::CopyCondition { u, v });
    }
    let h = disjoint_union(g, m)?;
    finish(h, copies_labels(g, f, sigma, m), colors)
}

/// Labels `mG` for a graph with pendant vertices, given `sigma` balancing all
/// non-pendant vertices. With `s` distinct pendant neighborhoods and `q`
/// distinct non-pendant weights under `f`, at most `m*s + q` colors are used
/// (never more than `m*s + p` for the `p` colors of `f`).
pub fn label_copies_pendant(
    g: &Graph,
    f: &Labeling,
    sigma: &SignColoring,
    m: usize,
) -> Result<ConstructionResult> {
    check_m(m)?;
    if g.pendant_vertices().is_empty() {
        return Err(LdaError::Precondition("graph has no pendant vertex".into()));
    }
    if !verify_non_pendant_balanced(g, sigma)? {
        return Err(LdaError::Precondition(
            "sign coloring does not balance every non-pendant vertex".into(),
        ));
    }
    base_colors(g, f)?;
    if let Some(why) = pendant_condition_violation(g, f, m)? {
        return Err(LdaError::PendantCondition(why));
    }
    let s = g.pendant_classes().len();
    let w = weights(g, f)?.weights;
    let interior: BTreeSet<u64> = g
        .vertices()
        .filter(|&v| g.degree(v) != 1)
        .map(|v| w[v])
        .collect();
    let h = disjoint_union(g, m)?;
    finish(h, copies_labels(g, f, sigma, m), m * s + interior.len())
}
