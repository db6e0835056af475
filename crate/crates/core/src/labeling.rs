//! Vertex labelings, neighborhood weights and LDA verification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{LdaError, Result};
use crate::graph::{Graph, Vertex};

/// A bijection `V -> {1..n}`; `labels[v]` is the label of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for (v, &l) in labels.iter().enumerate() {
            if l == 0 || l > n {
                return Err(LdaError::InvalidLabeling(format!(
                    "label {l} at vertex {v} is outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(LdaError::InvalidLabeling(format!("label {l} used twice")));
            }
        }
        Ok(Labeling { labels })
    }

    /// `f(v) = v + 1`.
    pub fn identity(n: usize) -> Self {
        Labeling {
            labels: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> usize {
        self.labels[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.labels
    }

    /// `f'(v) = n + 1 - f(v)`.
    pub fn complement(&self) -> Self {
        let n = self.labels.len();
        Labeling {
            labels: self.labels.iter().map(|&l| n + 1 - l).collect(),
        }
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.order() {
            return Err(LdaError::SizeMismatch {
                expected: g.order(),
                actual: self.labels.len(),
            });
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            labels: Vec<usize>,
        }
        Labeling::new(Raw::deserialize(d)?.labels).map_err(serde::de::Error::custom)
    }
}

/// Per-vertex neighbor label sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub weights: Vec<u64>,
}

impl WeightProfile {
    pub fn get(&self, v: Vertex) -> u64 {
        self.weights[v]
    }
}

pub fn weights(g: &Graph, f: &Labeling) -> Result<WeightProfile> {
    f.check_size(g)?;
    assert!(
        (g.order() as u128) * (g.order() as u128 + 1) / 2 <= u64::MAX as u128,
        "weights overflow u64"
    );
    let weights = g
        .vertices()
        .map(|v| g.neighbors(v).iter().map(|&x| f.get(x) as u64).sum())
        .collect();
    Ok(WeightProfile { weights })
}

/// Result of checking a labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub is_lda: bool,
    pub color_count: usize,
    /// Edges with equal endpoint weights, sorted.
    pub violations: Vec<(Vertex, Vertex)>,
    /// Weight value to the sorted vertices carrying it.
    pub weight_classes: BTreeMap<u64, Vec<Vertex>>,
    pub weights: Vec<u64>,
}

pub fn verify_lda(g: &Graph, f: &Labeling) -> Result<VerificationReport> {
    f.check_size(g)?;
    if let Some(v) = g.isolated_vertex() {
        return Err(LdaError::IsolatedVertex(v));
    }
    let w = weights(g, f)?.weights;
    let violations: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| w[u] == w[v])
        .collect();
    let mut weight_classes: BTreeMap<u64, Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices() {
        weight_classes.entry(w[v]).or_default().push(v);
    }
    Ok(VerificationReport {
        is_lda: violations.is_empty(),
        color_count: weight_classes.len(),
        violations,
        weight_classes,
        weights: w,
    })
}

/// All pairs `u < v` with `|N(u) △ N(v)| ∈ {1, 2}`. Any LDA labeling gives
/// such pairs distinct weights.
pub fn sym_diff_property_pairs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            let d = g.sym_diff_size(u, v).expect("ids in range");
            if d == 1 || d == 2 {
                out.push((u, v));
            }
        }
    }
    out
}

/// `t + 1` where `t` is the number of support vertices of the tree.
pub fn tree_leaf_lower_bound(t: &Graph) -> Result<usize> {
    if !t.is_tree() {
        return Err(LdaError::NotATree);
    }
    if t.order() < 3 {
        return Err(LdaError::Precondition(
            "tree needs at least 3 vertices".into(),
        ));
    }
    Ok(t.pendant_classes().len() + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantBound {
    /// Number of distinct pendant neighborhoods.
    pub s: usize,
    /// A proven lower bound on the number of colors, `s` or `s + 1`.
    pub certified: usize,
}

/// Lower bound from pendant vertices.
///
/// Pendants sharing a support have equal weight (the support's label) and
/// pendants on different supports differ, giving `s` colors. One more is
/// certified when the largest label is guaranteed to push some non-pendant
/// weight above every pendant weight: every non-pendant vertex has a
/// non-pendant neighbor and no support vertex is itself a pendant.
pub fn pendant_lower_bound(g: &Graph) -> Result<PendantBound> {
    let pendants = g.pendant_vertices();
    if pendants.is_empty() {
        return Err(LdaError::Precondition("graph has no pendant vertex".into()));
    }
    let supports = g.pendant_classes();
    let is_pendant = |v: Vertex| g.degree(v) == 1;
    let interior_ok = g
        .vertices()
        .filter(|&v| !is_pendant(v))
        .all(|v| g.neighbors(v).iter().any(|&x| !is_pendant(x)));
    let supports_ok = supports.iter().all(|&v| !is_pendant(v));
    let s = supports.len();
    Ok(PendantBound {
        s,
        certified: if interior_ok && supports_ok { s + 1 } else { s },
    })
}
