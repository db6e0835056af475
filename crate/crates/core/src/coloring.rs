//! Neighborhood balanced colorings: ±1 vertex signs whose neighbor sums
//! vanish.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{LdaError, Result};
use crate::graph::{Graph, Vertex};

/// Default order cap for [`nbc_search`].
pub const NBC_SEARCH_LIMIT: usize = 24;

/// One sign in `{+1, -1}` per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignColoring {
    signs: Vec<i8>,
}

impl SignColoring {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some((v, s)) = signs.iter().enumerate().find(|(_, &s)| s != 1 && s != -1) {
            return Err(LdaError::InvalidLabeling(format!(
                "sign {s} at vertex {v} is not +1 or -1"
            )));
        }
        Ok(SignColoring { signs })
    }

    /// Builds a coloring from booleans, `true` meaning `+1`.
    pub fn from_positive(positive: impl IntoIterator<Item = bool>) -> Self {
        SignColoring {
            signs: positive
                .into_iter()
                .map(|p| if p { 1 } else { -1 })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> i8 {
        self.signs[v]
    }

    #[inline]
    pub fn is_positive(&self, v: Vertex) -> bool {
        self.signs[v] > 0
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.signs
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if self.signs.len() != g.order() {
            return Err(LdaError::SizeMismatch {
                expected: g.order(),
                actual: self.signs.len(),
            });
        }
        Ok(())
    }

    fn neighbor_sum(&self, g: &Graph, v: Vertex) -> i64 {
        g.neighbors(v).iter().map(|&x| self.signs[x] as i64).sum()
    }
}

impl<'de> Deserialize<'de> for SignColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            signs: Vec<i8>,
        }
        SignColoring::new(Raw::deserialize(d)?.signs).map_err(serde::de::Error::custom)
    }
}

/// Edge and vertex counts by color; `+1` is blue (`b`), `-1` is red (`r`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NbcCensus {
    pub rr: usize,
    pub bb: usize,
    pub rb: usize,
    pub r: usize,
    pub b: usize,
}

pub fn verify_nbc(g: &Graph, sigma: &SignColoring) -> Result<bool> {
    sigma.check_size(g)?;
    Ok(g.vertices().all(|v| sigma.neighbor_sum(g, v) == 0))
}

/// Like [`verify_nbc`] but only non-pendant vertices must be balanced.
pub fn verify_non_pendant_balanced(g: &Graph, sigma: &SignColoring) -> Result<bool> {
    sigma.check_size(g)?;
    Ok(g.vertices()
        .filter(|&v| g.degree(v) != 1)
        .all(|v| sigma.neighbor_sum(g, v) == 0))
}

/// Checks that every non-leaf vertex of the tree is balanced.
pub fn verify_interior_nbc(t: &Graph, sigma: &SignColoring) -> Result<bool> {
    check_tree(t)?;
    verify_non_pendant_balanced(t, sigma)
}

fn check_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(LdaError::NotATree);
    }
    if t.order() < 3 {
        return Err(LdaError::Precondition(
            "tree needs at least 3 vertices".into(),
        ));
    }
    Ok(())
}

pub fn census(g: &Graph, sigma: &SignColoring) -> Result<NbcCensus> {
    sigma.check_size(g)?;
    let mut c = NbcCensus::default();
    for &(u, v) in g.edges() {
        match (sigma.is_positive(u), sigma.is_positive(v)) {
            (true, true) => c.bb += 1,
            (false, false) => c.rr += 1,
            _ => c.rb += 1,
        }
    }
    c.b = sigma.signs.iter().filter(|&&s| s > 0).count();
    c.r = g.order() - c.b;
    Ok(c)
}

/// The `++--` pattern around `C_n`; exists iff `4 | n`.
pub fn nbc_cycle(n: usize) -> Result<SignColoring> {
    if n < 3 {
        return Err(LdaError::InvalidSpec(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    if !n.is_multiple_of(4) {
        return Err(LdaError::NoNbcExists(format!(
            "C_{n}: n is not a multiple of 4"
        )));
    }
    Ok(SignColoring::from_positive((0..n).map(|i| i % 4 < 2)))
}

/// Splits each part (in the id layout of the multipartite generator) into a
/// `+1` first half and a `-1` second half; exists iff all parts are even.
pub fn nbc_complete_multipartite(parts: &[usize]) -> Result<SignColoring> {
    if parts.len() < 2 {
        return Err(LdaError::InvalidSpec("need at least two parts".into()));
    }
    if let Some(p) = parts.iter().find(|&&p| p % 2 == 1) {
        return Err(LdaError::NoNbcExists(format!("part of odd size {p}")));
    }
    Ok(SignColoring::from_positive(
        parts.iter().flat_map(|&p| (0..p).map(move |i| i < p / 2)),
    ))
}

enum Step {
    /// Leaf `x` whose support `v` has one other neighbor `w`.
    Single { x: Vertex, w: Vertex },
    /// Two leaves of the same support.
    Pair { x: Vertex, y: Vertex },
}

/// Colors a tree so every non-leaf vertex is balanced.
///
/// Repeatedly takes the smaller-id end `x` of a longest path with support
/// `v`. If `x` is the only leaf of `v`, then `deg v = 2`; remove `x` and later
/// give it the sign opposite to `v`'s other neighbor. Otherwise remove `x` and
/// the smallest other leaf `y` of `v`, later signed `+1` and `-1`. What remains
/// is a star with an even number of leaves: center `+1`, leaves split `+`/`-`
/// in id order.
pub fn nbc_tree_interior(t: &Graph) -> Result<SignColoring> {
    check_tree(t)?;
    if let Some(v) = t
        .vertices()
        .find(|&v| t.degree(v) > 1 && t.degree(v) % 2 == 1)
    {
        return Err(LdaError::NoNbcExists(format!(
            "internal vertex {v} has odd degree {}",
            t.degree(v)
        )));
    }
    let n = t.order();
    let mut alive = vec![true; n];
    let mut deg = t.degrees();
    let mut steps = Vec::new();
    let mut remaining = n;

    loop {
        let start = (0..n).find(|&v| alive[v]).expect("tree nonempty");
        let (a, _) = farthest(t, &alive, start);
        let (b, dist) = farthest(t, &alive, a);
        if dist <= 2 {
            break;
        }
        let x = a.min(b);
        let v = *t
            .neighbors(x)
            .iter()
            .find(|&&y| alive[y])
            .expect("leaf has support");
        let leaves: Vec<Vertex> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&y| alive[y] && deg[y] == 1)
            .collect();
        if leaves.len() == 1 {
            let w = *t
                .neighbors(v)
                .iter()
                .find(|&&y| alive[y] && y != x)
                .expect("support of degree 2");
            debug_assert_eq!(deg[v], 2);
            alive[x] = false;
            deg[v] -= 1;
            remaining -= 1;
            steps.push(Step::Single { x, w });
        } else {
            let y = *leaves.iter().find(|&&y| y != x).expect("second leaf");
            alive[x] = false;
            alive[y] = false;
            deg[v] -= 2;
            remaining -= 2;
            steps.push(Step::Pair { x, y });
        }
    }
    debug_assert!(remaining >= 3);

    let mut sign = vec![0i8; n];
    let center = (0..n)
        .filter(|&v| alive[v])
        .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
        .expect("star center");
    sign[center] = 1;
    let leaves: Vec<Vertex> = (0..n).filter(|&v| alive[v] && v != center).collect();
    for (i, &l) in leaves.iter().enumerate() {
        sign[l] = if i < leaves.len() / 2 { 1 } else { -1 };
    }
    for step in steps.iter().rev() {
        match *step {
            Step::Single { x, w } => sign[x] = -sign[w],
            Step::Pair { x, y } => {
                sign[x] = 1;
                sign[y] = -1;
            }
        }
    }
    let sigma = SignColoring::new(sign).expect("all vertices signed");
    debug_assert!(verify_interior_nbc(t, &sigma).unwrap());
    Ok(sigma)
}

/// Farthest alive vertex from `s` (smallest id on ties) and its distance.
fn farthest(g: &Graph, alive: &[bool], s: Vertex) -> (Vertex, usize) {
    let mut dist = vec![usize::MAX; g.order()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut best = (s, 0);
    while let Some(u) = queue.pop_front() {
        let d = dist[u];
        if d > best.1 || (d == best.1 && u < best.0) {
            best = (u, d);
        }
        for &w in g.neighbors(u) {
            if alive[w] && dist[w] == usize::MAX {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    best
}

/// Searches for a full NBC with the default order cap.
pub fn nbc_search(g: &Graph) -> Result<Option<SignColoring>> {
    nbc_search_with_limit(g, NBC_SEARCH_LIMIT)
}

pub fn nbc_search_with_limit(g: &Graph, limit: usize) -> Result<Option<SignColoring>> {
    let all = vec![true; g.order()];
    balanced_search(g, &all, limit)
}

/// Searches for a coloring balancing every non-pendant vertex.
pub fn non_pendant_nbc_search(g: &Graph, limit: usize) -> Result<Option<SignColoring>> {
    let mask: Vec<bool> = g.vertices().map(|v| g.degree(v) != 1).collect();
    balanced_search(g, &mask, limit)
}

/// Depth-first over sign vectors in vertex order, `+1` before `-1`, so the
/// first witness is lexicographically smallest. A branch is cut as soon as
/// some constrained vertex can no longer reach a zero neighbor sum.
pub fn balanced_search(
    g: &Graph,
    constrained: &[bool],
    limit: usize,
) -> Result<Option<SignColoring>> {
    let n = g.order();
    if n > limit {
        return Err(LdaError::Budget(format!(
            "sign search limited to {limit} vertices, graph has {n}"
        )));
    }
    if constrained.len() != n {
        return Err(LdaError::SizeMismatch {
            expected: n,
            actual: constrained.len(),
        });
    }
    if g.vertices().any(|v| constrained[v] && g.degree(v) % 2 == 1) {
        return Ok(None);
    }
    let mut st = SignSearch {
        g,
        constrained,
        sum: vec![0; n],
        open: g.degrees().into_iter().map(|d| d as i64).collect(),
        sign: vec![0; n],
    };
    Ok(st
        .dfs(0)
        .then(|| SignColoring::new(st.sign).expect("complete")))
}

struct SignSearch<'a> {
    g: &'a Graph,
    constrained: &'a [bool],
    sum: Vec<i64>,
    open: Vec<i64>,
    sign: Vec<i8>,
}

impl SignSearch<'_> {
    fn dfs(&mut self, v: Vertex) -> bool {
        if v == self.g.order() {
            return true;
        }
        for s in [1i8, -1] {
            self.sign[v] = s;
            let mut ok = true;
            for &x in self.g.neighbors(v) {
                self.sum[x] += s as i64;
                self.open[x] -= 1;
                if self.constrained[x] && self.sum[x].abs() > self.open[x] {
                    ok = false;
                }
            }
            if ok && self.dfs(v + 1) {
                return true;
            }
            for &x in self.g.neighbors(v) {
                self.sum[x] -= s as i64;
                self.open[x] += 1;
            }
        }
        self.sign[v] = 0;
        false
    }
}
