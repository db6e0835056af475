//! Simple undirected graphs, named families and the compositions used by the
//! constructions.
//!
//! Vertex ids are contiguous (`0..n`). Every generator and product documents
//! its id layout; the labeling formulas in [`crate::constructions`] index
//! vertices by role and rely on these layouts.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LdaError, Result};

pub type Vertex = usize;

/// Above this order the adjacency bit matrix is not materialized and
/// membership falls back to binary search.
const MATRIX_LIMIT: usize = 4096;

#[derive(Clone)]
struct AdjMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl AdjMatrix {
    fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; words * n];
        for &(u, v) in edges {
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        AdjMatrix { words, bits }
    }

    #[inline]
    fn get(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically.
/// Neighbor lists are sorted. Values are immutable after construction.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    matrix: Option<AdjMatrix>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(LdaError::InvalidVertex { vertex: x, n });
                }
            }
            if a == b {
                return Err(LdaError::InvalidGraph(format!("loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(LdaError::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Internal constructor for edge lists already known to be simple.
    fn from_simple_edges(n: usize, mut edges: Vec<(Vertex, Vertex)>) -> Self {
        for e in edges.iter_mut() {
            debug_assert!(e.0 != e.1 && e.0 < n && e.1 < n);
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted_unique(n, edges)
    }

    fn from_sorted_unique(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in adj.iter_mut() {
            nb.sort_unstable();
        }
        let matrix = (n <= MATRIX_LIMIT).then(|| AdjMatrix::new(n, &edges));
        Graph {
            n,
            edges,
            adj,
            matrix,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(LdaError::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        match &self.matrix {
            Some(m) => m.get(u, v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// First vertex with no neighbors, if any.
    pub fn isolated_vertex(&self) -> Option<Vertex> {
        self.vertices().find(|&v| self.adj[v].is_empty())
    }

    /// Returns `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first().map(Vec::len)?;
        self.adj.iter().all(|nb| nb.len() == first).then_some(first)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Proper 2-coloring by BFS, `side[v] ∈ {0, 1}`, with the smallest vertex
    /// of each component on side 0.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in self.vertices() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// A bipartition `(A, B)` if the graph is bipartite (A holds side 0 of
    /// [`Graph::two_coloring`]).
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let side = self.two_coloring()?;
        let (a, b): (Vec<Vertex>, Vec<Vertex>) = self.vertices().partition(|&v| side[v] == 0);
        Some((a, b))
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Degree-one vertices.
    pub fn pendant_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// The distinct pendant neighborhoods `{N(l) : l pendant}`. Each such
    /// neighborhood is a single support vertex, so the classes are returned
    /// as the sorted list of support vertices; its length is `s`.
    pub fn pendant_classes(&self) -> Vec<Vertex> {
        let mut supports: Vec<Vertex> = self
            .pendant_vertices()
            .into_iter()
            .map(|l| self.adj[l][0])
            .collect();
        supports.sort_unstable();
        supports.dedup();
        supports
    }

    /// `|N(u) △ N(v)|` over open neighborhoods.
    pub fn sym_diff_size(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut common) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(a.len() + b.len() - 2 * common)
    }

    /// Returns the partite sets `(A, B)` iff the graph is `K_{|A|,|B|}`:
    /// connected, bipartite, both sides nonempty and every cross pair adjacent.
    pub fn is_complete_bipartite(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        if !self.is_connected() {
            return None;
        }
        let (a, b) = self.bipartition()?;
        if a.is_empty() || b.is_empty() || self.size() != a.len() * b.len() {
            return None;
        }
        Some((a, b))
    }

    pub fn structure(&self) -> StructureSummary {
        let pendants = self.pendant_vertices();
        let classes = self.pendant_classes();
        StructureSummary {
            degrees: self.degrees(),
            regular_degree: self.regular_degree(),
            bipartition: self.bipartition(),
            components: self.components(),
            pendant_class_count: classes.len(),
            pendants,
            pendant_classes: classes,
        }
    }
}

/// Bundle of the structural queries the constructions check as
/// preconditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub degrees: Vec<usize>,
    pub regular_degree: Option<usize>,
    pub bipartition: Option<(Vec<Vertex>, Vec<Vertex>)>,
    pub components: Vec<Vec<Vertex>>,
    pub pendants: Vec<Vertex>,
    /// Support vertices, one per distinct pendant neighborhood.
    pub pendant_classes: Vec<Vertex>,
    pub pendant_class_count: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::from_edges(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}

/// Named graph families.
///
/// Id layouts:
/// - `Path(n)`: `0 - 1 - ... - (n-1)`.
/// - `Cycle(n)`: path plus the edge `(0, n-1)`.
/// - `CompleteMultipartite(parts)`: part `p` occupies the next `parts[p]`
///   consecutive ids.
/// - `Star(l)`: center `0`, leaves `1..=l`.
/// - `Bistar(c, d)`: centers `u = 0` and `v = 1`; leaves of `u` are
///   `2..2+c`, leaves of `v` are `2+c..2+c+d`.
/// - `Friendship(t)`: center `0`; triangle `i` (0-based) uses `1+2i, 2+2i`.
/// - `Wheel(n)`: rim cycle `0..n`, hub `n`.
/// - `BookC4(t)`: `u = 0`, `x_i = i`, `y_i = t+i`, `z_i = 2t+i` for
///   `i = 1..=t`, with edges `u x_i, u y_i, x_i z_i, y_i z_i`.
/// - `Tree(edges)`: the given edge list on `edges.len() + 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
    Bistar(usize, usize),
    Friendship(usize),
    Wheel(usize),
    BookC4(usize),
    Empty(usize),
    Tree(Vec<(Vertex, Vertex)>),
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(LdaError::InvalidSpec(msg()))
    }
}

/// Builds a named graph with its documented id layout.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    let g = match spec {
        Path(n) => {
            need(*n >= 1, || "path needs n >= 1".into())?;
            Graph::from_simple_edges(*n, (1..*n).map(|i| (i - 1, i)).collect())
        }
        Cycle(n) => {
            need(*n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
            Graph::from_simple_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)).collect())
        }
        Complete(n) => {
            need(*n >= 1, || "complete graph needs n >= 1".into())?;
            let e = (0..*n)
                .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
                .collect();
            Graph::from_simple_edges(*n, e)
        }
        CompleteMultipartite(parts) => {
            need(!parts.is_empty(), || "need at least one part".into())?;
            need(parts.iter().all(|&p| p >= 1), || {
                "part sizes must be >= 1".into()
            })?;
            let n: usize = parts.iter().sum();
            let mut owner = Vec::with_capacity(n);
            for (p, &size) in parts.iter().enumerate() {
                owner.extend(std::iter::repeat_n(p, size));
            }
            let e = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| owner[u] != owner[v])
                .collect();
            Graph::from_simple_edges(n, e)
        }
        Star(l) => {
            need(*l >= 1, || "star needs at least one leaf".into())?;
            Graph::from_simple_edges(l + 1, (1..=*l).map(|i| (0, i)).collect())
        }
        Bistar(c, d) => {
            need(*c >= 1 && *d >= 1, || "bistar needs c, d >= 1".into())?;
            let mut e = vec![(0, 1)];
            e.extend((0..*c).map(|i| (0, 2 + i)));
            e.extend((0..*d).map(|i| (1, 2 + c + i)));
            Graph::from_simple_edges(2 + c + d, e)
        }
        Friendship(t) => {
            need(*t >= 1, || "friendship graph needs t >= 1".into())?;
            let mut e = Vec::new();
            for i in 0..*t {
                let (a, b) = (1 + 2 * i, 2 + 2 * i);
                e.extend([(0, a), (0, b), (a, b)]);
            }
            Graph::from_simple_edges(1 + 2 * t, e)
        }
        Wheel(n) => {
            need(*n >= 3, || format!("wheel needs n >= 3, got {n}"))?;
            let rim = generate(&Cycle(*n))?;
            join_k1(&rim)
        }
        BookC4(t) => {
            need(*t >= 1, || "book needs t >= 1".into())?;
            let mut e = Vec::new();
            for i in 1..=*t {
                let (x, y, z) = (i, t + i, 2 * t + i);
                e.extend([(0, x), (0, y), (x, z), (y, z)]);
            }
            Graph::from_simple_edges(3 * t + 1, e)
        }
        Empty(n) => {
            need(*n >= 1, || "empty graph needs n >= 1".into())?;
            Graph::empty(*n)
        }
        Tree(edges) => {
            let g = Graph::from_edges(edges.len() + 1, edges.iter().copied())
                .map_err(|e| LdaError::InvalidSpec(e.to_string()))?;
            need(g.is_tree(), || "edge list is not a tree".into())?;
            g
        }
    };
    Ok(g)
}

/// `m` disjoint copies; copy `j` of vertex `v` has id `j * |V(G)| + v`.
pub fn disjoint_union(g: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(LdaError::Precondition("need at least one copy".into()));
    }
    let n = g.order();
    let e = (0..m)
        .flat_map(|j| g.edges().iter().map(move |&(u, v)| (j * n + u, j * n + v)))
        .collect();
    Ok(Graph::from_simple_edges(m * n, e))
}

/// `G ∘ K̄_r`: `r` pendants on every vertex. Pendant `j` (0-based) of base
/// vertex `v` has id `n + v * r + j`.
pub fn corona_empty(g: &Graph, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(LdaError::Precondition("need at least one pendant".into()));
    }
    let n = g.order();
    let mut e = g.edges().to_vec();
    for v in 0..n {
        e.extend((0..r).map(|j| (v, n + v * r + j)));
    }
    Ok(Graph::from_simple_edges(n * (1 + r), e))
}

fn check_nonempty(g: &Graph, h: &Graph) -> Result<()> {
    if g.order() == 0 || h.order() == 0 {
        return Err(LdaError::Precondition(
            "product factors must be nonempty".into(),
        ));
    }
    Ok(())
}

/// Direct (tensor) product `G × H`; `(g, h)` has id `g * |V(H)| + h`.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph> {
    check_nonempty(g, h)?;
    let nh = h.order();
    let mut e = Vec::with_capacity(2 * g.size() * h.size());
    for &(a, b) in g.edges() {
        for &(c, d) in h.edges() {
            e.push((a * nh + c, b * nh + d));
            e.push((a * nh + d, b * nh + c));
        }
    }
    Ok(Graph::from_simple_edges(g.order() * nh, e))
}

/// Lexicographic product `G[H]`; `(g, h)` has id `g * |V(H)| + h`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    check_nonempty(g, h)?;
    let nh = h.order();
    let mut e = Vec::new();
    for &(a, b) in g.edges() {
        for x in 0..nh {
            for y in 0..nh {
                e.push((a * nh + x, b * nh + y));
            }
        }
    }
    for a in g.vertices() {
        e.extend(h.edges().iter().map(|&(x, y)| (a * nh + x, a * nh + y)));
    }
    Ok(Graph::from_simple_edges(g.order() * nh, e))
}

/// `G + K_1`: a new vertex with id `|V(G)|` joined to every vertex.
pub fn join_k1(g: &Graph) -> Graph {
    let n = g.order();
    let mut e = g.edges().to_vec();
    e.extend((0..n).map(|v| (v, n)));
    Graph::from_simple_edges(n + 1, e)
}
