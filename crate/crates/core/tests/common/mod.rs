#![allow(dead_code)]

use lda_core::coloring::{balanced_search, SignColoring};
use lda_core::graph::{Graph, Vertex};
use rand::Rng;

/// Graph on `n` vertices from a bitmask over the pairs `(u, v)`, `u < v`, in
/// lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pairs(n);
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p);
    Graph::from_edges(n, edges).unwrap()
}

fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

/// One representative of every connected graph on `n` vertices up to
/// isomorphism (smallest mask over all relabelings).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs = pairs(n);
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canonical = maps.iter().all(|m| {
            let mut image = 0u64;
            for (i, &j) in m.iter().enumerate() {
                image |= (mask >> i & 1) << j;
            }
            image >= mask
        });
        if canonical {
            let g = graph_from_mask(n, mask);
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// Uniform random labeled tree on `n >= 2` vertices via a Prüfer sequence.
pub fn prufer_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n == 2 {
        return Graph::from_edges(2, [(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// Exhaustive interior NBC search, independent of the tree algorithm.
pub fn interior_nbc_by_search(t: &Graph) -> Option<SignColoring> {
    let mask: Vec<bool> = t.vertices().map(|v| t.degree(v) > 1).collect();
    balanced_search(t, &mask, 24).unwrap()
}

/// Every permutation of `1..=n`, in lexicographic order.
pub fn all_labelings(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .map(|p| p.into_iter().map(|x| x + 1).collect())
        .collect()
}

/// All multisets of at least two positive part sizes with sum at most `max`.
pub fn part_lists(max: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for p in min..=rest {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, 1, &mut Vec::new(), &mut out);
    out
}
