use super::{base_colors, finish, require_nbc, spread, ConstructionResult};
use crate::coloring::SignColoring;
use crate::error::{LdaError, Result};
use crate::graph::{generate, join_k1, lexicographic_product, FamilySpec, Graph, Vertex};
use crate::labeling::Labeling;

/// Checks the inner factor: `2t`-regular with `t >= 1`, balanced by `sigma`,
/// LDA-labeled by `f`. Returns the color count of `f`.
fn inner_factor(h: &Graph, f: &Labeling, sigma: &SignColoring) -> Result<usize> {
    match h.regular_degree() {
        Some(d) if d >= 2 && d % 2 == 0 => {}
        _ => {
            return Err(LdaError::Precondition(
                "H must be regular of positive even degree".into(),
            ))
        }
    }
    require_nbc(h, sigma)?;
    base_colors(h, f)
}

fn sides(g: &Graph) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    g.bipartition()
        .ok_or_else(|| LdaError::Precondition("G must be bipartite".into()))
}

fn uniform_degree(g: &Graph, side: &[Vertex]) -> Option<usize> {
    let d = g.degree(*side.first()?);
    side.iter().all(|&v| g.degree(v) == d).then_some(d)
}

/// Labels `G[H]` for a `k`-regular bipartite `G` (`k >= 2`) with sides of size
/// `s`. Over side vertex `j` of `A` the copy of `H` gets `s(f(v)-1)+j` or
/// `s*f(v)+1-j` by the sign of `v`; side `B` adds `sn`. Uses at most twice
/// the colors of `f`.
pub fn label_lexi_regular_bipartite(
    g: &Graph,
    h: &Graph,
    f: &Labeling,
    sigma: &SignColoring,
) -> Result<ConstructionResult> {
    match g.regular_degree() {
        Some(k) if k >= 2 => {}
        _ => {
            return Err(LdaError::Precondition(
                "G must be regular of degree at least 2".into(),
            ))
        }
    }
    let (a, b) = sides(g)?;
    let colors = inner_factor(h, f, sigma)?;
    let (n, s) = (h.order(), a.len());
    let mut labels = vec![0; g.order() * n];
    for (off, side) in [(0, &a), (s * n, &b)] {
        for (j, &x) in side.iter().enumerate() {
            for v in h.vertices() {
                labels[x * n + v] = off + spread(s, f.get(v), sigma.is_positive(v), j + 1);
            }
        }
    }
    finish(lexicographic_product(g, h)?, labels, 2 * colors)
}

/// Labels `G[H]` for a bipartite `G` whose sides (sizes `r`, `s`) have
/// uniform but different degrees. With `m = r + s`, side vertex `j` of `A`
/// and `l` of `B` use `m(f(v)-1)+j` and `m(f(v)-1)+r+l` (mirrored for
/// negative `v`). Uses at most twice the colors of `f`.
pub fn label_lexi_biregular(
    g: &Graph,
    h: &Graph,
    f: &Labeling,
    sigma: &SignColoring,
) -> Result<ConstructionResult> {
    let (a, b) = sides(g)?;
    let (da, db) = match (uniform_degree(g, &a), uniform_degree(g, &b)) {
        (Some(da), Some(db)) => (da, db),
        _ => {
            return Err(LdaError::Precondition(
                "each side of G must have a uniform degree".into(),
            ))
        }
    };
    if da == db {
        return Err(LdaError::Precondition(
            "sides of G share a degree; use the regular bipartite construction".into(),
        ));
    }
    let colors = inner_factor(h, f, sigma)?;
    let (n, m) = (h.order(), g.order());
    let mut labels = vec![0; m * n];
    let order = a.iter().chain(b.iter());
    for (j, &x) in order.enumerate() {
        for v in h.vertices() {
            labels[x * n + v] = spread(m, f.get(v), sigma.is_positive(v), j + 1);
        }
    }
    finish(lexicographic_product(g, h)?, labels, 2 * colors)
}

/// Labels `(G + K_1)[H]` for a `k`-regular bipartite `G` with sides of size
/// `s`. The apex copy of `H` takes `f` itself, side `A` is shifted by `n` and
/// side `B` by `(s+1)n`. Uses at most three times the colors of `f`.
///
/// The apex copy weighs `s(2n²s + 2n² + n) + w_f(v)`, which needs the apex
/// copy of `v` to carry `f(v)`.
pub fn label_lexi_join_k1(
    g: &Graph,
    h: &Graph,
    f: &Labeling,
    sigma: &SignColoring,
) -> Result<ConstructionResult> {
    match g.regular_degree() {
        Some(k) if k >= 1 => {}
        _ => {
            return Err(LdaError::Precondition(
                "G must be regular of positive degree".into(),
            ))
        }
    }
    let (a, b) = sides(g)?;
    let colors = inner_factor(h, f, sigma)?;
    let (n, s, m) = (h.order(), a.len(), g.order());
    let mut labels = vec![0; (m + 1) * n];
    for v in h.vertices() {
        labels[m * n + v] = f.get(v);
    }
    for (off, side) in [(n, &a), ((s + 1) * n, &b)] {
        for (j, &x) in side.iter().enumerate() {
            for v in h.vertices() {
                labels[x * n + v] = off + spread(s, f.get(v), sigma.is_positive(v), j + 1);
            }
        }
    }
    finish(lexicographic_product(&join_k1(g), h)?, labels, 3 * colors)
}

/// Labels `B_{c,d}[K_{n_1,...,n_k}]` with at most `3k` colors; every part
/// size must be even.
///
/// Bistar ids follow [`FamilySpec::Bistar`] and the multipartite factor uses
/// consecutive blocks in the given part order. When `c = d` the two hub
/// copies start out weight-equal, so the `v`-hub labels are redistributed
/// among the `v`-hub copies until every `v` part sum differs from the other
/// `v` part sums and from every `u` part sum: first by rotating the first
/// label of each part to the next part, then by single transpositions across
/// parts. This needs `k >= 2`.
pub fn label_lexi_bistar(c: usize, d: usize, parts: &[usize]) -> Result<ConstructionResult> {
    if c == 0 || d == 0 {
        return Err(LdaError::InvalidSpec("bistar needs c, d >= 1".into()));
    }
    if parts.is_empty() || parts.iter().any(|&p| p == 0 || p % 2 == 1) {
        return Err(LdaError::Precondition(format!(
            "part sizes must be positive and even, got {parts:?}"
        )));
    }
    let k = parts.len();
    if c == d && k == 1 {
        return Err(LdaError::UnsupportedCase(
            "c = d with a single part leaves the two hub copies weight-equal".into(),
        ));
    }
    let g = generate(&FamilySpec::Bistar(c, d))?;
    let h = generate(&FamilySpec::CompleteMultipartite(parts.to_vec()))?;
    let a: usize = parts.iter().sum();
    let cd = c + d;
    let starts: Vec<usize> = parts
        .iter()
        .scan(0, |acc, &p| {
            let s = *acc;
            *acc += p;
            Some(s)
        })
        .collect();

    let hub_u = |i: usize, j: usize| 2 * starts[i] + if j % 2 == 1 { 2 * j - 1 } else { 2 * j };
    let hub_v = |i: usize, j: usize| 2 * starts[i] + if j % 2 == 1 { 2 * j } else { 2 * j - 1 };
    let leaf_u = |i: usize, j: usize, l: usize| {
        cd * starts[i]
            + 2 * a
            + if j % 2 == 1 {
                (j - 1) * cd + l
            } else {
                j * cd + 1 - l
            }
    };
    let leaf_v = |i: usize, j: usize, l: usize| {
        cd * starts[i]
            + 2 * a
            + if j % 2 == 1 {
                j * c + (j - 1) * d + l
            } else {
                (j - 1) * c + j * d + 1 - l
            }
    };

    let mut labels = vec![0; g.order() * a];
    for (i, &ni) in parts.iter().enumerate() {
        for j in 1..=ni {
            let hv = starts[i] + j - 1;
            labels[hv] = hub_u(i, j);
            labels[a + hv] = hub_v(i, j);
            for l in 1..=c {
                labels[(1 + l) * a + hv] = leaf_u(i, j, l);
            }
            for l in 1..=d {
                labels[(1 + c + l) * a + hv] = leaf_v(i, j, l);
            }
        }
    }
    let product = lexicographic_product(&g, &h)?;
    if c != d {
        return finish(product, labels, 3 * k);
    }
    let part: Vec<usize> = (0..k)
        .flat_map(|i| std::iter::repeat_n(i, parts[i]))
        .collect();
    let sums = |hub: &[usize]| {
        let mut p = vec![0; k];
        for (hv, &l) in hub.iter().enumerate() {
            p[part[hv]] += l;
        }
        p
    };
    let pu = sums(&labels[..a]);
    let separated = |hub: &[usize]| {
        let pv = sums(hub);
        (0..k).all(|i| !pu.contains(&pv[i]) && !pv[..i].contains(&pv[i]))
    };
    let mut rotated = labels[a..2 * a].to_vec();
    for i in 0..k {
        rotated[starts[i]] = hub_v((i + 1) % k, 1);
    }
    let mut pool = labels[a..2 * a].to_vec();
    pool.sort_unstable();
    let mut found = Vec::new();
    split_parts(
        &pool,
        parts,
        &pu,
        &mut vec![false; a],
        &mut Vec::new(),
        &mut Vec::new(),
        &mut found,
    );
    let searched = found.into_iter().map(|groups| {
        let mut hub = vec![0; a];
        for (i, g) in groups.iter().enumerate() {
            hub[starts[i]..starts[i] + parts[i]].copy_from_slice(g);
        }
        hub
    });
    let mut last = None;
    for hub in std::iter::once(rotated)
        .filter(|h| separated(h))
        .chain(searched)
    {
        let mut candidate = labels.clone();
        candidate[a..2 * a].copy_from_slice(&hub);
        match finish(product.clone(), candidate, 3 * k) {
            Err(e @ LdaError::Verification(_)) => last = Some(e),
            r => return r,
        }
    }
    Err(last.unwrap_or_else(|| {
        LdaError::Verification("no redistribution of the v-hub labels separates the hubs".into())
    }))
}

const SPLIT_LIMIT: usize = 32;

/// Splits `pool` into groups of the given sizes whose sums avoid `forbidden`
/// and each other; collects up to `SPLIT_LIMIT` splits.
fn split_parts(
    pool: &[usize],
    sizes: &[usize],
    forbidden: &[usize],
    used: &mut Vec<bool>,
    current: &mut Vec<usize>,
    done: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if out.len() >= SPLIT_LIMIT {
        return;
    }
    let part = done.len();
    if part == sizes.len() {
        out.push(done.clone());
        return;
    }
    if current.len() == sizes[part] {
        let sum: usize = current.iter().sum();
        if forbidden.contains(&sum) || done.iter().any(|g| g.iter().sum::<usize>() == sum) {
            return;
        }
        done.push(std::mem::take(current));
        split_parts(pool, sizes, forbidden, used, current, done, out);
        *current = done.pop().expect("pushed above");
        return;
    }
    // within a group take labels in increasing pool order
    let from = current.last().map_or(0, |&l| {
        pool.iter().position(|&p| p == l).expect("label in pool") + 1
    });
    for x in from..pool.len() {
        if used[x] {
            continue;
        }
        used[x] = true;
        current.push(pool[x]);
        split_parts(pool, sizes, forbidden, used, current, done, out);
        current.pop();
        used[x] = false;
        if out.len() >= SPLIT_LIMIT {
            return;
        }
    }
}
