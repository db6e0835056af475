use serde::{Deserialize, Serialize};

use super::magic::magic_rectangle;
use super::{base_colors, finish, require_nbc, spread, ConstructionResult};
use crate::coloring::SignColoring;
use crate::error::{LdaError, Result};
use crate::graph::{direct_product, generate, FamilySpec, Graph};
use crate::labeling::Labeling;

fn regular(g: &Graph, what: &str) -> Result<usize> {
    match g.regular_degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(LdaError::Precondition(format!(
            "{what} must be regular of positive degree"
        ))),
    }
}

/// Labels `G × H` where `G` is `2t`-regular with LDA labeling `f` and NBC
/// `sigma`, and `H` is `r`-regular of order `m`. Vertex `(x, y)` gets
/// `m(f(x)-1)+y+1` or `m*f(x)-y` by the sign of `x`, and weighs
/// `r[m(w_f(x)-t)+t]`, so the product uses at most as many colors as `f`.
pub fn label_direct_nbc(
    g: &Graph,
    f: &Labeling,
    sigma: &SignColoring,
    h: &Graph,
) -> Result<ConstructionResult> {
    let d = regular(g, "G")?;
    if d % 2 != 0 {
        return Err(LdaError::Precondition(format!("G has odd degree {d}")));
    }
    regular(h, "H")?;
    require_nbc(g, sigma)?;
    let colors = base_colors(g, f)?;
    let m = h.order();
    let mut labels = vec![0; g.order() * m];
    for x in g.vertices() {
        for y in 0..m {
            labels[x * m + y] = spread(m, f.get(x), sigma.is_positive(x), y + 1);
        }
    }
    finish(direct_product(g, h)?, labels, colors)
}

/// Which labeling scheme applies to `G × K_{n1,n2}` for `G` of order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectCase {
    /// `n1`, `n2` both even.
    BothEven,
    /// `n1`, `n2` both odd.
    BothOdd,
    /// Opposite parities, `n` odd: the odd side is filled from a magic
    /// rectangle.
    MixedOddOrder,
    /// Opposite parities, `n` even: two colors are not always reachable
    /// (`K_2 × K_{2,3}` is `2K_{2,3}`, which needs 3).
    MixedEvenOrder,
}

pub fn direct_bipartite_case(n: usize, n1: usize, n2: usize) -> DirectCase {
    match (n1 % 2, n2 % 2, n % 2) {
        (0, 0, _) => DirectCase::BothEven,
        (1, 1, _) => DirectCase::BothOdd,
        (_, _, 1) => DirectCase::MixedOddOrder,
        _ => DirectCase::MixedEvenOrder,
    }
}

fn check_params(n: usize, n1: usize, n2: usize) -> Result<DirectCase> {
    if n1 == 0 || n2 == 0 || n == 0 {
        return Err(LdaError::InvalidSpec("orders must be positive".into()));
    }
    let case = direct_bipartite_case(n, n1, n2);
    match case {
        DirectCase::MixedEvenOrder => Err(LdaError::UnsupportedCase(format!(
            "n = {n} even with parts {n1}, {n2} of opposite parity; K_2 × K_{{2,3}} already needs 3 colors"
        ))),
        DirectCase::BothOdd if n1 < 3 || n2 < 3 => Err(LdaError::UnsupportedParameter(format!(
            "odd parts need size at least 3, got {n1}, {n2}"
        ))),
        DirectCase::MixedOddOrder if (if n1 % 2 == 1 { n1 } else { n2 }) < 3 => Err(
            LdaError::UnsupportedParameter(format!("the odd part needs size at least 3, got {n1}, {n2}")),
        ),
        _ => Ok(case),
    }
}

/// The two weights `(w_Y, w_Z)` of `G × K_{n1,n2}` for an `r`-regular `G` of
/// order `n`, where `Y` is the side of size `n1`.
pub fn direct_bipartite_weights(r: usize, n: usize, n1: usize, n2: usize) -> Result<(u64, u64)> {
    let case = check_params(n, n1, n2)?;
    let (r, n, a, b) = (r as u64, n as u64, n1 as u64, n2 as u64);
    // the side labeled by alternating blocks above an offset `off` sums, over
    // one G-neighbourhood, to `r * (k(nk+1)/2 + off*k)` for a side of size k
    let blocks = |k: u64, off: u64| r * (k * (n * k + 1) / 2 + off * k);
    Ok(match case {
        DirectCase::BothEven => (blocks(b, n * a), blocks(a, 0)),
        DirectCase::BothOdd => (
            r * (2 * n * a * (b - 1) + b * (n * b + 1) + 5 * n - 1) / 2,
            r * (n * a * (a + 2) - 5 * n + a + 1) / 2,
        ),
        DirectCase::MixedOddOrder if a % 2 == 1 => (blocks(b, n * a), blocks(a, 0)),
        DirectCase::MixedOddOrder => (blocks(b, 0), blocks(a, n * b)),
        DirectCase::MixedEvenOrder => unreachable!(),
    })
}

/// Alternating blocks: part vertex `j` (1-based) over `x_i` gets
/// `(j-1)n+i` for odd `j` and `jn+1-i` for even `j`, plus `off`.
fn block_label(n: usize, i: usize, j: usize, off: usize) -> usize {
    off + if j % 2 == 1 {
        (j - 1) * n + i
    } else {
        j * n + 1 - i
    }
}

fn odd_y(n: usize, i: usize, j: usize) -> usize {
    match j {
        1 | 2 => n * (j - 1) + i,
        3 => 4 * n - 2 * (i - 1),
        _ if j % 2 == 1 => n * (j + 1) - (i - 1),
        _ => n * j + i,
    }
}

fn odd_z(n: usize, n1: usize, i: usize, j: usize) -> usize {
    match j {
        1 => 4 * n - (2 * i - 1),
        3 => n * (n1 + 2) + i,
        _ if j % 2 == 1 => n * (n1 + j) - (i - 1),
        _ => n * (n1 - 1 + j) + i,
    }
}

/// Labels `G × K_{n1,n2}` with two colors for an `r`-regular `G` of order `n`.
///
/// `K_{n1,n2}` has the `n1` side on ids `0..n1`. Both-even and both-odd parts
/// use explicit block formulas; opposite parities with `n` odd take the odd
/// side from an `n × n_odd` magic rectangle. Opposite parities with `n` even
/// are rejected.
pub fn label_direct_complete_bipartite(
    g: &Graph,
    n1: usize,
    n2: usize,
) -> Result<ConstructionResult> {
    regular(g, "G")?;
    let n = g.order();
    let case = check_params(n, n1, n2)?;
    let k = generate(&FamilySpec::CompleteMultipartite(vec![n1, n2]))?;
    let s = n1 + n2;
    let mut labels = vec![0; n * s];
    let y_id = |i: usize, j: usize| (i - 1) * s + j - 1;
    let z_id = |i: usize, j: usize| (i - 1) * s + n1 + j - 1;
    match case {
        DirectCase::BothEven => {
            for i in 1..=n {
                for j in 1..=n1 {
                    labels[y_id(i, j)] = block_label(n, i, j, 0);
                }
                for j in 1..=n2 {
                    labels[z_id(i, j)] = block_label(n, i, j, n * n1);
                }
            }
        }
        DirectCase::BothOdd => {
            for i in 1..=n {
                for j in 1..=n1 {
                    labels[y_id(i, j)] = odd_y(n, i, j);
                }
                for j in 1..=n2 {
                    labels[z_id(i, j)] = odd_z(n, n1, i, j);
                }
            }
        }
        DirectCase::MixedOddOrder => {
            let y_odd = n1 % 2 == 1;
            let (n_odd, n_even) = if y_odd { (n1, n2) } else { (n2, n1) };
            let rect = magic_rectangle(n, n_odd)?;
            for i in 1..=n {
                for j in 1..=n_odd {
                    let id = if y_odd { y_id(i, j) } else { z_id(i, j) };
                    labels[id] = rect.get(i - 1, j - 1);
                }
                for j in 1..=n_even {
                    let id = if y_odd { z_id(i, j) } else { y_id(i, j) };
                    labels[id] = block_label(n, i, j, n * n_odd);
                }
            }
        }
        DirectCase::MixedEvenOrder => unreachable!(),
    }
    finish(direct_product(g, &k)?, labels, 2)
}
