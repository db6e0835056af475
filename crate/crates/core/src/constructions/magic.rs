use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{LdaError, Result};

const DEFAULT_SEED: u64 = 0x6d61_6769_6372_6563;
const RESTARTS: u64 = 64;
const STEPS_PER_RESTART: u64 = 4_000_000;

/// An arrangement of `1..=rows*cols` with equal row sums and equal column
/// sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicRectangle {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries.
    pub entries: Vec<Vec<usize>>,
}

impl MagicRectangle {
    pub fn row_sum(&self) -> usize {
        self.cols * (self.rows * self.cols + 1) / 2
    }

    pub fn col_sum(&self) -> usize {
        self.rows * (self.rows * self.cols + 1) / 2
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    /// Checks the shape, bijectivity and both sum conditions.
    pub fn is_valid(&self) -> bool {
        let (m, n) = (self.rows, self.cols);
        if self.entries.len() != m || self.entries.iter().any(|r| r.len() != n) {
            return false;
        }
        let mut seen = vec![false; m * n + 1];
        for &e in self.entries.iter().flatten() {
            if e == 0 || e > m * n || std::mem::replace(&mut seen[e], true) {
                return false;
            }
        }
        self.entries
            .iter()
            .all(|r| r.iter().sum::<usize>() == self.row_sum())
            && (0..n).all(|j| (0..m).map(|i| self.entries[i][j]).sum::<usize>() == self.col_sum())
    }
}

/// A `rows x cols` magic rectangle with the default seed.
pub fn magic_rectangle(rows: usize, cols: usize) -> Result<MagicRectangle> {
    magic_rectangle_seeded(rows, cols, DEFAULT_SEED)
}

/// A `rows x cols` magic rectangle.
///
/// These exist exactly when both sides have the same parity, neither side is
/// 1 unless both are, and the shape is not `2 x 2`. Odd squares use
/// `n((i+j) mod n) + ((i+2j) mod n) + 1`; sides both divisible by 4 use the
/// row-major fill with a 4-periodic set of cells complemented. Other shapes
/// are found by simulated annealing from `seed`. Every result is checked.
pub fn magic_rectangle_seeded(rows: usize, cols: usize, seed: u64) -> Result<MagicRectangle> {
    if rows == 0 || cols == 0 {
        return Err(LdaError::NoRectangle("dimensions must be positive".into()));
    }
    if rows % 2 != cols % 2 {
        return Err(LdaError::NoRectangle(format!(
            "{rows} x {cols}: sides of opposite parity"
        )));
    }
    if (rows == 1) != (cols == 1) {
        return Err(LdaError::NoRectangle(format!(
            "{rows} x {cols}: a side of length 1"
        )));
    }
    if rows == 2 && cols == 2 {
        return Err(LdaError::NoRectangle(
            "2 x 2 has no magic arrangement".into(),
        ));
    }
    let entries = if rows == cols && rows % 2 == 1 {
        odd_square(rows)
    } else if rows.is_multiple_of(4) && cols.is_multiple_of(4) {
        quad_even(rows, cols)
    } else {
        anneal(rows, cols, seed)?
    };
    let rect = MagicRectangle {
        rows,
        cols,
        entries,
    };
    if !rect.is_valid() {
        return Err(LdaError::Verification(format!(
            "{rows} x {cols} rectangle failed its check"
        )));
    }
    Ok(rect)
}

fn odd_square(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| n * ((i + j) % n) + (i + 2 * j) % n + 1)
                .collect()
        })
        .collect()
}

fn quad_even(m: usize, n: usize) -> Vec<Vec<usize>> {
    let c = m * n + 1;
    let outer = |k: usize| k.is_multiple_of(4) || k % 4 == 3;
    (0..m)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = i * n + j + 1;
                    if outer(i) == outer(j) {
                        c - e
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect()
}

/// Swap-based annealing on the total absolute deviation of row and column
/// sums from their targets.
fn anneal(m: usize, n: usize, seed: u64) -> Result<Vec<Vec<usize>>> {
    let row_t = (n * (m * n + 1) / 2) as i64;
    let col_t = (m * (m * n + 1) / 2) as i64;
    let cells = m * n;
    for restart in 0..RESTARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(restart));
        let mut a: Vec<i64> = (1..=cells as i64).collect();
        for k in (1..cells).rev() {
            a.swap(k, rng.gen_range(0..=k));
        }
        let mut rows = vec![0i64; m];
        let mut cols = vec![0i64; n];
        for (k, &e) in a.iter().enumerate() {
            rows[k / n] += e;
            cols[k % n] += e;
        }
        let mut cost: i64 = rows.iter().map(|s| (s - row_t).abs()).sum::<i64>()
            + cols.iter().map(|s| (s - col_t).abs()).sum::<i64>();
        let mut temp = 2.0f64;
        for step in 0..STEPS_PER_RESTART {
            if cost == 0 {
                let out = a
                    .chunks(n)
                    .map(|r| r.iter().map(|&e| e as usize).collect())
                    .collect();
                return Ok(out);
            }
            if step % 1000 == 999 {
                temp = (temp * 0.99).max(0.05);
            }
            let p = rng.gen_range(0..cells);
            let q = rng.gen_range(0..cells);
            let (pr, pc, qr, qc) = (p / n, p % n, q / n, q % n);
            let d = a[q] - a[p];
            if d == 0 || (pr == qr && pc == qc) {
                continue;
            }
            let mut delta = 0;
            if pr != qr {
                delta += (rows[pr] + d - row_t).abs() - (rows[pr] - row_t).abs();
                delta += (rows[qr] - d - row_t).abs() - (rows[qr] - row_t).abs();
            }
            if pc != qc {
                delta += (cols[pc] + d - col_t).abs() - (cols[pc] - col_t).abs();
                delta += (cols[qc] - d - col_t).abs() - (cols[qc] - col_t).abs();
            }
            if delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp() {
                a.swap(p, q);
                if pr != qr {
                    rows[pr] += d;
                    rows[qr] -= d;
                }
                if pc != qc {
                    cols[pc] += d;
                    cols[qc] -= d;
                }
                cost += delta;
            }
        }
    }
    Err(LdaError::NoRectangle(format!(
        "{m} x {n}: search did not converge"
    )))
}
