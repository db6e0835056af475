use super::{finish, ConstructionResult};
use crate::error::{LdaError, Result};
use crate::graph::{generate, FamilySpec};

/// Labels the book of `t` four-cycles sharing the vertex `u`.
///
/// For `t >= 2`: `f(u) = 3t-2`, `f(z_i) = 3i-2` for `i < t`, `f(z_t) = 3t+1`,
/// `f(x_1) = 3t`, `f(y_1) = 3t-1`. The unused labels in `2..=3t-3` are paired
/// smallest with largest, every pair summing to `3t-1`; pair `i` goes to
/// `(x_{i+1}, y_{i+1})` with the smaller label on `x`. The result has exactly
/// `t+1` colors.
///
/// For `t = 1` the formula makes `u` and `x_1` collide, so the single cycle
/// `u x_1 z_1 y_1` is labeled `1, 3, 2, 4` instead (two colors).
pub fn label_book_c4(t: usize) -> Result<ConstructionResult> {
    if t == 0 {
        return Err(LdaError::InvalidSpec("book needs t >= 1".into()));
    }
    let g = generate(&FamilySpec::BookC4(t))?;
    let (x, y, z) = (|i: usize| i, |i: usize| t + i, |i: usize| 2 * t + i);
    let mut f = vec![0; 3 * t + 1];
    if t == 1 {
        f[0] = 1;
        f[x(1)] = 3;
        f[z(1)] = 2;
        f[y(1)] = 4;
        return finish(g, f, 2);
    }
    f[0] = 3 * t - 2;
    for i in 1..t {
        f[z(i)] = 3 * (i - 1) + 1;
    }
    f[z(t)] = 3 * t + 1;
    f[x(1)] = 3 * t;
    f[y(1)] = 3 * t - 1;
    let rest: Vec<usize> = (2..=3 * t - 3).filter(|k| k % 3 != 1).collect();
    debug_assert_eq!(rest.len(), 2 * (t - 1));
    for i in 0..t - 1 {
        let (lo, hi) = (rest[i], rest[rest.len() - 1 - i]);
        debug_assert_eq!(lo + hi, 3 * t - 1);
        f[x(i + 2)] = lo;
        f[y(i + 2)] = hi;
    }
    finish(g, f, t + 1)
}

/// The `t+1` weights produced by [`label_book_c4`] for `t >= 2`, sorted:
/// `3t-1`, `3(t+i)-4` for `2 <= i <= t-1`, `6t-1` and `t(3t+2)`.
pub fn book_weight_values(t: usize) -> Vec<u64> {
    assert!(t >= 2);
    let t = t as u64;
    let mut v = vec![3 * t - 1, 6 * t - 1, t * (3 * t + 2)];
    v.extend((2..t).map(|i| 3 * (t + i) - 4));
    v.sort_unstable();
    v.dedup();
    v
}
