//! Stirling numbers of the second kind.

use crate::error::{Error, Result};

/// Largest n for which the S(n, k) table is computed exactly in u128.
pub const STIRLING2_MAX_N: usize = 30;

/// Stirling number of the second kind S(n, k): the number of partitions of an
/// n-element set into k non-empty blocks.
///
/// Computed by the recurrence S(n, k) = k·S(n-1, k) + S(n-1, k-1) in exact
/// integer arithmetic. Requires 0 <= k <= n <= 30.
pub fn stirling2(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Err(Error::Domain(format!(
            "stirling2 requires k <= n, got n={n}, k={k}"
        )));
    }
    if n > STIRLING2_MAX_N {
        return Err(Error::OverflowGuard(format!(
            "stirling2 table is bounded at n <= {STIRLING2_MAX_N}, got n={n}"
        )));
    }
    // Row-by-row recurrence; row m holds S(m, 0..=m).
    let mut row: Vec<u128> = vec![1]; // S(0, 0) = 1
    for m in 1..=n {
        let mut next = vec![0u128; m + 1];
        next[0] = 0; // S(m, 0) = 0 for m >= 1
        for j in 1..m {
            next[j] = (j as u128) * row[j] + row[j - 1];
        }
        next[m] = 1; // S(m, m) = 1
        row = next;
    }
    Ok(row[k])
}
