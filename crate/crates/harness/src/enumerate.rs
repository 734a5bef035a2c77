//! Labeled graph enumeration: every subset of the `n(n-1)/2` vertex pairs,
//! in ascending bitmask order (bit `i` is the `i`-th pair in graph6 order).

use roman_core::Graph;

use crate::error::HarnessError;

/// Largest order enumerated without `--allow-large`.
pub const DEFAULT_MAX_ORDER: usize = 7;
/// Hard limit: all pairs must fit in one `u64` mask.
pub const ABSOLUTE_MAX_ORDER: usize = 11;

pub fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn graph_count(n: usize) -> u128 {
    1u128 << pair_count(n)
}

pub fn check_order(n: usize, allow_large: bool) -> Result<(), HarnessError> {
    let limit = if allow_large {
        ABSOLUTE_MAX_ORDER
    } else {
        DEFAULT_MAX_ORDER
    };
    if n > limit {
        return Err(HarnessError::TooLarge { n, limit });
    }
    Ok(())
}

/// Calls `consumer` once per labeled graph on `n` vertices and returns how
/// many it produced.
pub fn enumerate_labeled_graphs(
    n: usize,
    allow_large: bool,
    mut consumer: impl FnMut(&Graph),
) -> Result<u64, HarnessError> {
    check_order(n, allow_large)?;
    let total = graph_count(n) as u64;
    let mut count = 0u64;
    for mask in 0..total {
        consumer(&Graph::from_pair_mask(n, mask)?);
        count += 1;
    }
    Ok(count)
}
