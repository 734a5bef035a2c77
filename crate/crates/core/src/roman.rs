//! Roman domination functions and the exact Roman domination number.
//!
//! A labeling `V -> {0,1,2}` is Roman when every 0-labeled vertex has a
//! 2-labeled neighbor. Once the 2-labeled set `S` is fixed, the cheapest
//! completion labels exactly the vertices outside `N[S]` with 1, so
//!
//! ```text
//! gamma_R(G) = min over S of 2|S| + |V \ N[S]|
//! ```
//!
//! and minimum-weight labelings are in bijection with the sets `S` that
//! attain it. The solver sweeps `S` by increasing size and stops once `2|S|`
//! alone reaches the best weight found.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Order limit of the `3^n` labeling oracle.
pub const MAX_ORACLE_ORDER: usize = 12;
/// Order limit of the minimum-partition enumeration.
pub const MAX_PARTITION_ORDER: usize = 24;

/// A labeling `V -> {0,1,2}`, stored as the ordered partition
/// `(V0; V1; V2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RomanAssignment {
    n: usize,
    ones: VertexSet,
    twos: VertexSet,
}

impl RomanAssignment {
    pub fn from_labels(labels: &[u8]) -> Result<Self> {
        if labels.len() > crate::graph::MAX_ORDER {
            return Err(Error::TooLarge {
                what: "assignment",
                order: labels.len(),
                limit: crate::graph::MAX_ORDER,
            });
        }
        let mut ones = VertexSet::EMPTY;
        let mut twos = VertexSet::EMPTY;
        for (v, &l) in labels.iter().enumerate() {
            match l {
                0 => {}
                1 => ones.insert(v),
                2 => twos.insert(v),
                _ => return Err(Error::InvalidLabel(l)),
            }
        }
        Ok(RomanAssignment {
            n: labels.len(),
            ones,
            twos,
        })
    }

    /// `V1 = ones`, `V2 = twos`, `V0` the rest of `0..n`.
    pub fn from_partition(n: usize, ones: VertexSet, twos: VertexSet) -> Result<Self> {
        let full = VertexSet::full(n);
        if !(ones | twos).is_subset(full) || !(ones & twos).is_empty() {
            return Err(Error::PreconditionViolated(
                "V1 and V2 must be disjoint subsets of the vertex set".into(),
            ));
        }
        Ok(RomanAssignment { n, ones, twos })
    }

    /// The cheapest Roman completion of a 2-labeled set `twos` on `g`.
    pub fn completion(g: &Graph, twos: VertexSet) -> Self {
        RomanAssignment {
            n: g.order(),
            ones: g.vertices() - g.closed_of_set(twos),
            twos,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn label(&self, v: usize) -> u8 {
        if self.twos.contains(v) {
            2
        } else if self.ones.contains(v) {
            1
        } else {
            0
        }
    }

    pub fn labels(&self) -> Vec<u8> {
        (0..self.n).map(|v| self.label(v)).collect()
    }

    pub fn v0(&self) -> VertexSet {
        VertexSet::full(self.n) - self.ones - self.twos
    }

    pub fn v1(&self) -> VertexSet {
        self.ones
    }

    pub fn v2(&self) -> VertexSet {
        self.twos
    }

    /// `|V1| + 2|V2|`.
    pub fn weight(&self) -> usize {
        self.ones.len() + 2 * self.twos.len()
    }

    /// Whether this labeling is Roman on `g` without checking the length.
    pub(crate) fn is_roman_on(&self, g: &Graph) -> bool {
        let dominated = self
            .twos
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v));
        self.v0().is_subset(dominated)
    }
}

impl fmt::Debug for RomanAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.v0(), self.v1(), self.v2())
    }
}

impl fmt::Display for RomanAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V0={} V1={} V2={}", self.v0(), self.v1(), self.v2())
    }
}

pub fn weight(a: &RomanAssignment) -> usize {
    a.weight()
}

pub fn is_roman(g: &Graph, a: &RomanAssignment) -> Result<bool> {
    if a.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            got: a.len(),
        });
    }
    Ok(a.is_roman_on(g))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub gamma: usize,
    pub witness: RomanAssignment,
}

/// Weight of the cheapest Roman labeling whose 2-labeled set is `s`.
#[inline]
fn cost(g: &Graph, s: VertexSet) -> usize {
    2 * s.len() + (g.vertices() - g.closed_of_set(s)).len()
}

/// Next bit pattern with the same popcount (Gosper's hack), or `None` once
/// the pattern would leave the low `n` bits.
#[inline]
fn next_same_size(x: u64, n: usize) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let (r, overflow) = x.overflowing_add(c);
    if overflow {
        return None;
    }
    let next = (((r ^ x) >> 2) / c) | r;
    (n == 64 || next >> n == 0).then_some(next)
}

/// Calls `f` on every `k`-subset of `0..n` in ascending bitmask order until
/// it returns `false`.
pub(crate) fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(VertexSet) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    let mut x = VertexSet::full(k).bits();
    loop {
        if !f(VertexSet::from_bits(x)) {
            return;
        }
        match next_same_size(x, n) {
            Some(y) => x = y,
            None => return,
        }
    }
}

/// Exact Roman domination number with a deterministic witness: among the
/// optimal 2-labeled sets, the smallest, then the one with the smallest
/// bitmask.
pub fn roman_number(g: &Graph) -> GammaResult {
    let n = g.order();
    let mut best = n;
    let mut best_set = VertexSet::EMPTY;
    let mut k = 1;
    while 2 * k < best && k <= n {
        for_each_subset_of_size(n, k, |s| {
            let c = cost(g, s);
            if c < best {
                best = c;
                best_set = s;
            }
            true
        });
        k += 1;
    }
    GammaResult {
        gamma: best,
        witness: RomanAssignment::completion(g, best_set),
    }
}

/// `gamma_R(g)` without building a witness.
pub fn gamma(g: &Graph) -> usize {
    let n = g.order();
    let mut best = n;
    let mut k = 1;
    while 2 * k < best && k <= n {
        for_each_subset_of_size(n, k, |s| {
            best = best.min(cost(g, s));
            true
        });
        k += 1;
    }
    best
}

/// Minimum weight over all `3^n` labelings that pass [`is_roman`].
pub fn roman_number_oracle(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_ORACLE_ORDER {
        return Err(Error::TooLarge {
            what: "labeling oracle",
            order: n,
            limit: MAX_ORACLE_ORDER,
        });
    }
    let mut labels = vec![0u8; n];
    let mut best = usize::MAX;
    loop {
        let a = RomanAssignment::from_labels(&labels)?;
        if a.weight() < best && a.is_roman_on(g) {
            best = a.weight();
        }
        // base-3 increment
        let mut i = 0;
        while i < n && labels[i] == 2 {
            labels[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        labels[i] += 1;
    }
    Ok(best)
}

/// The 2-labeled sets of all minimum-weight Roman labelings, in ascending
/// bitmask order.
pub fn minimal_two_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > MAX_PARTITION_ORDER {
        return Err(Error::TooLarge {
            what: "minimum partition enumeration",
            order: n,
            limit: MAX_PARTITION_ORDER,
        });
    }
    let target = gamma(g);
    let mut out = Vec::new();
    for k in 0..=(target / 2).min(n) {
        for_each_subset_of_size(n, k, |s| {
            if cost(g, s) == target {
                out.push(s);
            }
            true
        });
    }
    out.sort_unstable();
    Ok(out)
}

/// Every minimum-weight Roman labeling of `g`, ordered by the bitmask of
/// its 2-labeled set.
pub fn minimal_partitions(g: &Graph) -> Result<Vec<RomanAssignment>> {
    Ok(minimal_two_sets(g)?
        .into_iter()
        .map(|s| RomanAssignment::completion(g, s))
        .collect())
}
