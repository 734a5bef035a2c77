//! Criticality predicates for arbitrary Roman domination number.
//!
//! Each notion has a direct implementation that recomputes `gamma_R` on
//! modified graphs, and a second one that reads the answer off the list of
//! minimum-weight Roman partitions. The two are meant to agree; the
//! harness checks that they do.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::roman::{gamma, minimal_two_sets};

/// Evidence that a graph fails a criticality predicate. Vertices and edges
/// carry the indices of the queried graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// Deleting this vertex does not lower `gamma_R` by exactly one.
    Vertex(usize),
    /// Adding this non-edge does not lower `gamma_R` by one.
    NonEdge(usize, usize),
    /// Deleting this edge leaves the graph v-critical.
    Edge(usize, usize),
}

pub fn is_nonelementary(g: &Graph) -> bool {
    gamma(g) < g.order()
}

pub fn nonelementary_by_components(g: &Graph) -> bool {
    g.connected_components().iter().any(|c| c.len() >= 3)
}

/// Smallest vertex `v` with `gamma_R(g - v) != gamma_R(g) - 1`.
pub fn v_critical_witness(g: &Graph) -> Option<usize> {
    let target = gamma(g).checked_sub(1);
    (0..g.order()).find(|&v| Some(gamma(&g.delete_vertex_unchecked(v))) != target)
}

/// Every vertex deletion lowers `gamma_R` by exactly one. Vacuously true on
/// the order-0 graph.
pub fn is_v_critical(g: &Graph) -> bool {
    v_critical_witness(g).is_none()
}

/// Union of `V1` over the minimum Roman partitions covers every vertex.
pub fn v_critical_by_partitions(g: &Graph) -> Result<bool> {
    Ok(partition_ones_union(g, &minimal_two_sets(g)?) == g.vertices())
}

fn partition_ones_union(g: &Graph, twos: &[VertexSet]) -> VertexSet {
    twos.iter()
        .fold(VertexSet::EMPTY, |acc, &s| acc | (g.vertices() - g.closed_of_set(s)))
}

/// Smallest non-adjacent pair whose addition fails to lower `gamma_R` by one.
pub fn saturation_witness(g: &Graph) -> Option<(usize, usize)> {
    let target = gamma(g).checked_sub(1);
    g.non_edges()
        .find(|&(u, v)| Some(gamma(&g.add_edge_unchecked(u, v))) != target)
}

pub fn is_roman_saturated(g: &Graph) -> bool {
    saturation_witness(g).is_none()
}

/// Every non-adjacent pair is split between `V1` and `V2` by some minimum
/// partition.
pub fn saturated_by_partitions(g: &Graph) -> Result<bool> {
    let twos = minimal_two_sets(g)?;
    let parts: Vec<(VertexSet, VertexSet)> = twos
        .iter()
        .map(|&s| (g.vertices() - g.closed_of_set(s), s))
        .collect();
    Ok(g.non_edges().all(|(v, w)| {
        parts.iter().any(|&(ones, twos)| {
            (ones.contains(v) && twos.contains(w)) || (ones.contains(w) && twos.contains(v))
        })
    }))
}

fn require_v_critical(g: &Graph) -> Result<()> {
    if is_v_critical(g) {
        Ok(())
    } else {
        Err(Error::NotVCritical)
    }
}

/// Smallest edge whose deletion changes `gamma_R`, for a v-critical graph.
pub fn edge_removal_witness(g: &Graph) -> Result<Option<(usize, usize)>> {
    require_v_critical(g)?;
    let gm = gamma(g);
    Ok(g.edges()
        .find(|&(u, v)| gamma(&g.delete_edge_unchecked(u, v)) != gm))
}

/// Deleting any single edge of a v-critical graph keeps `gamma_R`.
pub fn edge_removal_preserves_gamma(g: &Graph) -> Result<bool> {
    Ok(edge_removal_witness(g)?.is_none())
}

/// Why `g` is not e-critical: either a vertex witnessing that `g` is not
/// v-critical, or the smallest edge whose deletion leaves a v-critical graph.
pub fn e_critical_witness(g: &Graph) -> Option<Witness> {
    if let Some(v) = v_critical_witness(g) {
        return Some(Witness::Vertex(v));
    }
    g.edges()
        .find(|&(u, v)| is_v_critical(&g.delete_edge_unchecked(u, v)))
        .map(|(u, v)| Witness::Edge(u, v))
}

/// v-critical, and no single edge deletion keeps it v-critical.
pub fn is_e_critical(g: &Graph) -> bool {
    e_critical_witness(g).is_none()
}

/// For every edge `e` there is a vertex `v_e` such that each minimum
/// partition with `v_e` in `V1` routes the only 2-neighbor of some
/// 0-labeled endpoint of `e` through `e` itself.
pub fn e_critical_condition(g: &Graph) -> Result<bool> {
    require_v_critical(g)?;
    let twos = minimal_two_sets(g)?;
    let parts: Vec<(VertexSet, VertexSet, VertexSet)> = twos
        .iter()
        .map(|&s| {
            let covered = g.closed_of_set(s);
            let zeros = covered - s;
            (zeros, g.vertices() - covered, s)
        })
        .collect();
    // Does partition (zeros, _, twos) fail to be Roman once e = {a, b} is gone?
    let breaks = |a: usize, b: usize, zeros: VertexSet, twos: VertexSet| {
        let one_way = |v: usize, w: usize| {
            zeros.contains(v) && g.closed(v) & twos == VertexSet::singleton(w)
        };
        one_way(a, b) || one_way(b, a)
    };
    Ok(g.edges().all(|(a, b)| {
        (0..g.order()).any(|ve| {
            parts
                .iter()
                .filter(|(_, ones, _)| ones.contains(ve))
                .all(|&(zeros, _, twos)| breaks(a, b, zeros, twos))
        })
    }))
}
