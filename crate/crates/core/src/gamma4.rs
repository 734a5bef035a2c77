//! Graphs with Roman domination number four: degree-based
//! characterizations of the criticality notions, structural bounds, the
//! eight-vertex local conditions and the classification of the graphs that
//! are v-critical, e-critical and Roman saturated at once.
//!
//! Every entry point recomputes `gamma_R` and nonelementarity itself and
//! returns [`Error::PreconditionViolated`] when they do not hold.

use crate::criticality::{is_e_critical, is_roman_saturated, is_v_critical};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::{Graph, VertexSet};
use crate::iso::{is_isomorphic, MAX_ISO_ORDER};
use crate::roman::gamma;

/// Vertices split by how their degree compares with `n - 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeClasses {
    /// degree exactly `n - 3`
    pub high: VertexSet,
    /// degree below `n - 3`
    pub low: VertexSet,
    /// degree above `n - 3`
    pub other: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    IsC5,
    IsDn(usize),
    ElementaryG1,
    ElementaryG2,
    ElementaryG3,
    NotCritical,
    /// A graph meeting every hypothesis of the classification but matching
    /// none of the known shapes.
    CriticalButUnclassified,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::IsDn(n) => write!(f, "IsDn({n})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HighClassBounds {
    /// `2 |high| >= n`
    pub half: bool,
    /// `4 |high| >= 3n`
    pub three_quarters: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutStructure {
    /// Every cut vertex leaves a singleton component behind.
    pub lemma: bool,
    /// `None` unless the graph is also e-critical and saturated. Otherwise
    /// whether it is `C_5`, or has exactly one low vertex, of degree one,
    /// whose neighbor is a cut vertex.
    pub prop: Option<bool>,
}

/// The three literal conditions of the eight-vertex characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Local8 {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl Local8 {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c
    }
}

fn violated(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

/// `gamma_R(g) = 4` and `g` nonelementary.
fn require_nonelementary4(g: &Graph) -> Result<()> {
    let gm = gamma(g);
    if gm != 4 {
        return Err(violated(format!("gamma_R is {gm}, not 4")));
    }
    if g.order() <= 4 {
        return Err(violated("graph is elementary"));
    }
    Ok(())
}

fn require_v_critical4(g: &Graph) -> Result<()> {
    require_nonelementary4(g)?;
    if !is_v_critical(g) {
        return Err(violated("graph is not v-critical"));
    }
    Ok(())
}

pub fn degree_classes(g: &Graph) -> DegreeClasses {
    let n = g.order();
    let mut c = DegreeClasses {
        high: VertexSet::EMPTY,
        low: VertexSet::EMPTY,
        other: VertexSet::EMPTY,
    };
    for v in 0..n {
        let d = g.deg(v);
        if d + 3 == n {
            c.high.insert(v);
        } else if d + 3 < n {
            c.low.insert(v);
        } else {
            c.other.insert(v);
        }
    }
    c
}

/// Every vertex has a non-neighbor of degree `n - 3`.
pub fn vcrit4_by_degrees(g: &Graph) -> Result<bool> {
    require_nonelementary4(g)?;
    let high = degree_classes(g).high;
    Ok((0..g.order()).all(|x| !(high - g.closed(x)).is_empty()))
}

/// Lexicographically smallest `(a, b)` with `a != x != b` and
/// `N[a] = V \ {x, b}`.
pub fn neighborhood_witness(g: &Graph, x: usize) -> Result<Option<(usize, usize)>> {
    require_nonelementary4(g)?;
    if x >= g.order() {
        return Err(Error::IndexOutOfRange {
            vertex: x,
            order: g.order(),
        });
    }
    Ok(witnesses_at(g, x).next())
}

/// All `(a, b)` with `N[a] = V \ {x, b}`, in lexicographic order.
fn witnesses_at(g: &Graph, x: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..g.order()).filter_map(move |a| {
        let missing = g.vertices() - g.closed(a);
        if missing.len() == 2 && missing.contains(x) {
            missing.without(x).min().map(|b| (a, b))
        } else {
            None
        }
    })
}

/// Checks the corollary to the neighborhood lemma on a graph where every
/// vertex has a witness: for each `x` with smallest witness `(a, b)`, some
/// witness of `a` lies in `{x, b}`, and `x` or `b` has degree `n - 3`.
/// Returns `None` when some vertex has no witness.
pub fn carac_corollary(g: &Graph) -> Result<Option<bool>> {
    require_nonelementary4(g)?;
    let n = g.order();
    let mut ok = true;
    for x in 0..n {
        let Some((a, b)) = witnesses_at(g, x).next() else {
            return Ok(None);
        };
        let chase = witnesses_at(g, a).any(|(aa, _)| aa == x || aa == b);
        let degree_form = g.deg(x) + 3 == n || g.deg(b) + 3 == n;
        ok &= chase && degree_form;
    }
    Ok(Some(ok))
}

/// Every two vertices of degree below `n - 3` are adjacent.
pub fn saturated4_by_degrees(g: &Graph) -> Result<bool> {
    require_nonelementary4(g)?;
    let low = degree_classes(g).low;
    Ok(low.iter().all(|v| (low - g.closed(v)).is_empty()))
}

/// Smallest `v_e` such that every degree-`(n-3)` vertex outside `N[v_e]` is
/// an endpoint of the edge `(a, b)`.
pub fn ecrit4_vertex(g: &Graph, a: usize, b: usize) -> Option<usize> {
    let high = degree_classes(g).high;
    let ends = VertexSet::singleton(a).with(b);
    (0..g.order()).find(|&ve| (high - g.closed(ve)).is_subset(ends))
}

pub fn ecrit4_by_degrees(g: &Graph) -> Result<bool> {
    require_v_critical4(g)?;
    Ok(g.edges().all(|(a, b)| ecrit4_vertex(g, a, b).is_some()))
}

/// Size bounds on the degree-`(n-3)` class. Whether each bound is expected to
/// hold depends on hypotheses the caller checks separately.
pub fn high_class_bounds(g: &Graph) -> Result<HighClassBounds> {
    require_nonelementary4(g)?;
    let k = degree_classes(g).high.len();
    let n = g.order();
    Ok(HighClassBounds {
        half: 2 * k >= n,
        three_quarters: 4 * k >= 3 * n,
    })
}

pub fn cut_vertex_structure(g: &Graph) -> Result<CutStructure> {
    require_v_critical4(g)?;
    let cuts = g.cut_vertices();
    let lemma = cuts.iter().all(|v| {
        g.delete_vertex_unchecked(v)
            .connected_components()
            .iter()
            .any(|c| c.len() == 1)
    });
    let prop = (is_e_critical(g) && is_roman_saturated(g)).then(|| {
        if is_c5(g) {
            return true;
        }
        let low = degree_classes(g).low;
        match (low.len(), low.min()) {
            (1, Some(p)) => g.deg(p) == 1 && g.neighbors(p).is_subset(cuts),
            _ => false,
        }
    });
    Ok(CutStructure { lemma, prop })
}

fn is_c5(g: &Graph) -> bool {
    g.order() == 5
        && is_isomorphic(g, &Family::Cycle(5).generate().expect("C5")).expect("order 5")
}

/// Degree profile of `D_n`: even `n >= 6`, one vertex of degree one and the
/// rest of degree `n - 3`. In the complement this forces a path on three
/// vertices centered at the pendant's neighbor plus a perfect matching, so
/// the profile determines `D_n` up to relabeling.
pub fn has_dn_profile(g: &Graph) -> bool {
    let n = g.order();
    if n < 6 || n % 2 == 1 {
        return false;
    }
    let degs = g.degrees();
    degs.iter().filter(|&&d| d == 1).count() == 1
        && degs.iter().filter(|&&d| d + 3 == n).count() == n - 1
}

/// Isomorphic to `D_n`: by backtracking up to order 12, by degree profile
/// above that.
pub fn is_dn(g: &Graph) -> bool {
    let n = g.order();
    if n < 6 || n % 2 == 1 {
        return false;
    }
    if n <= MAX_ISO_ORDER {
        let dn = Family::Dn(n).generate().expect("valid D_n order");
        is_isomorphic(g, &dn).expect("order within limit")
    } else {
        has_dn_profile(g)
    }
}

pub fn classify_critical4(g: &Graph) -> Classification {
    let n = g.order();
    if gamma(g) != 4 || !is_v_critical(g) {
        return Classification::NotCritical;
    }
    if n == 4 {
        let matches = |f: Family| is_isomorphic(g, &f.generate().expect("order 4")).expect("order 4");
        return if matches(Family::Elem1) {
            Classification::ElementaryG1
        } else if matches(Family::Elem2) {
            Classification::ElementaryG2
        } else if matches(Family::Elem3) {
            Classification::ElementaryG3
        } else {
            Classification::CriticalButUnclassified
        };
    }
    if !is_e_critical(g) || !is_roman_saturated(g) {
        return Classification::NotCritical;
    }
    if is_c5(g) {
        Classification::IsC5
    } else if is_dn(g) {
        Classification::IsDn(n)
    } else {
        Classification::CriticalButUnclassified
    }
}

fn require_local8(g: &Graph) -> Result<()> {
    let gm = gamma(g);
    if gm != 4 {
        return Err(violated(format!("gamma_R is {gm}, not 4")));
    }
    if g.order() < 8 {
        return Err(violated(format!("order {} is below 8", g.order())));
    }
    Ok(())
}

/// Calls `f` on each `k`-combination of `pool` (ascending) until it
/// returns `false`; returns `false` iff stopped early.
fn all_combinations(pool: VertexSet, k: usize, f: &mut impl FnMut(VertexSet) -> bool) -> bool {
    fn go(
        items: &[usize],
        k: usize,
        acc: VertexSet,
        f: &mut impl FnMut(VertexSet) -> bool,
    ) -> bool {
        if k == 0 {
            return f(acc);
        }
        if items.len() < k {
            return true;
        }
        for i in 0..=items.len() - k {
            if !go(&items[i + 1..], k - 1, acc.with(items[i]), f) {
                return false;
            }
        }
        true
    }
    let items = pool.to_vec();
    go(&items, k, VertexSet::EMPTY, f)
}

/// The eight-vertex conditions evaluated literally over pairwise-distinct
/// vertex choices, one combination per role group.
///
/// * a: some `v1` with three distinct non-neighbors `v2, v3, v4`;
/// * b: for all such `v1..v4`, any `v8` and any further `v5, v6, v7`, at
///   least five of `v1..v7` are adjacent to `v8`;
/// * c: for all such `v1..v4` and any further `v5, v6`, `v1` is adjacent to
///   at most one of `v5, v6`.
pub fn local8_conditions(g: &Graph) -> Result<Local8> {
    require_local8(g)?;
    let all = g.vertices();
    let mut a = false;
    let mut b = true;
    let mut c = true;
    for v1 in 0..g.order() {
        let non_nbrs = all - g.closed(v1);
        all_combinations(non_nbrs, 3, &mut |trio| {
            a = true;
            let used = trio.with(v1);
            if c {
                c = all_combinations(all - used, 2, &mut |pair| {
                    (g.neighbors(v1) & pair).len() <= 1
                });
            }
            if b {
                for v8 in all - used {
                    b = all_combinations(all - used.with(v8), 3, &mut |rest| {
                        (g.neighbors(v8) & (used | rest)).len() >= 5
                    });
                    if !b {
                        break;
                    }
                }
            }
            b || c
        });
    }
    Ok(Local8 { a, b, c })
}

/// Degree-based forms of the eight-vertex conditions: a low vertex exists,
/// at most one exists, and every low vertex has degree at most one.
pub fn local8_fast(g: &Graph) -> Result<Local8> {
    require_local8(g)?;
    let low = degree_classes(g).low;
    Ok(Local8 {
        a: !low.is_empty(),
        b: low.len() <= 1,
        c: low.iter().all(|v| g.deg(v) <= 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Family) -> Graph {
        f.generate().unwrap()
    }

    #[test]
    fn classes() {
        let x6 = degree_classes(&fam(Family::Xn(6)));
        assert_eq!(x6.high.len(), 6);
        assert!(x6.low.is_empty());
        let d6 = degree_classes(&fam(Family::Dn(6)));
        assert_eq!(d6.high.to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(d6.low.to_vec(), vec![5]);
        let k4 = degree_classes(&fam(Family::Complete(4)));
        assert_eq!(k4.other.len(), 4);
    }

    #[test]
    fn vcrit_degrees() {
        assert_eq!(vcrit4_by_degrees(&fam(Family::Cycle(5))), Ok(true));
        assert_eq!(vcrit4_by_degrees(&fam(Family::Cycle(6))), Ok(false));
        assert_eq!(vcrit4_by_degrees(&fam(Family::Dn(8))), Ok(true));
        assert!(vcrit4_by_degrees(&fam(Family::Complete(5))).is_err());
        assert!(vcrit4_by_degrees(&fam(Family::Elem1)).is_err());
    }

    #[test]
    fn witnesses() {
        let c5 = fam(Family::Cycle(5));
        assert_eq!(neighborhood_witness(&c5, 0), Ok(Some((2, 4))));
        let c6 = fam(Family::Cycle(6));
        for x in 0..6 {
            assert_eq!(neighborhood_witness(&c6, x), Ok(None));
        }
        let x6 = fam(Family::Xn(6));
        assert_eq!(neighborhood_witness(&x6, 0), Ok(Some((2, 4))));
        assert!(neighborhood_witness(&x6, 6).is_err());
        assert_eq!(carac_corollary(&c5), Ok(Some(true)));
        assert_eq!(carac_corollary(&c6), Ok(None));
        assert_eq!(carac_corollary(&fam(Family::Dn(8))), Ok(Some(true)));
    }

    #[test]
    fn saturated_degrees() {
        assert_eq!(saturated4_by_degrees(&fam(Family::Xn(6))), Ok(true));
        assert_eq!(saturated4_by_degrees(&fam(Family::Dn(6))), Ok(true));
        assert_eq!(saturated4_by_degrees(&fam(Family::Cycle(6))), Ok(false));
    }

    #[test]
    fn ecrit_degrees() {
        assert_eq!(ecrit4_by_degrees(&fam(Family::Cycle(5))), Ok(true));
        assert_eq!(ecrit4_by_degrees(&fam(Family::Xn(6))), Ok(false));
        let d6 = fam(Family::Dn(6));
        assert_eq!(ecrit4_by_degrees(&d6), Ok(true));
        assert_eq!(ecrit4_vertex(&d6, 4, 5), Some(0));
        assert!(ecrit4_by_degrees(&fam(Family::Cycle(6))).is_err());
    }

    #[test]
    fn bounds() {
        let all = HighClassBounds { half: true, three_quarters: true };
        assert_eq!(high_class_bounds(&fam(Family::Cycle(5))), Ok(all));
        assert_eq!(high_class_bounds(&fam(Family::Dn(8))), Ok(all));
        assert_eq!(high_class_bounds(&fam(Family::Xn(6))), Ok(all));
        assert_eq!(
            high_class_bounds(&fam(Family::Cycle(6))),
            Ok(HighClassBounds { half: false, three_quarters: false })
        );
    }

    #[test]
    fn cut_structure() {
        let c5 = cut_vertex_structure(&fam(Family::Cycle(5))).unwrap();
        assert_eq!(c5, CutStructure { lemma: true, prop: Some(true) });
        let d6 = cut_vertex_structure(&fam(Family::Dn(6))).unwrap();
        assert_eq!(d6, CutStructure { lemma: true, prop: Some(true) });
        let x6 = cut_vertex_structure(&fam(Family::Xn(6))).unwrap();
        assert_eq!(x6, CutStructure { lemma: true, prop: None });
        assert!(cut_vertex_structure(&fam(Family::Cycle(6))).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(classify_critical4(&fam(Family::Cycle(5))), Classification::IsC5);
        assert_eq!(classify_critical4(&fam(Family::Dn(10))), Classification::IsDn(10));
        assert_eq!(classify_critical4(&fam(Family::Dn(14))), Classification::IsDn(14));
        assert_eq!(classify_critical4(&fam(Family::Cycle(6))), Classification::NotCritical);
        assert_eq!(classify_critical4(&fam(Family::Xn(6))), Classification::NotCritical);
        assert_eq!(classify_critical4(&fam(Family::Elem1)), Classification::ElementaryG1);
        assert_eq!(classify_critical4(&fam(Family::Elem2)), Classification::ElementaryG2);
        assert_eq!(classify_critical4(&fam(Family::Elem3)), Classification::ElementaryG3);
    }

    #[test]
    fn dn_profile_matches_isomorphism() {
        for n in (6..=12).step_by(2) {
            let dn = fam(Family::Dn(n));
            let shuffled = dn.relabel(&(0..n).map(|v| (v * 5 + 1) % n).collect::<Vec<_>>());
            // (5v+1) mod n is a permutation only when gcd(5, n) = 1
            if let Ok(h) = shuffled {
                assert!(is_dn(&h) && has_dn_profile(&h));
            }
            assert!(has_dn_profile(&dn) && is_dn(&dn));
        }
        assert!(!has_dn_profile(&fam(Family::Xn(8))));
    }

    #[test]
    fn local8_on_dn() {
        for n in [8, 10] {
            let dn = fam(Family::Dn(n));
            let all = Local8 { a: true, b: true, c: true };
            assert_eq!(local8_conditions(&dn), Ok(all));
            assert_eq!(local8_fast(&dn), Ok(all));
        }
        assert!(local8_conditions(&fam(Family::Dn(6))).is_err());
        assert!(local8_fast(&fam(Family::Cycle(8))).is_err());
    }

    #[test]
    fn local8_all_high() {
        // X8 has gamma 4 and every degree n - 3
        let x8 = fam(Family::Xn(8));
        let want = Local8 { a: false, b: true, c: true };
        assert_eq!(local8_fast(&x8), Ok(want));
        assert_eq!(local8_conditions(&x8), Ok(want));
    }
}
