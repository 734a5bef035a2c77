//! Isomorphism testing for small graphs by backtracking over
//! degree-compatible assignments.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_ISO_ORDER: usize = 12;

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > MAX_ISO_ORDER {
            return Err(Error::TooLarge {
                what: "isomorphism test",
                order: x.order(),
                limit: MAX_ISO_ORDER,
            });
        }
    }
    Ok(find_isomorphism(g, h).is_some())
}

/// Returns `perm` with `perm[v]` the image in `h` of vertex `v` of `g`.
/// No order cap; callers above [`MAX_ISO_ORDER`] accept the exponential
/// worst case.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let (mut sg, mut sh) = (dg.clone(), dh.clone());
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }

    // Map high-degree vertices first, then prefer vertices adjacent to
    // already-ordered ones so adjacency constraints bite early.
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let next = (g.vertices() - placed)
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & placed).len(), dg[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        order.push(next);
        placed.insert(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut search = Search {
        g,
        h,
        dg: &dg,
        dh: &dh,
        order: &order,
        map: &mut map,
    };
    search.extend(0, VertexSet::EMPTY).then_some(map)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    dg: &'a [usize],
    dh: &'a [usize],
    order: &'a [usize],
    map: &'a mut Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in self.h.vertices() - used {
            if self.dh[w] != self.dg[v] || !self.consistent(v, w, depth) {
                continue;
            }
            self.map[v] = w;
            if self.extend(depth + 1, used.with(w)) {
                return true;
            }
        }
        self.map[v] = usize::MAX;
        false
    }

    fn consistent(&self, v: usize, w: usize, depth: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(self.map[u], w))
    }
}
