//! Named graph families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Empty(usize),
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// Cycle `x_0 .. x_{n-1}` closed up so that `N[x_i]` misses exactly
    /// `x_{i-2}` and `x_{i+2}`. Needs `n >= 5`; `Xn(5)` is `C_5`.
    Xn(usize),
    /// Even order `n >= 6`: one pendant vertex `n-1` hanging off the cut
    /// vertex `n-2`, every other vertex of degree `n-3`.
    Dn(usize),
    /// Four isolated vertices.
    Elem1,
    /// Four vertices, one edge `{0,1}`.
    Elem2,
    /// Four vertices, edges `{0,1}` and `{2,3}`.
    Elem3,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Empty(_) => "Empty",
            Family::Complete(_) => "Complete",
            Family::Path(_) => "Path",
            Family::Cycle(_) => "Cycle",
            Family::Xn(_) => "Xn",
            Family::Dn(_) => "Dn",
            Family::Elem1 => "Elem1",
            Family::Elem2 => "Elem2",
            Family::Elem3 => "Elem3",
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Empty(n)
            | Family::Complete(n)
            | Family::Path(n)
            | Family::Cycle(n)
            | Family::Xn(n)
            | Family::Dn(n) => n,
            Family::Elem1 | Family::Elem2 | Family::Elem3 => 4,
        }
    }

    /// Parses a family name and an order, e.g. `("Dn", 8)`. The order is
    /// ignored for the fixed-order elementary graphs.
    pub fn from_name(name: &str, order: usize) -> Result<Family> {
        let f = match name.to_ascii_lowercase().as_str() {
            "empty" => Family::Empty(order),
            "complete" | "k" => Family::Complete(order),
            "path" | "p" => Family::Path(order),
            "cycle" | "c" => Family::Cycle(order),
            "xn" | "x" => Family::Xn(order),
            "dn" | "d" => Family::Dn(order),
            "elem1" | "g1" => Family::Elem1,
            "elem2" | "g2" => Family::Elem2,
            "elem3" | "g3" => Family::Elem3,
            _ => {
                return Err(Error::PreconditionViolated(format!(
                    "unknown family {name:?}"
                )))
            }
        };
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order();
        let ok = match self {
            Family::Cycle(_) => n >= 3,
            Family::Xn(_) => n >= 5,
            Family::Dn(_) => n >= 6 && n.is_multiple_of(2),
            _ => true,
        };
        if ok && n <= crate::graph::MAX_ORDER {
            Ok(())
        } else {
            Err(Error::InvalidOrder {
                family: self.name(),
                order: n,
            })
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        let edges: Vec<(usize, usize)> = match *self {
            Family::Empty(_) => vec![],
            Family::Complete(_) => all_pairs(0..n).collect(),
            Family::Path(_) => (1..n).map(|i| (i - 1, i)).collect(),
            Family::Cycle(_) => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            Family::Xn(_) => all_pairs(0..n)
                .filter(|&(u, v)| {
                    let d = v - u;
                    d != 2 && d != n - 2
                })
                .collect(),
            Family::Dn(_) => dn_edges(n),
            Family::Elem1 => vec![],
            Family::Elem2 => vec![(0, 1)],
            Family::Elem3 => vec![(0, 1), (2, 3)],
        };
        Graph::new(n, edges)
    }
}

fn all_pairs(r: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> {
    let end = r.end;
    r.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

fn dn_edges(n: usize) -> Vec<(usize, usize)> {
    let cut = n - 2;
    let pendant = n - 1;
    let middle = 2..n - 2;
    let mut edges = vec![(0, 1), (cut, pendant)];
    edges.extend(middle.clone().map(|j| (j, cut)));
    for r in 0..2 {
        edges.extend(middle.clone().map(|j| (r, j)));
    }
    // middle block minus the matching (2,3), (4,5), ..., (n-4, n-3)
    edges.extend(all_pairs(middle).filter(|&(i, j)| !(i % 2 == 0 && j == i + 1)));
    edges
}

/// Shorthand for [`Family::generate`].
pub fn gen_family(f: Family) -> Result<Graph> {
    f.generate()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Elem1 | Family::Elem2 | Family::Elem3 => f.write_str(self.name()),
            _ => write!(f, "{}{}", self.name(), self.order()),
        }
    }
}

/// Parses the compact form produced by `Display`, e.g. `Dn8`, `Cycle5`,
/// `Elem3`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        if let Ok(f @ (Family::Elem1 | Family::Elem2 | Family::Elem3)) = Family::from_name(s, 4) {
            return Ok(f);
        }
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(s.len());
        let (name, digits) = s.split_at(split);
        if digits.is_empty() {
            let f = Family::from_name(name, 4)?;
            return match f {
                Family::Elem1 | Family::Elem2 | Family::Elem3 => Ok(f),
                _ => Err(Error::PreconditionViolated(format!(
                    "family {s:?} needs an order"
                ))),
            };
        }
        let order = digits
            .parse()
            .map_err(|_| Error::PreconditionViolated(format!("bad family order in {s:?}")))?;
        Family::from_name(name, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_orders() {
        assert!(Family::Xn(4).generate().is_err());
        assert!(Family::Dn(7).generate().is_err());
        assert!(Family::Dn(4).generate().is_err());
        assert!(Family::Cycle(2).generate().is_err());
        assert!(Family::Empty(65).generate().is_err());
    }

    #[test]
    fn xn_neighborhoods() {
        let x6 = Family::Xn(6).generate().unwrap();
        for i in 0..6 {
            assert_eq!(x6.deg(i), 3);
            let missing = x6.vertices() - x6.closed(i);
            let expect = [(i + 4) % 6, (i + 2) % 6].into_iter().collect();
            assert_eq!(missing, expect);
        }
        assert_eq!(x6.closed(0).to_vec(), vec![0, 1, 3, 5]);
        assert_eq!(
            Family::Xn(5).generate().unwrap(),
            Family::Cycle(5).generate().unwrap()
        );
        for n in 5..=12 {
            let g = Family::Xn(n).generate().unwrap();
            assert!(g.degrees().iter().all(|&d| d == n - 3), "X{n}");
        }
    }

    #[test]
    fn dn_edge_sets() {
        let d6 = Family::Dn(6).generate().unwrap();
        let mut e: Vec<_> = d6.edges().collect();
        e.sort();
        let mut want = vec![(0, 1), (4, 5), (2, 4), (3, 4), (0, 2), (0, 3), (1, 2), (1, 3)];
        want.sort();
        assert_eq!(e, want);
        assert_eq!(d6.degrees(), vec![3, 3, 3, 3, 3, 1]);

        let d8 = Family::Dn(8).generate().unwrap();
        assert_eq!(d8.degrees(), vec![5, 5, 5, 5, 5, 5, 5, 1]);
        let middle_non_edges = d8
            .non_edges()
            .filter(|&(u, v)| (2..6).contains(&u) && (2..6).contains(&v))
            .count();
        assert_eq!(middle_non_edges, 2);

        for n in (6..=12).step_by(2) {
            let mut d = Family::Dn(n).generate().unwrap().degrees();
            d.sort();
            let mut want = vec![n - 3; n - 1];
            want.insert(0, 1);
            assert_eq!(d, want, "D{n}");
        }
    }

    #[test]
    fn dn_pendant_cut_vertex() {
        let d6 = Family::Dn(6).generate().unwrap();
        assert_eq!(d6.degree(5), Ok(1));
        assert_eq!(d6.cut_vertices().to_vec(), vec![4]);
        let h = d6.delete_vertex(5).unwrap();
        assert_eq!(h.degree(4), Ok(2));
    }

    #[test]
    fn elementary() {
        assert_eq!(Family::Elem1.generate().unwrap().edge_count(), 0);
        assert_eq!(Family::Elem2.generate().unwrap().edge_count(), 1);
        let g3 = Family::Elem3.generate().unwrap();
        assert!(g3.has_edge(0, 1) && g3.has_edge(2, 3) && g3.edge_count() == 2);
    }

    #[test]
    fn parse_display() {
        for f in [Family::Dn(8), Family::Cycle(5), Family::Elem3, Family::Xn(7), Family::Empty(0)] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!("dn10".parse::<Family>().unwrap(), Family::Dn(10));
        assert!("Dn".parse::<Family>().is_err());
        assert!("Foo3".parse::<Family>().is_err());
    }
}
