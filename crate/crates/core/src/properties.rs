//! The eight apex-type graph properties and their witness finders.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error};
use crate::graph::{Edge, Graph};
use crate::planarity::is_planar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PropertyId {
    /// Almost nonplanar: planar, and some added edge makes it nonplanar.
    AN,
    /// Completely almost nonplanar: planar, not complete, and every added edge
    /// makes it nonplanar.
    CAN,
    /// Not apex: nonplanar after deleting any one vertex.
    NA,
    /// Not edge apex: nonplanar after deleting any one edge.
    NE,
    /// Not contraction apex: nonplanar after contracting any one edge.
    NC,
    /// Some vertex deletion leaves it nonplanar.
    IA,
    /// Some edge deletion leaves it nonplanar.
    IE,
    /// Some edge contraction leaves it nonplanar.
    IC,
}

impl PropertyId {
    pub const ALL: [PropertyId; 8] = [
        PropertyId::AN,
        PropertyId::CAN,
        PropertyId::NA,
        PropertyId::NE,
        PropertyId::NC,
        PropertyId::IA,
        PropertyId::IE,
        PropertyId::IC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::AN => "AN",
            PropertyId::CAN => "CAN",
            PropertyId::NA => "NA",
            PropertyId::NE => "NE",
            PropertyId::NC => "NC",
            PropertyId::IA => "IA",
            PropertyId::IE => "IE",
            PropertyId::IC => "IC",
        }
    }

    /// Whether every graph with the property is nonplanar.
    pub fn implies_nonplanar(self) -> bool {
        !matches!(self, PropertyId::AN | PropertyId::CAN)
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| invalid(format!("unknown property {s:?}")))
    }
}

/// Evidence for or against a property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    Vertex(usize),
    Edge(Edge),
    /// A nonadjacent pair `u < v`.
    Pair(usize, usize),
}

impl fmt::Display for Witness {
    /// 1-indexed, matching the edge-list format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "vertex {}", v + 1),
            Witness::Edge(e) => write!(f, "edge ({},{})", e.u() + 1, e.v() + 1),
            Witness::Pair(u, v) => write!(f, "non-edge ({},{})", u + 1, v + 1),
        }
    }
}

/// Least vertex whose deletion leaves a planar graph.
pub fn find_apex_vertex(g: &Graph) -> Option<usize> {
    (0..g.order()).find(|&v| is_planar(&g.without_vertex(v)))
}

/// Least edge whose deletion leaves a planar graph.
pub fn find_apex_edge(g: &Graph) -> Option<Edge> {
    g.edges()
        .into_iter()
        .find(|e| is_planar(&g.without_edge(e.u(), e.v())))
}

/// Least edge whose contraction leaves a planar graph.
pub fn find_contraction_apex(g: &Graph) -> Option<Edge> {
    g.edges()
        .into_iter()
        .find(|e| is_planar(&g.contracted(e.u(), e.v())))
}

/// Least nonadjacent pair whose joining edge makes the graph nonplanar.
pub fn find_nonplanarizing_pair(g: &Graph) -> Option<(usize, usize)> {
    g.non_edges()
        .into_iter()
        .find(|&(u, v)| !is_planar(&g.with_edge(u, v)))
}

fn nonplanar_vertex_deletion(g: &Graph) -> Option<usize> {
    (0..g.order()).find(|&v| !is_planar(&g.without_vertex(v)))
}

fn nonplanar_edge_deletion(g: &Graph) -> Option<Edge> {
    g.edges()
        .into_iter()
        .find(|e| !is_planar(&g.without_edge(e.u(), e.v())))
}

fn nonplanar_contraction(g: &Graph) -> Option<Edge> {
    g.edges()
        .into_iter()
        .find(|e| !is_planar(&g.contracted(e.u(), e.v())))
}

pub fn check(g: &Graph, p: PropertyId) -> bool {
    match p {
        PropertyId::AN => is_planar(g) && find_nonplanarizing_pair(g).is_some(),
        PropertyId::CAN => {
            is_planar(g)
                && !g.is_complete()
                && g.non_edges().into_iter().all(|(u, v)| !is_planar(&g.with_edge(u, v)))
        }
        PropertyId::NA => !is_planar(g) && find_apex_vertex(g).is_none(),
        PropertyId::NE => !is_planar(g) && find_apex_edge(g).is_none(),
        PropertyId::NC => !is_planar(g) && find_contraction_apex(g).is_none(),
        PropertyId::IA => nonplanar_vertex_deletion(g).is_some(),
        PropertyId::IE => nonplanar_edge_deletion(g).is_some(),
        PropertyId::IC => nonplanar_contraction(g).is_some(),
    }
}

/// A witness explaining the answer of [`check`], when one exists: the
/// certificate for AN, IA, IE and IC when they hold, and the counterexample
/// for CAN, NA, NE and NC when they fail on a graph that qualifies otherwise.
pub fn witness(g: &Graph, p: PropertyId) -> Option<Witness> {
    match p {
        PropertyId::AN => {
            if !is_planar(g) {
                return None;
            }
            find_nonplanarizing_pair(g).map(|(u, v)| Witness::Pair(u, v))
        }
        PropertyId::CAN => {
            if !is_planar(g) {
                return None;
            }
            g.non_edges()
                .into_iter()
                .find(|&(u, v)| is_planar(&g.with_edge(u, v)))
                .map(|(u, v)| Witness::Pair(u, v))
        }
        PropertyId::NA => find_apex_vertex(g).map(Witness::Vertex),
        PropertyId::NE => find_apex_edge(g).map(Witness::Edge),
        PropertyId::NC => find_contraction_apex(g).map(Witness::Edge),
        PropertyId::IA => nonplanar_vertex_deletion(g).map(Witness::Vertex),
        PropertyId::IE => nonplanar_edge_deletion(g).map(Witness::Edge),
        PropertyId::IC => nonplanar_contraction(g).map(Witness::Edge),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k6_is_not_apex() {
        let k6 = Graph::complete(6).unwrap();
        assert!(check(&k6, PropertyId::NA));
        assert!(check(&k6, PropertyId::NE));
        assert!(check(&k6, PropertyId::NC));
    }

    #[test]
    fn k5_is_apex_everywhere() {
        let k5 = Graph::complete(5).unwrap();
        assert!(!check(&k5, PropertyId::NA));
        assert!(!check(&k5, PropertyId::NE));
        assert!(!check(&k5, PropertyId::NC));
        assert!(!check(&k5, PropertyId::IA));
        assert_eq!(find_apex_vertex(&k5), Some(0));
        assert_eq!(find_apex_edge(&k5), Some(Edge::new(0, 1).unwrap()));
    }

    #[test]
    fn almost_nonplanar_examples() {
        let k5e = Graph::complete(5).unwrap().delete_edge(0, 1).unwrap();
        assert!(check(&k5e, PropertyId::AN));
        assert!(check(&k5e, PropertyId::CAN));
        assert_eq!(witness(&k5e, PropertyId::AN), Some(Witness::Pair(0, 1)));
        // complete graphs are never CAN
        assert!(!check(&Graph::complete(4).unwrap(), PropertyId::CAN));
    }

    #[test]
    fn names_round_trip() {
        for p in PropertyId::ALL {
            assert_eq!(p.name().parse::<PropertyId>().unwrap(), p);
        }
        assert!("XX".parse::<PropertyId>().is_err());
    }
}
