//! Brute-force test for a K5 or K3,3 minor. It never calls the planarity
//! test, so the two can check each other.

use std::collections::HashSet;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{iter_bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kuratowski {
    K5,
    K33,
}

impl Kuratowski {
    pub fn graph(self) -> Graph {
        match self {
            Kuratowski::K5 => Graph::complete(5),
            Kuratowski::K33 => Graph::complete_bipartite(3, 3),
        }
        .expect("small")
    }
}

pub fn has_minor(g: &Graph, target: Kuratowski) -> bool {
    let mut seen = HashSet::new();
    search(g.clone(), target, &mut seen)
}

/// Nonplanarity by Wagner's theorem.
pub fn has_kuratowski_minor(g: &Graph) -> bool {
    has_minor(g, Kuratowski::K5) || has_minor(g, Kuratowski::K33)
}

fn search(g: Graph, target: Kuratowski, seen: &mut HashSet<CanonicalForm>) -> bool {
    let g = reduce(g);
    let (tn, tm) = match target {
        Kuratowski::K5 => (5, 10),
        Kuratowski::K33 => (6, 9),
    };
    if g.order() < tn || g.size() < tm {
        return false;
    }
    if contains_subgraph(&g, target) {
        return true;
    }
    if g.order() == tn || !seen.insert(canonical_form(&g)) {
        return false;
    }
    for e in g.edges() {
        if search(g.contracted(e.u(), e.v()), target, seen)
            || search(g.without_edge(e.u(), e.v()), target, seen)
        {
            return true;
        }
    }
    false
}

/// Deletes vertices of degree at most one and contracts an edge at each
/// vertex of degree two. Neither step changes whether a K5 or K3,3 minor
/// exists, since every branch set of such a minor needs three outside neighbors.
fn reduce(mut g: Graph) -> Graph {
    loop {
        if let Some(v) = (0..g.order()).find(|&v| g.degree(v) <= 1) {
            g = g.without_vertex(v);
        } else if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 2) {
            let w = g.neighbors(v).next().expect("degree two");
            g = g.contracted(v, w);
        } else {
            return g;
        }
    }
}

fn contains_subgraph(g: &Graph, target: Kuratowski) -> bool {
    let n = g.order();
    match target {
        Kuratowski::K5 => {
            fn clique(g: &Graph, cand: u64, need: u32) -> bool {
                if need == 0 {
                    return true;
                }
                if cand.count_ones() < need {
                    return false;
                }
                iter_bits(cand).any(|v| {
                    let later = cand & !((1u64 << v) | ((1u64 << v) - 1));
                    clique(g, later & g.neighbor_mask(v), need - 1)
                })
            }
            clique(g, g.vertex_mask(), 5)
        }
        Kuratowski::K33 => {
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        let common = g.neighbor_mask(a) & g.neighbor_mask(b) & g.neighbor_mask(c);
                        if common.count_ones() >= 3 {
                            return true;
                        }
                    }
                }
            }
            false
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_targets() {
        assert!(has_minor(&Graph::complete(5).unwrap(), Kuratowski::K5));
        assert!(!has_minor(&Graph::complete(5).unwrap(), Kuratowski::K33));
        assert!(has_minor(&Graph::complete(6).unwrap(), Kuratowski::K33));
        assert!(has_minor(&Graph::complete_bipartite(3, 3).unwrap(), Kuratowski::K33));
        assert!(!has_minor(&Graph::complete_bipartite(3, 3).unwrap(), Kuratowski::K5));
    }

    #[test]
    fn planar_graphs_have_neither() {
        let g = Graph::complete(5).unwrap().delete_edge(1, 3).unwrap();
        assert!(!has_kuratowski_minor(&g));
        assert!(!has_kuratowski_minor(&Graph::cycle(8).unwrap()));
    }

    #[test]
    fn subdivision_is_found() {
        let g = Graph::complete_bipartite(3, 3)
            .unwrap()
            .subdivide_edge(0, 3)
            .unwrap()
            .subdivide_edge(1, 4)
            .unwrap();
        assert!(has_minor(&g, Kuratowski::K33));
    }
}
