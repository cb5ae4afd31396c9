//! Test oracles built from first principles: planarity means "no K5 or K3,3
//! minor", the eight properties follow their definitions literally, and
//! minor-minimality walks every minor with memoization.

#![allow(dead_code)]

use std::collections::HashMap;

use mmsieve::{canonical_form, has_kuratowski_minor, CanonicalForm, Graph, PropertyId};
use rand::Rng;

pub struct Oracle {
    planar: HashMap<CanonicalForm, bool>,
    /// (class, property) -> some minor (including itself) has the property.
    down: HashMap<(CanonicalForm, PropertyId), bool>,
}

impl Oracle {
    pub fn new() -> Oracle {
        Oracle {
            planar: HashMap::new(),
            down: HashMap::new(),
        }
    }

    pub fn planar(&mut self, g: &Graph) -> bool {
        let k = canonical_form(g);
        if let Some(&b) = self.planar.get(&k) {
            return b;
        }
        let b = !has_kuratowski_minor(g);
        self.planar.insert(k, b);
        b
    }

    pub fn has(&mut self, g: &Graph, p: PropertyId) -> bool {
        use PropertyId::*;
        let n = g.order();
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
        let non_edges = g.non_edges();
        let del_v = |v: usize| g.delete_vertex(v).unwrap();
        let del_e = |(u, v): (usize, usize)| g.delete_edge(u, v).unwrap();
        let con_e = |(u, v): (usize, usize)| g.contract_edge(u, v).unwrap();
        let add_e = |(u, v): (usize, usize)| g.add_edge(u, v).unwrap();
        match p {
            AN => self.planar(g) && non_edges.iter().any(|&e| !self.planar(&add_e(e))),
            CAN => {
                self.planar(g)
                    && !non_edges.is_empty()
                    && non_edges.iter().all(|&e| !self.planar(&add_e(e)))
            }
            NA => !self.planar(g) && (0..n).all(|v| !self.planar(&del_v(v))),
            NE => !self.planar(g) && edges.iter().all(|&e| !self.planar(&del_e(e))),
            NC => !self.planar(g) && edges.iter().all(|&e| !self.planar(&con_e(e))),
            IA => (0..n).any(|v| !self.planar(&del_v(v))),
            IE => edges.iter().any(|&e| !self.planar(&del_e(e))),
            IC => edges.iter().any(|&e| !self.planar(&con_e(e))),
        }
    }

    fn down(&mut self, g: &Graph, p: PropertyId) -> bool {
        let k = (canonical_form(g), p);
        if let Some(&b) = self.down.get(&k) {
            return b;
        }
        let b = self.has(g, p) || one_step(g).iter().any(|m| self.down(m, p));
        self.down.insert(k, b);
        b
    }

    pub fn minor_minimal(&mut self, g: &Graph, p: PropertyId) -> bool {
        self.has(g, p) && !one_step(g).iter().any(|m| self.down(m, p))
    }
}

/// Every single edge deletion, edge contraction and vertex deletion.
pub fn one_step(g: &Graph) -> Vec<Graph> {
    let mut out = Vec::new();
    for e in g.edges() {
        out.push(g.delete_edge(e.u(), e.v()).unwrap());
        out.push(g.contract_edge(e.u(), e.v()).unwrap());
    }
    for v in 0..g.order() {
        out.push(g.delete_vertex(v).unwrap());
    }
    out
}

/// Every labeled graph on `n` vertices.
pub fn labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// One representative per isomorphism class of order `n` (n <= 6), found by
/// brute force over labeled graphs.
pub fn all_classes(n: usize) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    labeled(n).filter(|g| seen.insert(canonical_form(g))).collect()
}

/// G(n, q) with `q` itself drawn uniformly from `[lo, hi)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Graph {
    let q = rng.random_range(lo..hi);
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.random_bool(q) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
