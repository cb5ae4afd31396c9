//! Planarity testing with the left-right criterion, plus extraction of a
//! Kuratowski subgraph from nonplanar inputs.

use smallvec::SmallVec;

use crate::graph::{iter_bits, Graph};
use crate::minor::Kuratowski;

const NONE: usize = usize::MAX;

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.size() > 3 * n - 6 {
        return false;
    }
    // Vertices of degree at most one never matter.
    let rows = g.rows();
    let mut keep = g.vertex_mask();
    loop {
        let low = iter_bits(keep)
            .filter(|&v| (rows[v] & keep).count_ones() <= 1)
            .fold(0u64, |m, v| m | (1 << v));
        if low == 0 {
            break;
        }
        keep &= !low;
    }
    let nk = keep.count_ones() as usize;
    let mk = iter_bits(keep)
        .map(|v| (rows[v] & keep).count_ones() as usize)
        .sum::<usize>()
        / 2;
    // Every component of a min-degree-2 graph has at least as many edges as
    // vertices, and one holding a Kuratowski subdivision has three more.
    if nk <= 4 || mk <= nk + 2 {
        return true;
    }
    if mk > 3 * nk - 6 {
        return false;
    }
    let masked: SmallVec<[u64; 16]> = rows
        .iter()
        .enumerate()
        .map(|(v, &r)| if keep >> v & 1 == 1 { r & keep } else { 0 })
        .collect();
    Lr::new(&masked, mk).test()
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy)]
struct ConflictPair {
    left: Interval,
    right: Interval,
    id: usize,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'a> {
    rows: &'a [u64],
    n: usize,
    edge_id: Vec<usize>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    out: Vec<SmallVec<[usize; 8]>>,
    refs: Vec<usize>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    next_id: usize,
}

impl<'a> Lr<'a> {
    fn new(rows: &'a [u64], m: usize) -> Lr<'a> {
        let n = rows.len();
        let mut edge_id = vec![NONE; n * n];
        let mut k = 0;
        for u in 0..n {
            for v in iter_bits(rows[u]) {
                if u < v {
                    edge_id[u * n + v] = k;
                    edge_id[v * n + u] = k;
                    k += 1;
                }
            }
        }
        debug_assert_eq!(k, m);
        Lr {
            rows,
            n,
            edge_id,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            oriented: vec![false; m],
            src: vec![NONE; m],
            dst: vec![NONE; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            out: vec![SmallVec::new(); n],
            refs: vec![NONE; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![NONE; m],
            stack: Vec::new(),
            next_id: 0,
        }
    }

    fn test(mut self) -> bool {
        let mut roots = Vec::new();
        for v in 0..self.n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let nesting = &self.nesting;
            self.out[v].sort_by_key(|&e| nesting[e]);
        }
        roots.into_iter().all(|r| self.check(r))
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for w in iter_bits(self.rows[v]) {
            let ei = self.edge_id[v * self.n + w];
            if self.oriented[ei] {
                continue;
            }
            self.oriented[ei] = true;
            self.src[ei] = v;
            self.dst[ei] = w;
            self.out[v].push(ei);
            self.lowpt[ei] = self.height[v];
            self.lowpt2[ei] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = ei;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[ei] = self.height[w];
            }
            self.nesting[ei] = 2 * self.lowpt[ei];
            if self.lowpt2[ei] < self.height[v] {
                self.nesting[ei] += 1;
            }
            if e != NONE {
                if self.lowpt[ei] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[ei]);
                    self.lowpt[e] = self.lowpt[ei];
                } else if self.lowpt[ei] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[ei]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[ei]);
                }
            }
        }
    }

    fn top_id(&self) -> usize {
        self.stack.last().map_or(NONE, |p| p.id)
    }

    fn push(&mut self, left: Interval, right: Interval) {
        let id = self.next_id;
        self.next_id += 1;
        self.stack.push(ConflictPair { left, right, id });
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn check(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = self.out[v].clone();
        for (i, &ei) in out.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.top_id();
            if ei == self.parent_edge[w] {
                if !self.check(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.push(Interval::EMPTY, Interval { low: ei, high: ei });
            }
            if self.lowpt[ei] < self.height[v] {
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p_left = Interval::EMPTY;
        let mut p_right = Interval::EMPTY;
        loop {
            let mut q = self.stack.pop().expect("constraint stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p_right.is_empty() {
                    p_right = q.right;
                } else {
                    self.refs[p_right.low] = q.right.high;
                }
                p_right.low = q.right.low;
            } else {
                self.refs[q.right.low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.refs[p_right.low] = q.right.high;
            if q.right.low != NONE {
                p_right.low = q.right.low;
            }
            if p_left.is_empty() {
                p_left = q.left;
            } else {
                self.refs[p_left.low] = q.left.high;
            }
            p_left.low = q.left.low;
        }
        if !(p_left.is_empty() && p_right.is_empty()) {
            self.push(p_left, p_right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.refs[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refs[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.refs[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refs[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            // Re-pushed pairs keep their identity.
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("a return edge keeps a pair on the stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                hl
            } else {
                hr
            };
        }
    }
}

/// A subdivision of K5 or K3,3 inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSubgraph {
    pub kind: Kuratowski,
    /// Branch vertices in increasing order.
    pub branch_vertices: Vec<usize>,
    /// One path per edge of the underlying Kuratowski graph, from the smaller
    /// branch vertex to the larger, listing every vertex on the way.
    pub paths: Vec<Vec<usize>>,
}

impl KSubgraph {
    /// Checks that this really is a Kuratowski subdivision inside `host`.
    pub fn validate(&self, host: &Graph) -> bool {
        let (nb, np) = match self.kind {
            Kuratowski::K5 => (5, 10),
            Kuratowski::K33 => (6, 9),
        };
        if self.branch_vertices.len() != nb || self.paths.len() != np {
            return false;
        }
        let branch: u64 = self.branch_vertices.iter().fold(0, |m, &v| m | (1 << v));
        if branch.count_ones() as usize != nb {
            return false;
        }
        let mut used = 0u64;
        let mut pairs = Vec::new();
        for p in &self.paths {
            if p.len() < 2 || p.iter().any(|&v| v >= host.order()) {
                return false;
            }
            let (a, b) = (p[0], p[p.len() - 1]);
            if branch & (1 << a) == 0 || branch & (1 << b) == 0 || a == b {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if branch & (1 << x) != 0 || used & (1 << x) != 0 {
                    return false;
                }
                used |= 1 << x;
            }
            if p.windows(2).any(|w| !host.has_edge(w[0], w[1])) {
                return false;
            }
            pairs.push((a.min(b), a.max(b)));
        }
        pairs.sort_unstable();
        pairs.dedup();
        if pairs.len() != np {
            return false;
        }
        let skeleton = Graph::from_edges(
            host.order(),
            &pairs,
        )
        .expect("pairs are distinct and in range");
        let expected = match self.kind {
            Kuratowski::K5 => Graph::complete(5),
            Kuratowski::K33 => Graph::complete_bipartite(3, 3),
        }
        .expect("small");
        let core = skeleton.induced_mask(branch);
        crate::canon::is_isomorphic(&core, &expected)
    }

    /// All edges on the subdivision paths.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect();
        out.sort_unstable();
        out
    }
}

/// A Kuratowski subdivision in `g`, or `None` when `g` is planar.
pub fn find_k_subgraph(g: &Graph) -> Option<KSubgraph> {
    if is_planar(g) {
        return None;
    }
    let mut h = g.clone();
    for e in g.edges() {
        let t = h.without_edge(e.u(), e.v());
        if !is_planar(&t) {
            h = t;
        }
    }
    // h is now an edge-minimal nonplanar subgraph: a subdivision plus isolated vertices.
    let branch: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch.len() == 5 && branch.iter().all(|&v| h.degree(v) == 4) {
        Kuratowski::K5
    } else if branch.len() == 6 && branch.iter().all(|&v| h.degree(v) == 3) {
        Kuratowski::K33
    } else {
        unreachable!("edge-minimal nonplanar graph is not a Kuratowski subdivision")
    };
    let is_branch = |v: usize| h.degree(v) >= 3;
    let mut paths = Vec::new();
    for &b in &branch {
        for x in h.neighbors(b) {
            let mut path = vec![b, x];
            let (mut prev, mut cur) = (b, x);
            while !is_branch(cur) {
                let next = h
                    .neighbors(cur)
                    .find(|&y| y != prev)
                    .expect("internal path vertex has degree two");
                path.push(next);
                prev = cur;
                cur = next;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    Some(KSubgraph {
        kind,
        branch_vertices: branch,
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&Graph::complete(5).unwrap()));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3).unwrap()));
        assert!(is_planar(&Graph::complete(4).unwrap()));
        assert!(is_planar(&Graph::complete(5).unwrap().delete_edge(0, 1).unwrap()));
        let k33e = Graph::complete_bipartite(3, 3).unwrap().delete_edge(0, 3).unwrap();
        assert!(is_planar(&k33e));
    }

    #[test]
    fn petersen_is_nonplanar() {
        let p = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert!(!is_planar(&p));
        let k = find_k_subgraph(&p).unwrap();
        assert_eq!(k.kind, Kuratowski::K33);
        assert!(k.validate(&p));
    }

    #[test]
    fn subdivided_k5_witness() {
        let g = Graph::complete(5).unwrap().subdivide_edge(0, 1).unwrap();
        let k = find_k_subgraph(&g).unwrap();
        assert_eq!(k.kind, Kuratowski::K5);
        assert!(k.paths.contains(&vec![0, 5, 1]));
        assert!(k.validate(&g));
    }

    #[test]
    fn planar_has_no_witness() {
        assert!(find_k_subgraph(&Graph::cycle(7).unwrap()).is_none());
    }
}
