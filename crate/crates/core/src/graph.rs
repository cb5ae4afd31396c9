//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks.
//!
//! All operations are value-returning; a `Graph` is never mutated through the
//! public API. Vertices are `0..order`, and every operation that removes a
//! vertex closes the gap while keeping the relative order of the survivors.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{invalid, Result};

pub const MAX_ORDER: usize = 64;

/// An undirected edge, normalized so that `u() < v()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(invalid(format!("loop at vertex {a}")));
        }
        Ok(Edge(a.min(b), a.max(b)))
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn other(self, x: usize) -> usize {
        if x == self.0 {
            self.1
        } else {
            self.0
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: SmallVec<[u64; 16]>,
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask of the vertices with index greater than `v`.
#[inline]
pub(crate) fn above(v: usize) -> u64 {
    !((bit(v) << 1).wrapping_sub(1))
}

/// Removes bit `v` from a row and shifts the higher bits down by one.
#[inline]
pub(crate) fn drop_bit(row: u64, v: usize) -> u64 {
    let low = row & (bit(v) - 1);
    let high = row.checked_shr(v as u32 + 1).unwrap_or(0);
    low | (high << v)
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(invalid(format!("order {n} exceeds {MAX_ORDER}")));
        }
        Ok(Graph {
            adj: SmallVec::from_elem(0, n),
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// K_{a,b} with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let mut g = Graph::empty(a + b)?;
        for x in 0..a {
            for y in a..a + b {
                g.link(x, y);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(invalid("a cycle needs at least 3 vertices"));
        }
        let mut g = Graph::path(n)?;
        g.link(0, n - 1);
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.link(v - 1, v);
        }
        Ok(g)
    }

    /// Builds a graph from 0-indexed edges. Loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(invalid(format!("loop at vertex {a}")));
            }
            if g.has_edge(a, b) {
                return Err(invalid(format!("duplicate edge ({a},{b})")));
            }
            g.link(a, b);
        }
        Ok(g)
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub(crate) fn link(&mut self, a: usize, b: usize) {
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    #[inline]
    pub(crate) fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a] &= !bit(b);
        self.adj[b] &= !bit(a);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(invalid(format!(
                "vertex {v} out of range for order {}",
                self.order()
            )))
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.has_edge(a, b) {
            return Err(invalid(format!("({a},{b}) is not an edge")));
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Bitmask of all vertices.
    pub(crate) fn vertex_mask(&self) -> u64 {
        let n = self.order();
        if n == 64 {
            u64::MAX
        } else {
            bit(n) - 1
        }
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && b < self.order() && self.adj[a] & bit(b) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    ///
    /// # Panics
    /// If `v` is out of range.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        iter_bits(self.adj[v])
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in iter_bits(self.adj[u] & above(u)) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    /// Pairs `u < v` with no edge between them, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for v in u + 1..self.order() {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// # Panics
    /// If `v` is out of range.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Result<usize> {
        (0..self.order())
            .map(|v| self.degree(v))
            .min()
            .ok_or_else(|| invalid("minimum degree of the empty graph"))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            adj: (0..self.order()).map(|v| all & !self.adj[v] & !bit(v)).collect(),
        }
    }

    /// Vertices reachable from `v` (including `v`) as a bitmask, inside `within`.
    pub(crate) fn reach(&self, v: usize, within: u64) -> u64 {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0;
            for x in iter_bits(frontier) {
                next |= self.adj[x];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components, each sorted, listed by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.reach(v, left);
            left &= !comp;
            out.push(iter_bits(comp).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertex connectivity: the fewest vertices whose removal disconnects the
    /// graph, with `K_n` having connectivity `n - 1` and disconnected graphs 0.
    pub fn connectivity(&self) -> Result<usize> {
        let n = self.order();
        if n == 0 {
            return Err(invalid("connectivity of the empty graph"));
        }
        if self.is_complete() {
            return Ok(n - 1);
        }
        if !self.is_connected() {
            return Ok(0);
        }
        let mut best = self.min_degree()?;
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    best = best.min(self.local_connectivity(s, t, best));
                    if best == 1 {
                        return Ok(1);
                    }
                }
            }
        }
        Ok(best)
    }

    /// Maximum number of internally disjoint s-t paths, stopping at `limit`.
    fn local_connectivity(&self, s: usize, t: usize, limit: usize) -> usize {
        // Split every vertex x into x_in = 2x and x_out = 2x+1.
        let n = self.order();
        let m = 2 * n;
        let mut cap = vec![0i32; m * m];
        for x in 0..n {
            let through = if x == s || x == t { n as i32 } else { 1 };
            cap[(2 * x) * m + 2 * x + 1] = through;
            for y in self.neighbors(x) {
                cap[(2 * x + 1) * m + 2 * y] = 1;
            }
        }
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut prev = vec![usize::MAX; m];
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[src] = src;
            let mut queue = std::collections::VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                if x == dst {
                    break;
                }
                for y in 0..m {
                    if prev[y] == usize::MAX && cap[x * m + y] > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[dst] == usize::MAX {
                break;
            }
            let mut y = dst;
            while y != src {
                let x = prev[y];
                cap[x * m + y] -= 1;
                cap[y * m + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(invalid("permutation length differs from order"));
        }
        for &p in perm {
            if p >= n || seen & bit(p) != 0 {
                return Err(invalid("not a permutation"));
            }
            seen |= bit(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked<T: Copy + Into<usize>>(&self, perm: &[T]) -> Graph {
        let mut g = Graph {
            adj: SmallVec::from_elem(0, self.order()),
        };
        for v in 0..self.order() {
            let mut row = 0;
            for w in iter_bits(self.adj[v]) {
                row |= bit(perm[w].into());
            }
            g.adj[perm[v].into()] = row;
        }
        g
    }

    /// The subgraph induced by `vertices`, relabeled in increasing order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut keep = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            keep |= bit(v);
        }
        Ok(self.induced_mask(keep))
    }

    pub(crate) fn induced_mask(&self, keep: u64) -> Graph {
        let mut g = self.clone();
        for v in (0..self.order()).rev() {
            if keep & bit(v) == 0 {
                g = g.without_vertex(v);
            }
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.without_vertex(v))
    }

    pub(crate) fn without_vertex(&self, v: usize) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != v)
            .map(|(_, &r)| drop_bit(r, v))
            .collect();
        Graph { adj }
    }

    pub fn delete_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_edge(a, b)?;
        Ok(self.without_edge(a, b))
    }

    #[inline]
    pub(crate) fn without_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        g.unlink(a, b);
        g
    }

    /// Merges the endpoints of edge `ab` into the smaller endpoint, removing
    /// the loop and any parallel edges.
    pub fn contract_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_edge(a, b)?;
        Ok(self.contracted(a, b))
    }

    pub(crate) fn contracted(&self, a: usize, b: usize) -> Graph {
        let (u, v) = (a.min(b), a.max(b));
        let mut g = self.clone();
        let merged = (g.adj[u] | g.adj[v]) & !bit(u) & !bit(v);
        for w in iter_bits(g.adj[v]) {
            g.adj[w] &= !bit(v);
        }
        for w in iter_bits(merged) {
            g.adj[w] |= bit(u);
        }
        g.adj[u] = merged;
        g.adj[v] = 0;
        g.without_vertex(v)
    }

    pub fn add_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(invalid(format!("loop at vertex {a}")));
        }
        if self.has_edge(a, b) {
            return Err(invalid(format!("({a},{b}) is already an edge")));
        }
        Ok(self.with_edge(a, b))
    }

    pub(crate) fn with_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        g.link(a, b);
        g
    }

    /// Adds a vertex of degree 0; it gets label `order()`.
    pub fn add_vertex(&self) -> Result<Graph> {
        if self.order() >= MAX_ORDER {
            return Err(invalid(format!("order would exceed {MAX_ORDER}")));
        }
        let mut g = self.clone();
        g.adj.push(0);
        Ok(g)
    }

    /// Replaces edge `ab` with a path through a new vertex labeled `order()`.
    pub fn subdivide_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_edge(a, b)?;
        let mut g = self.add_vertex()?;
        let x = self.order();
        g.unlink(a, b);
        g.link(a, x);
        g.link(b, x);
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let mut g = Graph::empty(n + other.order())?;
        g.adj[..n].copy_from_slice(&self.adj);
        for (i, &r) in other.adj.iter().enumerate() {
            g.adj[n + i] = r << n;
        }
        Ok(g)
    }

    /// Identifies vertex `a` of `self` with vertex `b` of `other`.
    pub fn one_vertex_union(&self, a: usize, other: &Graph, b: usize) -> Result<Graph> {
        self.check_vertex(a)?;
        other.check_vertex(b)?;
        self.glue(other, &[(b, a)])
    }

    /// Identifies `a1` with `a2` and `b1` with `b2`; an edge present on both
    /// sides survives once.
    pub fn two_vertex_union(
        &self,
        (a1, b1): (usize, usize),
        other: &Graph,
        (a2, b2): (usize, usize),
    ) -> Result<Graph> {
        self.check_vertex(a1)?;
        self.check_vertex(b1)?;
        other.check_vertex(a2)?;
        other.check_vertex(b2)?;
        if a1 == b1 || a2 == b2 {
            return Err(invalid("glued vertices must be distinct"));
        }
        self.glue(other, &[(a2, a1), (b2, b1)])
    }

    /// Glues `other` onto `self`: `(x, y)` in `ident` maps other's `x` to
    /// self's `y`; the rest of `other` is appended in order.
    pub(crate) fn glue(&self, other: &Graph, ident: &[(usize, usize)]) -> Result<Graph> {
        let n = self.order();
        let mut map = vec![usize::MAX; other.order()];
        for &(x, y) in ident {
            map[x] = y;
        }
        let mut next = n;
        for m in map.iter_mut() {
            if *m == usize::MAX {
                *m = next;
                next += 1;
            }
        }
        let mut g = Graph::empty(next)?;
        g.adj[..n].copy_from_slice(&self.adj);
        for e in other.edges() {
            g.link(map[e.u()], map[e.v()]);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({};{{", self.order())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", e.u(), e.v())?;
        }
        write!(f, "}})")
    }
}
