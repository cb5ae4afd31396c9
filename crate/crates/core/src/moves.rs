//! Delta-Y and Y-Delta moves, and exploration of the families they generate.

use std::collections::HashSet;
use std::time::Instant;

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{invalid, Result};
use crate::graph::{iter_bits, Graph};
use crate::io::report::{FoundGraph, SearchReport, SCHEMA_VERSION};
use crate::minimality::{is_mmnc, is_mmne};
use crate::planarity::is_planar;
use crate::properties::{check, PropertyId};

/// Three mutually adjacent vertices, sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triangle {
    pub fn new(g: &Graph, a: usize, b: usize, c: usize) -> Result<Triangle> {
        let mut v = [a, b, c];
        v.sort_unstable();
        let t = Triangle {
            a: v[0],
            b: v[1],
            c: v[2],
        };
        if v[0] == v[1] || v[1] == v[2] || !t.edges().iter().all(|&(x, y)| g.has_edge(x, y)) {
            return Err(invalid(format!("({a},{b},{c}) is not a triangle")));
        }
        Ok(t)
    }

    fn edges(&self) -> [(usize, usize); 3] {
        [(self.a, self.b), (self.a, self.c), (self.b, self.c)]
    }
}

/// All triangles in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for e in g.edges() {
        let (a, b) = (e.u(), e.v());
        let common = g.neighbor_mask(a) & g.neighbor_mask(b) & crate::graph::above(b);
        for c in iter_bits(common) {
            out.push(Triangle { a, b, c });
        }
    }
    out
}

/// Replaces the triangle's edges with a new vertex (label `order()`) joined
/// to its three corners.
pub fn triangle_to_star(g: &Graph, t: Triangle) -> Result<Graph> {
    let t = Triangle::new(g, t.a, t.b, t.c)?;
    let mut h = g.add_vertex()?;
    let v = g.order();
    for (x, y) in t.edges() {
        h.unlink(x, y);
    }
    for x in [t.a, t.b, t.c] {
        h.link(x, v);
    }
    Ok(h)
}

/// Deletes a degree-3 vertex and makes its neighbors pairwise adjacent;
/// already-adjacent pairs keep a single edge.
pub fn star_to_triangle(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.order() {
        return Err(invalid(format!("vertex {v} out of range")));
    }
    if g.degree(v) != 3 {
        return Err(invalid(format!("vertex {v} has degree {}, not 3", g.degree(v))));
    }
    let nb: Vec<usize> = g.neighbors(v).collect();
    let mut h = g.clone();
    for i in 0..3 {
        for j in i + 1..3 {
            h.link(nb[i], nb[j]);
        }
    }
    Ok(h.without_vertex(v))
}

/// For an NE graph `g`, whether the Delta-Y move on `t` gives an NE graph:
/// that holds exactly when deleting any one of the three new edges leaves the
/// result nonplanar.
pub fn ne_preserved_after_ty(g: &Graph, t: Triangle) -> Result<bool> {
    if !check(g, PropertyId::NE) {
        return Err(invalid("graph is not NE"));
    }
    let h = triangle_to_star(g, t)?;
    let v = g.order();
    Ok([t.a, t.b, t.c]
        .iter()
        .all(|&x| !is_planar(&h.without_edge(x, v))))
}

/// Which moves an exploration may apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveSet {
    pub delta_y: bool,
    pub y_delta: bool,
}

impl MoveSet {
    pub const BOTH: MoveSet = MoveSet {
        delta_y: true,
        y_delta: true,
    };
}

impl std::str::FromStr for MoveSet {
    type Err = crate::error::Error;

    /// Comma-separated `ty` (Delta-Y) and `yt` (Y-Delta).
    fn from_str(s: &str) -> Result<MoveSet> {
        let mut m = MoveSet {
            delta_y: false,
            y_delta: false,
        };
        for part in s.split(',').map(str::trim) {
            match part.to_ascii_lowercase().as_str() {
                "ty" => m.delta_y = true,
                "yt" => m.y_delta = true,
                _ => return Err(invalid(format!("unknown move {part:?}; expected ty or yt"))),
            }
        }
        Ok(m)
    }
}

/// Every graph one allowed move away from `g`.
pub fn neighbors_under_moves(g: &Graph, moves: MoveSet) -> Vec<Graph> {
    let mut out = Vec::new();
    if moves.delta_y {
        for t in triangles(g) {
            out.push(triangle_to_star(g, t).expect("listed triangles are triangles"));
        }
    }
    if moves.y_delta {
        for v in 0..g.order() {
            if g.degree(v) == 3 {
                out.push(star_to_triangle(g, v).expect("degree checked"));
            }
        }
    }
    out
}

/// Closes `seeds` under both moves up to `depth` steps, then reports the
/// members that are minor-minimal for `p` (NE or NC).
pub fn explore_family(seeds: &[Graph], p: PropertyId, depth: usize) -> Result<SearchReport> {
    explore_family_with(seeds, p, depth, MoveSet::BOTH, 0)
}

/// As [`explore_family`], restricted to `moves`, deciding members on `jobs`
/// workers (0 = all cores).
pub fn explore_family_with(
    seeds: &[Graph],
    p: PropertyId,
    depth: usize,
    moves: MoveSet,
    jobs: usize,
) -> Result<SearchReport> {
    if depth == 0 {
        return Err(invalid("depth must be at least 1"));
    }
    let decide: fn(&Graph) -> Result<bool> = match p {
        PropertyId::NE => is_mmne,
        PropertyId::NC => is_mmnc,
        _ => return Err(invalid(format!("family exploration supports NE and NC, not {p}"))),
    };
    let start = Instant::now();
    let mut seen = HashSet::new();
    let mut members = Vec::new();
    let mut frontier = Vec::new();
    for g in seeds {
        let g = canonical_graph(g);
        if seen.insert(canonical_form(&g)) {
            frontier.push(g.clone());
            members.push(g);
        }
    }
    for _ in 0..depth {
        let mut next = Vec::new();
        for g in &frontier {
            for h in neighbors_under_moves(g, moves) {
                let h = canonical_graph(&h);
                if seen.insert(canonical_form(&h)) {
                    next.push(h.clone());
                    members.push(h);
                }
            }
        }
        frontier = next;
    }
    let verdicts = crate::par::map(&members, jobs, decide);
    let mut found = Vec::new();
    for (g, r) in members.iter().zip(verdicts) {
        if r? {
            found.push(g.clone());
        }
    }
    found.sort_by_cached_key(canonical_form);
    Ok(SearchReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        property: p.name().to_string(),
        mode: format!("family depth {depth}"),
        filter: None,
        scanned: members.len() as u64,
        per_order: Vec::new(),
        found: found.iter().map(FoundGraph::new).collect(),
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
