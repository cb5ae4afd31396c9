//! Constructions of the minor-minimal not apex (MMNA) graphs and the
//! connectivity-two gluings shared by the NE and NC lists.
//!
//! Every family is generated by enumerating all attachment choices, removing
//! isomorphic duplicates, and checking the result against the expected count.

use std::collections::HashSet;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minimality::is_minor_minimal_upclosed;
use crate::properties::PropertyId;

/// A Kuratowski graph or a Kuratowski graph minus an edge, with two
/// designated vertices `a`, `b` used for gluing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    K5,
    /// K3,3 with `a` and `b` in different parts (adjacent).
    K33Across,
    /// K3,3 with `a` and `b` in the same part.
    K33Same,
    /// K5 minus the edge `ab`.
    K5MinusE,
    /// K3,3 minus the edge `ab`.
    K33MinusE,
}

impl Block {
    pub fn build(self) -> (Graph, usize, usize) {
        let k5 = || Graph::complete(5).expect("small");
        let k33 = || Graph::complete_bipartite(3, 3).expect("small");
        match self {
            Block::K5 => (k5(), 0, 1),
            Block::K33Across => (k33(), 0, 3),
            Block::K33Same => (k33(), 0, 1),
            Block::K5MinusE => (k5().without_edge(0, 1), 0, 1),
            Block::K33MinusE => (k33().without_edge(0, 3), 0, 3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Block::K5 => "K5",
            Block::K33Across | Block::K33Same => "K33",
            Block::K5MinusE => "K5-e",
            Block::K33MinusE => "K33-e",
        }
    }
}

/// Gluing with the vertex map of `other` into the result.
fn glue(base: &Graph, other: &Graph, ident: &[(usize, usize)]) -> (Graph, Vec<usize>) {
    let g = base.glue(other, ident).expect("orders stay small");
    let mut map = vec![usize::MAX; other.order()];
    for &(x, y) in ident {
        map[x] = y;
    }
    let mut next = base.order();
    for m in map.iter_mut() {
        if *m == usize::MAX {
            *m = next;
            next += 1;
        }
    }
    (g, map)
}

/// Two blocks glued along their designated pairs; a shared edge survives once.
pub fn two_sum(x: Block, y: Block) -> Graph {
    let (gx, a, b) = x.build();
    let (gy, c, d) = y.build();
    gx.two_vertex_union((a, b), &gy, (c, d)).expect("small")
}

fn disjoint(x: &Graph, y: &Graph) -> Graph {
    x.disjoint_union(y).expect("small")
}

fn with_edges(mut g: Graph, edges: &[(usize, usize)]) -> Graph {
    for &(u, v) in edges {
        g.link(u, v);
    }
    g
}

/// Keeps the first graph of each isomorphism class.
fn dedup(candidates: Vec<(String, Graph)>) -> Vec<(String, Graph)> {
    let mut seen = HashSet::new();
    candidates
        .into_iter()
        .filter(|(_, g)| seen.insert(canonical_form(g)))
        .collect()
}

/// Deduplicates, confirms every member is MMNA and the count is as expected,
/// then numbers the members `prefix-1`, `prefix-2`, ...
fn finish(
    prefix: &str,
    candidates: Vec<(String, Graph)>,
    expected: usize,
) -> Result<Vec<(String, String, Graph)>> {
    let members = dedup(candidates);
    if members.len() != expected {
        return Err(Error::Consistency(format!(
            "family {prefix} produced {} graphs, expected {expected}",
            members.len()
        )));
    }
    let mut out = Vec::new();
    for (i, (desc, g)) in members.into_iter().enumerate() {
        if !is_minor_minimal_upclosed(&g, PropertyId::NA)? {
            return Err(Error::Consistency(format!(
                "family {prefix} member {desc} is not minor-minimal not apex"
            )));
        }
        out.push((format!("{prefix}-{}", i + 1), desc, g));
    }
    Ok(out)
}

fn kuratowski() -> [(Graph, &'static str); 2] {
    [
        (Graph::complete(5).expect("small"), "K5"),
        (Graph::complete_bipartite(3, 3).expect("small"), "K33"),
    ]
}

/// Disjoint unions of two Kuratowski graphs.
pub fn na_disconnected() -> Result<Vec<(String, String, Graph)>> {
    let k = kuratowski();
    let mut c = Vec::new();
    for i in 0..2 {
        for j in i..2 {
            c.push((format!("{}|{}", k[i].1, k[j].1), disjoint(&k[i].0, &k[j].0)));
        }
    }
    finish("na-disc", c, 3)
}

/// Blocks glued on the three sides of `abc` with `ab` an edge. A side that is
/// an edge carries K5 or K3,3 across; a side that is not carries K3,3 with
/// both ends in one part.
pub fn na_ab_edge() -> Result<Vec<(String, String, Graph)>> {
    let present = [Block::K5, Block::K33Across];
    let mut c = Vec::new();
    for &x in &present {
        for ac_edge in [false, true] {
            for bc_edge in [false, true] {
                let ys: &[Block] = if ac_edge { &present } else { &[Block::K33Same] };
                let zs: &[Block] = if bc_edge { &present } else { &[Block::K33Same] };
                for &y in ys {
                    for &z in zs {
                        let (gx, a, b) = x.build();
                        let (gy, ya, yc) = y.build();
                        let (g1, map) = glue(&gx, &gy, &[(ya, a)]);
                        let cv = map[yc];
                        let (gz, zb, zc) = z.build();
                        let (g, _) = glue(&g1, &gz, &[(zb, b), (zc, cv)]);
                        let desc = format!(
                            "ab:{} ac:{}{} bc:{}{}",
                            x.name(),
                            y.name(),
                            if ac_edge { "" } else { "(same part)" },
                            z.name(),
                            if bc_edge { "" } else { "(same part)" }
                        );
                        c.push((desc, g));
                    }
                }
            }
        }
    }
    finish("na-ab", c, 9)
}

/// Blocks `X` on `{a,b}` and `Y` on `{d,e}`, each missing its designated
/// edge, joined through a new vertex `c` by `ac, ad, bc, be, cd, ce`.
pub fn na_bowtie() -> Result<Vec<(String, String, Graph)>> {
    let opts = [Block::K5MinusE, Block::K33MinusE];
    let mut c = Vec::new();
    for &x in &opts {
        for &y in &opts {
            let (gx, a, b) = x.build();
            let (gy, yd, ye) = y.build();
            let n = gx.order();
            let (d, e) = (n + yd, n + ye);
            let g = disjoint(&gx, &gy).add_vertex().expect("small");
            let cv = g.order() - 1;
            let g = with_edges(g, &[(a, cv), (a, d), (b, cv), (b, e), (cv, d), (cv, e)]);
            c.push((format!("{}|{}", x.name(), y.name()), g));
        }
    }
    finish("na-bowtie", c, 3)
}

/// Blocks on `{a,b}` and `{c,d}` joined by `ac, ad, bc, bd`; not both K3,3.
pub fn na_222() -> Result<Vec<(String, String, Graph)>> {
    let opts = [Block::K33Same, Block::K33MinusE, Block::K5MinusE];
    let mut c = Vec::new();
    for &x in &opts {
        for &y in &opts {
            if x == Block::K33Same && y == Block::K33Same {
                continue;
            }
            let (gx, a, b) = x.build();
            let (gy, yc, yd) = y.build();
            let n = gx.order();
            let (cv, d) = (n + yc, n + yd);
            let g = with_edges(disjoint(&gx, &gy), &[(a, cv), (a, d), (b, cv), (b, d)]);
            c.push((format!("{}|{}", x.name(), y.name()), g));
        }
    }
    finish("na-222", c, 5)
}

/// `G1` (K5-e or K3,3-e on `{a,b}`) beside a Kuratowski graph `G2`, with `a`
/// joined to `v1, v2` and `b` to `v3, v4`, all four distinct.
pub fn na_220() -> Result<Vec<(String, String, Graph)>> {
    let mut c = Vec::new();
    for x in [Block::K5MinusE, Block::K33MinusE] {
        for (g2, name) in kuratowski() {
            let (gx, a, b) = x.build();
            let n = gx.order();
            let m = g2.order();
            let base = disjoint(&gx, &g2);
            for v1 in 0..m {
                for v2 in v1 + 1..m {
                    for v3 in 0..m {
                        for v4 in v3 + 1..m {
                            if [v1, v2].contains(&v3) || [v1, v2].contains(&v4) {
                                continue;
                            }
                            let g = with_edges(
                                base.clone(),
                                &[(a, n + v1), (a, n + v2), (b, n + v3), (b, n + v4)],
                            );
                            c.push((format!("{}|{name}", x.name()), g));
                        }
                    }
                }
            }
        }
    }
    finish("na-220", c, 8)
}

/// `G1` (K5-e or K3,3-e on `{a,b}`) beside a Kuratowski graph `G2`, with `a`
/// joined to `c, v1` and `b` to `c, v2` for distinct `c, v1, v2` in `G2`.
pub fn na_221() -> Result<Vec<(String, String, Graph)>> {
    let mut c = Vec::new();
    for x in [Block::K5MinusE, Block::K33MinusE] {
        for (g2, name) in kuratowski() {
            let (gx, a, b) = x.build();
            let n = gx.order();
            let m = g2.order();
            let base = disjoint(&gx, &g2);
            for cv in 0..m {
                for v1 in 0..m {
                    for v2 in 0..m {
                        if cv == v1 || cv == v2 || v1 == v2 {
                            continue;
                        }
                        let g = with_edges(
                            base.clone(),
                            &[(a, n + cv), (a, n + v1), (b, n + cv), (b, n + v2)],
                        );
                        c.push((format!("{}|{name}", x.name()), g));
                    }
                }
            }
        }
    }
    finish("na-221", c, 8)
}

/// All 36 MMNA graphs: 3 disconnected, 9 with `ab` an edge, 3 bowties and
/// 5 + 8 + 8 of types (2,2,2), (2,2,0) and (2,2,1).
pub fn mmna_graphs() -> Result<Vec<(String, String, Graph)>> {
    let mut all = Vec::new();
    all.extend(na_disconnected()?);
    all.extend(na_ab_edge()?);
    all.extend(na_bowtie()?);
    all.extend(na_222()?);
    all.extend(na_220()?);
    all.extend(na_221()?);
    let distinct: HashSet<_> = all.iter().map(|(_, _, g)| canonical_form(g)).collect();
    if distinct.len() != all.len() {
        return Err(Error::Consistency(
            "two MMNA families share an isomorphism class".into(),
        ));
    }
    Ok(all)
}

/// The six connectivity-two gluings of Kuratowski blocks that are both MMNE
/// and MMNC.
pub fn ne_nc_two_sums() -> Vec<(String, Graph)> {
    use Block::*;
    [
        (K33Same, K33Same),
        (K5MinusE, K5MinusE),
        (K5MinusE, K33MinusE),
        (K33MinusE, K33MinusE),
        (K5MinusE, K33Same),
        (K33MinusE, K33Same),
    ]
    .into_iter()
    .map(|(x, y)| (format!("{}:{}", x.name(), y.name()), two_sum(x, y)))
    .collect()
}
