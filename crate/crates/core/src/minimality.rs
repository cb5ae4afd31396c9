//! Deciders for minor-minimality.
//!
//! Three strategies:
//! - NA, IA, IE and IC are inherited by every graph having a minor with the
//!   property, so checking the one-step minors is enough;
//! - NE and NC use the deletion/contraction sieve (apex-edge graphs are closed
//!   under deletion, contraction-apex graphs under contraction);
//! - AN and CAN, and cross-checks of everything else, walk the full minor set.

use std::collections::HashSet;

use crate::canon::{canonical_form, canonical_labeling, CanonicalForm};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::planarity::is_planar;
use crate::properties::{check, PropertyId};

/// Default bound on the number of distinct graphs a sieve may visit.
pub const DEFAULT_SIEVE_CAP: usize = 5_000_000;
/// Default order bound for the exhaustive oracle.
pub const DEFAULT_EXHAUSTIVE_MAX_ORDER: usize = 10;

/// Every graph one deletion or contraction away from `g`, in the order
/// edge deletions, edge contractions, vertex deletions.
fn raw_one_step(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let edges = g.edges();
    let dels = edges
        .clone()
        .into_iter()
        .map(move |e| g.without_edge(e.u(), e.v()));
    let cons = edges.into_iter().map(move |e| g.contracted(e.u(), e.v()));
    let verts = (0..g.order()).map(move |v| g.without_vertex(v));
    dels.chain(cons).chain(verts)
}

/// One-step minors of `g`, one canonically labeled representative per
/// isomorphism class, sorted by canonical form.
pub fn one_step_minors(g: &Graph) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out: Vec<(CanonicalForm, Graph)> = Vec::new();
    for m in raw_one_step(g) {
        let lab = canonical_labeling(&m);
        if seen.insert(lab.form.clone()) {
            out.push((lab.form.clone(), lab.apply(&m)));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, m)| m).collect()
}

/// Minor-minimality for properties inherited from minors (NA, IA, IE, IC).
pub fn is_minor_minimal_upclosed(g: &Graph, p: PropertyId) -> Result<bool> {
    if !matches!(
        p,
        PropertyId::NA | PropertyId::IA | PropertyId::IE | PropertyId::IC
    ) {
        return Err(invalid(format!(
            "{p} is not inherited from minors; the one-step test does not apply"
        )));
    }
    Ok(check(g, p) && raw_one_step(g).all(|m| !check(&m, p)))
}

/// Limits for the sieve deciders.
#[derive(Debug, Clone, Copy)]
pub struct SieveLimits {
    pub max_visited: usize,
}

impl Default for SieveLimits {
    fn default() -> Self {
        SieveLimits {
            max_visited: DEFAULT_SIEVE_CAP,
        }
    }
}

/// Minor-minimal not edge apex, with default limits.
pub fn is_mmne(g: &Graph) -> Result<bool> {
    is_mmne_with(g, SieveLimits::default())
}

/// Minor-minimal not contraction apex, with default limits.
pub fn is_mmnc(g: &Graph) -> Result<bool> {
    is_mmnc_with(g, SieveLimits::default())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Delete,
    Contract,
}

/// MMNE: seed with `g` and every `g - e`, then close under contraction.
pub fn is_mmne_with(g: &Graph, limits: SieveLimits) -> Result<bool> {
    sieve(g, PropertyId::NE, Step::Delete, Step::Contract, limits)
}

/// MMNC: seed with `g` and every `g / e`, then close under deletion.
pub fn is_mmnc_with(g: &Graph, limits: SieveLimits) -> Result<bool> {
    sieve(g, PropertyId::NC, Step::Contract, Step::Delete, limits)
}

fn apply(g: &Graph, step: Step, u: usize, v: usize) -> Graph {
    match step {
        Step::Delete => g.without_edge(u, v),
        Step::Contract => g.contracted(u, v),
    }
}

fn sieve(g: &Graph, p: PropertyId, seed: Step, close: Step, limits: SieveLimits) -> Result<bool> {
    if !check(g, p) {
        return Ok(false);
    }
    // Vertex deletions are included here so graphs with isolated vertices
    // are judged correctly.
    if raw_one_step(g).any(|m| check(&m, p)) {
        return Ok(false);
    }
    let mut visited: HashSet<CanonicalForm> = HashSet::new();
    let mut frontier = Vec::new();
    visited.insert(canonical_form(g));
    frontier.push(g.clone());
    for e in g.edges() {
        let m = apply(g, seed, e.u(), e.v());
        if !is_planar(&m) && visited.insert(canonical_form(&m)) {
            frontier.push(m);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for e in h.edges() {
                let m = apply(h, close, e.u(), e.v());
                if is_planar(&m) {
                    continue;
                }
                if visited.insert(canonical_form(&m)) {
                    if check(&m, p) {
                        return Ok(false);
                    }
                    next.push(m);
                }
            }
            if visited.len() > limits.max_visited {
                return Err(Error::ResourceLimit(format!(
                    "{p} sieve visited more than {} graphs",
                    limits.max_visited
                )));
            }
        }
        frontier = next;
    }
    Ok(true)
}

/// Minor-minimality by walking every proper minor of `g`. Nonplanar-only
/// properties skip planar minors, whose own minors are planar too.
pub fn is_minor_minimal_exhaustive(g: &Graph, p: PropertyId, max_order: usize) -> Result<bool> {
    if g.order() > max_order {
        return Err(Error::ResourceLimit(format!(
            "exhaustive check limited to order {max_order}, got {}",
            g.order()
        )));
    }
    if !check(g, p) {
        return Ok(false);
    }
    let prune = p.implies_nonplanar();
    let mut visited = HashSet::new();
    visited.insert(canonical_form(g));
    let mut stack = vec![g.clone()];
    while let Some(h) = stack.pop() {
        for m in raw_one_step(&h) {
            if prune && is_planar(&m) {
                continue;
            }
            if visited.insert(canonical_form(&m)) {
                if check(&m, p) {
                    return Ok(false);
                }
                stack.push(m);
            }
        }
    }
    Ok(true)
}

/// Minor-minimality with the preferred strategy for each property.
pub fn is_minor_minimal(g: &Graph, p: PropertyId) -> Result<bool> {
    match p {
        PropertyId::NA | PropertyId::IA | PropertyId::IE | PropertyId::IC => {
            is_minor_minimal_upclosed(g, p)
        }
        PropertyId::NE => is_mmne(g),
        PropertyId::NC => is_mmnc(g),
        PropertyId::AN | PropertyId::CAN => {
            is_minor_minimal_exhaustive(g, p, DEFAULT_EXHAUSTIVE_MAX_ORDER.max(g.order()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn one_step_minors_of_k5() {
        let k5 = Graph::complete(5).unwrap();
        let ms = one_step_minors(&k5);
        assert_eq!(ms.len(), 2);
        let k5e = k5.delete_edge(0, 1).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert!(ms.iter().any(|m| is_isomorphic(m, &k5e)));
        assert!(ms.iter().any(|m| is_isomorphic(m, &k4)));
    }

    #[test]
    fn upclosed_rejects_other_properties() {
        let k5 = Graph::complete(5).unwrap();
        assert!(is_minor_minimal_upclosed(&k5, PropertyId::NE).is_err());
        assert!(is_minor_minimal_upclosed(&k5, PropertyId::AN).is_err());
    }

    #[test]
    fn k6_minus_edge_is_mmne() {
        let g = Graph::complete(6).unwrap().delete_edge(0, 1).unwrap();
        assert!(is_mmne(&g).unwrap());
        assert!(!is_mmne(&Graph::complete(6).unwrap()).unwrap());
        assert!(is_mmnc(&Graph::complete(6).unwrap()).unwrap());
    }

    #[test]
    fn isolated_vertex_breaks_minimality() {
        let g = Graph::complete(6)
            .unwrap()
            .delete_edge(0, 1)
            .unwrap()
            .add_vertex()
            .unwrap();
        assert!(!is_mmne(&g).unwrap());
        assert!(!is_minor_minimal_exhaustive(&g, PropertyId::NE, 10).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::complete(6).unwrap().delete_edge(0, 1).unwrap();
        let r = is_mmne_with(&g, SieveLimits { max_visited: 1 });
        assert!(matches!(r, Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn exhaustive_order_bound() {
        let g = Graph::complete(6).unwrap();
        assert!(matches!(
            is_minor_minimal_exhaustive(&g, PropertyId::NC, 5),
            Err(Error::ResourceLimit(_))
        ));
    }
}
