//! Isomorph-free generation of graphs of a given order by canonical
//! augmentation.
//!
//! A graph's canonical parent is obtained by deleting the minimum-degree
//! vertex that comes last in its canonical labeling. Each parent is extended
//! by one new vertex in every possible way, and a child is kept only when its
//! new vertex lies in the orbit of that canonical deletion vertex. Every
//! isomorphism class therefore arises from exactly one parent, and duplicates
//! only need to be removed among the children of a single parent.

use std::collections::HashSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling, same_orbit, CanonicalForm};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::par;
use crate::planarity::is_planar;

/// Largest order enumerated unless the caller raises the cap.
pub const DEFAULT_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanarityFilter {
    KeepPlanar,
    KeepNonplanar,
    KeepAll,
}

impl PlanarityFilter {
    pub fn name(self) -> &'static str {
        match self {
            PlanarityFilter::KeepPlanar => "keep-planar",
            PlanarityFilter::KeepNonplanar => "keep-nonplanar",
            PlanarityFilter::KeepAll => "keep-all",
        }
    }

    fn accepts(self, g: &Graph) -> bool {
        match self {
            PlanarityFilter::KeepAll => true,
            PlanarityFilter::KeepPlanar => is_planar(g),
            PlanarityFilter::KeepNonplanar => !is_planar(g),
        }
    }
}

impl FromStr for PlanarityFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "keep-planar" | "planar" => Ok(PlanarityFilter::KeepPlanar),
            "keep-nonplanar" | "nonplanar" => Ok(PlanarityFilter::KeepNonplanar),
            "keep-all" | "all" => Ok(PlanarityFilter::KeepAll),
            _ => Err(invalid(format!("unknown planarity filter {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumFilter {
    pub order: usize,
    pub min_degree: usize,
    pub min_size: usize,
    pub max_size: Option<usize>,
    pub connected: bool,
    pub planarity: PlanarityFilter,
}

impl EnumFilter {
    /// All graphs of the given order.
    pub fn new(order: usize) -> EnumFilter {
        EnumFilter {
            order,
            min_degree: 0,
            min_size: 0,
            max_size: None,
            connected: false,
            planarity: PlanarityFilter::KeepAll,
        }
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected = yes;
        self
    }

    pub fn planarity(mut self, p: PlanarityFilter) -> Self {
        self.planarity = p;
        self
    }

    pub fn sizes(mut self, min: usize, max: Option<usize>) -> Self {
        self.min_size = min;
        self.max_size = max;
        self
    }

    fn max_size_or_all(&self) -> usize {
        self.max_size
            .unwrap_or(self.order * self.order.saturating_sub(1) / 2)
    }

    fn accepts(&self, g: &Graph) -> bool {
        let m = g.size();
        m >= self.min_size
            && m <= self.max_size_or_all()
            && (!self.connected || g.is_connected())
            && g.min_degree().map_or(true, |d| d >= self.min_degree)
            && self.planarity.accepts(g)
    }
}

/// Execution settings shared by enumeration and search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Worker threads; 0 means one per core, 1 runs sequentially.
    pub jobs: usize,
    pub max_order: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            jobs: 1,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// Pruning bounds valid at an intermediate order.
#[derive(Clone, Copy)]
struct Bounds {
    min_degree: usize,
    max_size: usize,
    planar_only: bool,
}

impl EnumFilter {
    /// Deleting a minimum-degree vertex lowers the minimum degree by at most
    /// one and never adds edges; planarity survives vertex deletion.
    fn bounds_at(&self, order: usize) -> Bounds {
        Bounds {
            min_degree: self.min_degree.saturating_sub(self.order - order),
            max_size: self.max_size_or_all(),
            planar_only: self.planarity == PlanarityFilter::KeepPlanar,
        }
    }
}

/// Canonical children of `parent`: one new vertex of minimum degree at least
/// `bounds.min_degree`. Returned canonically labeled, sorted by canonical form.
fn children(parent: &Graph, bounds: Bounds) -> Vec<(CanonicalForm, Graph)> {
    let n = parent.order();
    let degs = parent.degrees();
    let base = parent.size();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..(1u64 << n) {
        let k = s.count_ones() as usize;
        if k < bounds.min_degree || base + k > bounds.max_size {
            continue;
        }
        // The new vertex must have minimum degree.
        if (0..n).any(|u| degs[u] + (((s >> u) & 1) as usize) < k) {
            continue;
        }
        let mut g = parent.add_vertex().expect("order checked by caller");
        for u in crate::graph::iter_bits(s) {
            g.link(u, n);
        }
        if bounds.planar_only && !is_planar(&g) {
            continue;
        }
        let lab = canonical_labeling(&g);
        let last = (0..=n)
            .filter(|&v| g.degree(v) == k)
            .max_by_key(|&v| lab.perm[v])
            .expect("new vertex has minimum degree");
        if last != n && (lab.root_cells[last] != lab.root_cells[n] || !same_orbit(&g, n, last)) {
            continue;
        }
        if seen.insert(lab.form.clone()) {
            out.push((lab.form.clone(), lab.apply(&g)));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn check_order(filter: &EnumFilter, opts: EnumOptions) -> Result<()> {
    if filter.order > opts.max_order {
        return Err(Error::ResourceLimit(format!(
            "order {} exceeds the enumeration cap of {}",
            filter.order, opts.max_order
        )));
    }
    if filter.order > crate::graph::MAX_ORDER {
        return Err(invalid("order exceeds 64"));
    }
    Ok(())
}

/// Canonical representatives of order `order`, pruned with `filter`'s bounds.
fn level(filter: &EnumFilter, order: usize, jobs: usize) -> Vec<Graph> {
    let mut cur = vec![Graph::empty(0).expect("empty graph")];
    for k in 1..=order {
        let bounds = filter.bounds_at(k);
        let next = par::map(&cur, jobs, |p| children(p, bounds));
        cur = next.into_iter().flatten().map(|(_, g)| g).collect();
    }
    cur
}

/// Parents at order `filter.order - 1`. Parent `i` belongs to partition
/// `i % parts`, which makes partitions deterministic and restartable.
fn parents(filter: &EnumFilter, jobs: usize) -> Vec<Graph> {
    level(filter, filter.order - 1, jobs)
}

/// Canonically labeled graphs of order `filter.order` accepted by `filter`,
/// sorted by parent and then by canonical form. Deterministic for any `jobs`.
pub fn enumerate(filter: &EnumFilter, opts: EnumOptions) -> Result<Vec<Graph>> {
    enumerate_partition(filter, 0, 1, opts)
}

/// The part of [`enumerate`] generated from parents with index `part` mod `parts`.
pub fn enumerate_partition(
    filter: &EnumFilter,
    part: usize,
    parts: usize,
    opts: EnumOptions,
) -> Result<Vec<Graph>> {
    if parts == 0 || part >= parts {
        return Err(invalid(format!("partition {part} of {parts} is out of range")));
    }
    let mut out = Vec::new();
    for_each_batch(filter, part, parts, opts, |batch| {
        out.extend(batch.iter().cloned());
        Ok(())
    })?;
    Ok(out)
}

/// Number of graphs [`enumerate`] would return.
pub fn count(filter: &EnumFilter, opts: EnumOptions) -> Result<u64> {
    let mut total = 0u64;
    for_each_batch(filter, 0, 1, opts, |batch| {
        total += batch.len() as u64;
        Ok(())
    })?;
    Ok(total)
}

/// Generates the accepted graphs and maps each through `f` in parallel;
/// results come back in enumeration order.
pub fn map_graphs<R, F>(filter: &EnumFilter, opts: EnumOptions, f: F) -> Result<Vec<(Graph, R)>>
where
    R: Send,
    F: Fn(&Graph) -> R + Sync + Send,
{
    check_order(filter, opts)?;
    if filter.order == 0 {
        let g = Graph::empty(0)?;
        return Ok(if filter.accepts(&g) {
            let r = f(&g);
            vec![(g, r)]
        } else {
            Vec::new()
        });
    }
    let bounds = filter.bounds_at(filter.order);
    let ps = parents(filter, opts.jobs);
    let per_parent = par::map(&ps, opts.jobs, |p| {
        children(p, bounds)
            .into_iter()
            .filter(|(_, g)| filter.accepts(g))
            .map(|(_, g)| {
                let r = f(&g);
                (g, r)
            })
            .collect::<Vec<_>>()
    });
    Ok(per_parent.into_iter().flatten().collect())
}

fn for_each_batch(
    filter: &EnumFilter,
    part: usize,
    parts: usize,
    opts: EnumOptions,
    mut sink: impl FnMut(&[Graph]) -> Result<()>,
) -> Result<()> {
    check_order(filter, opts)?;
    if filter.order == 0 {
        let g = Graph::empty(0)?;
        if part == 0 && filter.accepts(&g) {
            sink(&[g])?;
        }
        return Ok(());
    }
    let bounds = filter.bounds_at(filter.order);
    let ps: Vec<Graph> = parents(filter, opts.jobs)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| i % parts == part)
        .map(|(_, p)| p)
        .collect();
    let per_parent = par::map(&ps, opts.jobs, |p| {
        children(p, bounds)
            .into_iter()
            .map(|(_, g)| g)
            .filter(|g| filter.accepts(g))
            .collect::<Vec<_>>()
    });
    for batch in per_parent {
        sink(&batch)?;
    }
    Ok(())
}
