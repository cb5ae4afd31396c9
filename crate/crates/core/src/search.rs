//! Searches for minor-minimal graphs over a range of orders.

use std::time::{Duration, Instant};

use crate::canon::canonical_form;
use crate::enumerate::{map_graphs, EnumFilter, EnumOptions, PlanarityFilter};
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::minimality::{is_minor_minimal_exhaustive, is_minor_minimal_upclosed, is_mmnc, is_mmne};
use crate::properties::{check, PropertyId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub property: PropertyId,
    pub min_order: usize,
    pub max_order: usize,
    pub min_degree: usize,
    pub connected: bool,
    /// `None` keeps planar graphs for AN and CAN and nonplanar ones otherwise.
    pub planarity: Option<PlanarityFilter>,
    pub max_size: Option<usize>,
    pub options: EnumOptions,
}

impl SearchSpec {
    /// Every order from 1 to `max_order`, no extra filters, sequential.
    pub fn new(property: PropertyId, max_order: usize) -> SearchSpec {
        SearchSpec {
            property,
            min_order: 1,
            max_order,
            min_degree: 0,
            connected: false,
            planarity: None,
            max_size: None,
            options: EnumOptions::default(),
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.options.jobs = jobs;
        self
    }

    pub fn planarity_filter(&self) -> PlanarityFilter {
        self.planarity.unwrap_or(if self.property.implies_nonplanar() {
            PlanarityFilter::KeepNonplanar
        } else {
            PlanarityFilter::KeepPlanar
        })
    }

    pub fn filter(&self, order: usize) -> EnumFilter {
        EnumFilter::new(order)
            .min_degree(self.min_degree)
            .connected(self.connected)
            .planarity(self.planarity_filter())
            .sizes(0, self.max_size)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderStat {
    pub order: usize,
    pub scanned: u64,
    pub found: u64,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub spec: SearchSpec,
    pub scanned: u64,
    /// Canonically labeled, sorted by canonical form.
    pub found: Vec<Graph>,
    pub per_order: Vec<OrderStat>,
    pub elapsed: Duration,
}

/// Decides minor-minimality of a graph already known to pass the filter.
fn decide(g: &Graph, p: PropertyId, max_order: usize) -> Result<bool> {
    if !check(g, p) {
        return Ok(false);
    }
    match p {
        PropertyId::NA | PropertyId::IA | PropertyId::IE | PropertyId::IC => {
            is_minor_minimal_upclosed(g, p)
        }
        PropertyId::NE => is_mmne(g),
        PropertyId::NC => is_mmnc(g),
        PropertyId::AN | PropertyId::CAN => is_minor_minimal_exhaustive(g, p, max_order),
    }
}

pub fn search_minor_minimal(spec: &SearchSpec) -> Result<SearchOutcome> {
    if spec.min_order > spec.max_order {
        return Err(invalid(format!(
            "empty order range {}..={}",
            spec.min_order, spec.max_order
        )));
    }
    let start = Instant::now();
    let mut found = Vec::new();
    let mut per_order = Vec::new();
    let mut scanned = 0;
    for order in spec.min_order..=spec.max_order {
        let results = map_graphs(&spec.filter(order), spec.options, |g| {
            decide(g, spec.property, spec.max_order)
        })?;
        let n = results.len() as u64;
        let mut hits = 0;
        for (g, r) in results {
            if r? {
                hits += 1;
                found.push(g);
            }
        }
        scanned += n;
        per_order.push(OrderStat {
            order,
            scanned: n,
            found: hits,
        });
    }
    found.sort_by_cached_key(canonical_form);
    Ok(SearchOutcome {
        spec: spec.clone(),
        scanned,
        found,
        per_order,
        elapsed: start.elapsed(),
    })
}

/// Counts the graphs a search would scan, without deciding anything.
pub fn count_candidates(spec: &SearchSpec) -> Result<Vec<OrderStat>> {
    (spec.min_order..=spec.max_order)
        .map(|order| {
            let n = crate::enumerate::count(&spec.filter(order), spec.options)?;
            Ok(OrderStat {
                order,
                scanned: n,
                found: 0,
            })
        })
        .collect()
}
