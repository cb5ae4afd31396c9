//! JSON reports for searches.

use serde::{Deserialize, Serialize};

use crate::enumerate::PlanarityFilter;
use crate::graph::Graph;
use crate::search::SearchOutcome;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterSummary {
    pub min_order: usize,
    pub max_order: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub planarity: PlanarityFilter,
    pub max_size: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundGraph {
    pub order: usize,
    pub size: usize,
    pub graph6: String,
    pub edge_list: String,
}

impl FoundGraph {
    pub fn new(g: &Graph) -> FoundGraph {
        FoundGraph {
            order: g.order(),
            size: g.size(),
            graph6: super::graph6::encode(g),
            edge_list: super::edgelist::emit(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub order: usize,
    pub scanned: u64,
    pub found: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub property: String,
    /// `search` for enumeration runs, `family depth N` for move exploration.
    pub mode: String,
    pub filter: Option<FilterSummary>,
    pub scanned: u64,
    pub per_order: Vec<OrderSummary>,
    pub found: Vec<FoundGraph>,
    pub wall_time_ms: u64,
}

impl SearchReport {
    pub fn new(out: &SearchOutcome) -> SearchReport {
        let s = &out.spec;
        SearchReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            property: s.property.name().to_string(),
            mode: "search".to_string(),
            filter: Some(FilterSummary {
                min_order: s.min_order,
                max_order: s.max_order,
                min_degree: s.min_degree,
                connected: s.connected,
                planarity: s.planarity_filter(),
                max_size: s.max_size,
            }),
            scanned: out.scanned,
            per_order: out
                .per_order
                .iter()
                .map(|o| OrderSummary {
                    order: o.order,
                    scanned: o.scanned,
                    found: o.found,
                })
                .collect(),
            found: out.found.iter().map(FoundGraph::new).collect(),
            wall_time_ms: out.elapsed.as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
