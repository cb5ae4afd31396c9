//! Minor-minimal counts by size, recomputed by search within an order bound
//! and compared with the catalog and with the published full-scale tables.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::Serialize;

use mmsieve::catalog::mm_catalog;
use mmsieve::enumerate::EnumOptions;
use mmsieve::{search_minor_minimal, PropertyId, SearchSpec};

use crate::{max_order, Failure, Outcome};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// NE and NC up to order 8.
    Desk,
    /// NE and NC up to order 9.
    Full,
}

/// Published MMNE / MMNC counts by size over all orders. The last entry is a
/// lower bound only.
const NE_TABLE: &[(usize, usize)] = &[(12, 1), (14, 2), (16, 2), (17, 3), (18, 11), (19, 6), (20, 2)];
const NC_TABLE: &[(usize, usize)] = &[(12, 1), (15, 1), (16, 6), (17, 14), (18, 32), (19, 25), (20, 3)];

#[derive(Serialize)]
struct Row {
    property: String,
    max_order: usize,
    scanned: u64,
    found: BTreeMap<usize, usize>,
    expected: BTreeMap<usize, usize>,
    /// Counts over all orders, where published.
    published: BTreeMap<usize, usize>,
    matches: bool,
}

fn rows_for(scale: Scale) -> Vec<(PropertyId, usize)> {
    use PropertyId::*;
    let big = if scale == Scale::Desk { 8 } else { 9 };
    vec![(AN, 6), (CAN, 6), (IA, 7), (IE, 8), (IC, 8), (NE, big), (NC, big)]
}

fn by_size(sizes: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for s in sizes {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

fn row(p: PropertyId, bound: usize, jobs: usize) -> Result<Row, Failure> {
    let spec = SearchSpec {
        options: EnumOptions {
            jobs,
            max_order: max_order()?,
        },
        ..SearchSpec::new(p, bound)
    };
    let out = search_minor_minimal(&spec)?;
    let found = by_size(out.found.iter().map(|g| g.size()));
    let expected = by_size(
        mm_catalog(p)?
            .iter()
            .filter(|e| e.graph.order() <= bound)
            .map(|e| e.graph.size()),
    );
    let table: &[(usize, usize)] = match p {
        PropertyId::NE => NE_TABLE,
        PropertyId::NC => NC_TABLE,
        _ => &[],
    };
    let published: BTreeMap<usize, usize> = table.iter().copied().collect();
    let last = table.last().map(|t| t.0);
    // Within an order bound a size class can only shrink, except the
    // open-ended last column.
    let within_published = table.is_empty()
        || found.iter().all(|(s, &n)| {
            Some(*s) == last || published.get(s).is_some_and(|&m| n <= m)
        });
    Ok(Row {
        property: p.name().to_string(),
        max_order: bound,
        scanned: out.scanned,
        matches: found == expected && within_published,
        found,
        expected,
        published,
    })
}

fn fmt_counts(m: &BTreeMap<usize, usize>) -> String {
    if m.is_empty() {
        return "-".into();
    }
    m.iter().map(|(s, n)| format!("{s}:{n}")).collect::<Vec<_>>().join(" ")
}

pub fn run(scale: Scale, jobs: usize, as_json: bool) -> Outcome {
    let mut rows = Vec::new();
    for (p, bound) in rows_for(scale) {
        rows.push(row(p, bound, jobs)?);
    }
    if as_json {
        crate::print_json(&rows);
    } else {
        println!("size:count of minor-minimal graphs up to the given order");
        for r in &rows {
            println!(
                "{} MM{} order<={} scanned {}",
                if r.matches { "ok  " } else { "DIFF" },
                r.property,
                r.max_order,
                r.scanned
            );
            println!("     found     {}", fmt_counts(&r.found));
            println!("     expected  {}", fmt_counts(&r.expected));
            if !r.published.is_empty() {
                println!("     all orders {} (last size a lower bound)", fmt_counts(&r.published));
            }
        }
    }
    Ok(rows.iter().all(|r| r.matches))
}
