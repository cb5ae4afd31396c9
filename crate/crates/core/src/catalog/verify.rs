//! Re-derives every catalog claim and the structural facts about the lists.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{catalog, expected_count, nc_not_closed, ne_not_closed, CatalogEntry, Claim};
use crate::canon::{canonical_form, CanonicalForm};
use crate::minimality::is_minor_minimal;
use crate::par;
use crate::planarity::is_planar;
use crate::properties::{check, find_apex_edge, PropertyId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn result(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn verify_claims(e: &CatalogEntry) -> Vec<CheckResult> {
    e.claims
        .iter()
        .map(|c| match *c {
            Claim::Has(p) => {
                let ok = check(&e.graph, p);
                result(format!("{} has {p}", e.id), ok, if ok { "" } else { "property fails" })
            }
            Claim::MinorMinimal(p) => match is_minor_minimal(&e.graph, p) {
                Ok(ok) => result(
                    format!("{} is minor-minimal {p}", e.id),
                    ok,
                    if ok { "" } else { "a proper minor has the property" },
                ),
                Err(err) => result(format!("{} is minor-minimal {p}", e.id), false, err.to_string()),
            },
        })
        .collect()
}

fn forms(entries: &[&CatalogEntry]) -> BTreeSet<CanonicalForm> {
    entries.iter().map(|e| canonical_form(&e.graph)).collect()
}

fn list(all: &[CatalogEntry], p: PropertyId) -> Vec<&CatalogEntry> {
    all.iter().filter(|e| e.is_minor_minimal(p)).collect()
}

fn connectivity(e: &CatalogEntry) -> usize {
    e.graph.connectivity().unwrap_or(0)
}

fn structure_checks(all: &[CatalogEntry]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for p in PropertyId::ALL {
        let members = list(all, p);
        let want = expected_count(p);
        out.push(result(
            format!("{p} list has {want} graphs"),
            members.len() == want,
            format!("found {}", members.len()),
        ));
    }

    let na = list(all, PropertyId::NA);
    let bad: Vec<String> = na
        .iter()
        .filter(|e| {
            let k = connectivity(e);
            let d = e.graph.min_degree().unwrap_or(0);
            d < 3 || !(k == 0 || (2..=5).contains(&k))
        })
        .map(|e| e.id.clone())
        .collect();
    out.push(result(
        "MMNA graphs have minimum degree 3 and connectivity 0 or 2..=5",
        bad.is_empty(),
        bad.join(", "),
    ));
    let cut_vertex: Vec<_> = na.iter().filter(|e| connectivity(e) == 1).map(|e| e.id.clone()).collect();
    out.push(result("no MMNA graph has connectivity 1", cut_vertex.is_empty(), cut_vertex.join(", ")));

    let by_conn = |p: PropertyId, k: usize| -> BTreeSet<CanonicalForm> {
        let members = list(all, p);
        let picked: Vec<&CatalogEntry> = members.into_iter().filter(|e| connectivity(e) == k).collect();
        forms(&picked)
    };
    let (dna, dne, dnc) = (
        by_conn(PropertyId::NA, 0),
        by_conn(PropertyId::NE, 0),
        by_conn(PropertyId::NC, 0),
    );
    out.push(result(
        "disconnected NA, NE and NC graphs coincide",
        dna == dne && dne == dnc && dna.len() == 3,
        format!("{} / {} / {}", dna.len(), dne.len(), dnc.len()),
    ));
    let (cne, cnc) = (by_conn(PropertyId::NE, 1), by_conn(PropertyId::NC, 1));
    out.push(result(
        "connectivity-1 NE and NC graphs coincide",
        cne == cnc && cne.len() == 3,
        format!("{} / {}", cne.len(), cnc.len()),
    ));

    let c = ne_not_closed();
    let e = c.edge;
    let apex_edges: Vec<_> = c
        .graph
        .edges()
        .into_iter()
        .filter(|f| is_planar(&c.graph.without_edge(f.u(), f.v())))
        .collect();
    let ok = !check(&c.graph, PropertyId::NE)
        && find_apex_edge(&c.graph) == Some(e)
        && apex_edges == vec![e]
        && check(&c.graph.contracted(e.u(), e.v()), PropertyId::NE);
    out.push(result(c.id, ok, c.description));

    let c = nc_not_closed();
    let e = c.edge;
    let ok = !check(&c.graph, PropertyId::NC)
        && is_planar(&c.graph.contracted(e.u(), e.v()))
        && check(&c.graph.without_edge(e.u(), e.v()), PropertyId::NC);
    out.push(result(c.id, ok, c.description));
    out
}

/// Checks every claim of every entry, the list sizes, pairwise
/// non-isomorphism (guaranteed by construction, since entries are merged by
/// canonical form), the MMNA degree and connectivity bounds, the agreement of
/// the disconnected lists, and both counterexamples.
pub fn verify_catalog(jobs: usize) -> VerificationReport {
    let mut checks = Vec::new();
    match catalog() {
        Err(e) => checks.push(result("catalog builds", false, e.to_string())),
        Ok(all) => {
            checks.push(result("catalog builds", true, format!("{} distinct graphs", all.len())));
            let forms: BTreeSet<_> = all.iter().map(|e| canonical_form(&e.graph)).collect();
            checks.push(result(
                "entries are pairwise non-isomorphic",
                forms.len() == all.len(),
                "",
            ));
            checks.extend(par::map(all, jobs, verify_claims).into_iter().flatten());
            checks.extend(structure_checks(all));
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    VerificationReport {
        schema_version: crate::io::report::SCHEMA_VERSION,
        checks,
        passed,
    }
}
