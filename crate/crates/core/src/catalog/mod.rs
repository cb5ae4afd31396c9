//! Known minor-minimal graphs, each with machine-checkable claims.
//!
//! Named graphs use short ids: `K5`, `K33` (K3,3), `K43`, `K5-e`, `K33+e`,
//! `K33+2e`, `barK5` (K5 with one edge subdivided), binary gluings
//! `X⊔Y` (or `X|Y`), `X∪̇Y` (or `X.Y`, one shared vertex) and `X⋈Y` (or
//! `X:Y`, two shared vertices), plus list ids such as `ne-list-12` and family
//! ids such as `na-221-3`.

mod families;
mod lists;
mod verify;

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{invalid, Result};
use crate::graph::{Edge, Graph};
use crate::io::edgelist;
use crate::properties::PropertyId;

pub use families::{mmna_graphs, ne_nc_two_sums, two_sum, Block};
pub use verify::{verify_catalog, CheckResult, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    Has(PropertyId),
    MinorMinimal(PropertyId),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    /// Other ids naming the same isomorphism class.
    pub aliases: Vec<String>,
    /// Canonically labeled.
    pub graph: Graph,
    pub claims: Vec<Claim>,
    pub provenance: String,
}

impl CatalogEntry {
    pub fn is_minor_minimal(&self, p: PropertyId) -> bool {
        self.claims.contains(&Claim::MinorMinimal(p))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        std::iter::once(self.id.as_str()).chain(self.aliases.iter().map(String::as_str))
    }
}

/// Expected size of each explicit list.
pub fn expected_count(p: PropertyId) -> usize {
    match p {
        PropertyId::AN => 2,
        PropertyId::CAN => 1,
        PropertyId::IA => 2,
        PropertyId::IE => 5,
        PropertyId::IC => 7,
        PropertyId::NA => 36,
        PropertyId::NE => 27,
        PropertyId::NC => 34,
    }
}

/// A single atom with its designated gluing pair.
fn atom(s: &str) -> Result<(Graph, usize, usize)> {
    let k33 = || Graph::complete_bipartite(3, 3);
    Ok(match s {
        "K33" => (k33()?, 0, 1),
        "K43" => (Graph::complete_bipartite(4, 3)?, 0, 1),
        "K5-e" => Block::K5MinusE.build(),
        "K6-e" => (Graph::complete(6)?.without_edge(0, 1), 0, 1),
        "K33-e" => Block::K33MinusE.build(),
        "K33+e" => (k33()?.with_edge(0, 1), 0, 1),
        "K33+2e" => (k33()?.with_edge(0, 1).with_edge(3, 4), 0, 1),
        "barK5" => (Graph::complete(5)?.subdivide_edge(0, 1)?, 0, 1),
        "barK33" => (k33()?.subdivide_edge(0, 3)?, 0, 3),
        "Petersen" => (
            Graph::from_edges(
                10,
                &[
                    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                ],
            )?,
            0,
            1,
        ),
        _ => {
            let n = s
                .strip_prefix('K')
                .filter(|d| d.len() == 1)
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| invalid(format!("unknown graph id {s:?}")))?;
            (Graph::complete(n)?, 0, 1.min(n - 1))
        }
    })
}

fn normalize(id: &str) -> String {
    id.replace("∪̇", ".")
        .replace('∪', ".")
        .replace('⊔', "|")
        .replace('⋈', ":")
        .replace('−', "-")
        .replace("K3,3", "K33")
        .replace("K4,3", "K43")
        .replace("K_{3,3}", "K33")
}

/// Builds a graph from its id, canonically labeled.
pub fn build_named(id: &str) -> Result<Graph> {
    let norm = normalize(id.trim());
    if let Some(i) = norm.find(['|', '.', ':']) {
        let (l, op, r) = (&norm[..i], &norm[i..i + 1], &norm[i + 1..]);
        let (x, a, b) = atom(l)?;
        let (y, c, d) = atom(r)?;
        let g = match op {
            "|" => x.disjoint_union(&y)?,
            "." => x.one_vertex_union(a, &y, c)?,
            _ => {
                if a == b || c == d {
                    return Err(invalid(format!("{id:?} needs two glue vertices on each side")));
                }
                x.two_vertex_union((a, b), &y, (c, d))?
            }
        };
        return Ok(canonical_graph(&g));
    }
    if let Ok((g, _, _)) = atom(&norm) {
        return Ok(canonical_graph(&g));
    }
    let entries = catalog()?;
    entries
        .iter()
        .find(|e| e.names().any(|n| n == norm))
        .map(|e| e.graph.clone())
        .ok_or_else(|| invalid(format!("unknown graph id {id:?}")))
}

struct Builder {
    entries: Vec<CatalogEntry>,
    by_form: HashMap<crate::canon::CanonicalForm, usize>,
}

impl Builder {
    fn add(&mut self, id: &str, g: &Graph, claims: &[Claim], provenance: &str) {
        let form = canonical_form(g);
        if let Some(&i) = self.by_form.get(&form) {
            let e = &mut self.entries[i];
            if e.id != id && !e.aliases.iter().any(|a| a == id) {
                e.aliases.push(id.to_string());
            }
            for c in claims {
                if !e.claims.contains(c) {
                    e.claims.push(*c);
                }
            }
            return;
        }
        self.by_form.insert(form, self.entries.len());
        self.entries.push(CatalogEntry {
            id: id.to_string(),
            aliases: Vec::new(),
            graph: canonical_graph(g),
            claims: claims.to_vec(),
            provenance: provenance.to_string(),
        });
    }

    fn add_named(&mut self, id: &str, props: &[PropertyId], provenance: &str) -> Result<()> {
        let g = build_named(id)?;
        self.add(id, &g, &mm_claims(props), provenance);
        Ok(())
    }
}

fn mm_claims(props: &[PropertyId]) -> Vec<Claim> {
    props
        .iter()
        .flat_map(|&p| [Claim::Has(p), Claim::MinorMinimal(p)])
        .collect()
}

fn build_catalog() -> Result<Vec<CatalogEntry>> {
    use PropertyId::*;
    let mut b = Builder {
        entries: Vec::new(),
        by_form: HashMap::new(),
    };
    b.add_named("K5-e", &[AN, CAN], "named construction")?;
    b.add_named("K33-e", &[AN], "named construction")?;
    b.add_named("K1|K5", &[IA], "named construction")?;
    b.add_named("K1|K33", &[IA], "named construction")?;
    b.add_named("K33+e", &[IE], "named construction")?;
    b.add_named("K33+2e", &[IC], "named construction")?;
    b.add_named("barK5", &[IC], "named construction")?;
    b.add_named("barK33", &[IC], "named construction")?;
    for id in ["K2|K5", "K2|K33", "K2.K5", "K2.K33"] {
        b.add_named(id, &[IE, IC], "named construction")?;
    }
    for id in ["K5|K5", "K5|K33", "K33|K33"] {
        b.add_named(id, &[NE, NC], "disjoint union of Kuratowski graphs")?;
    }
    for id in ["K5.K5", "K5.K33", "K33.K33"] {
        b.add_named(id, &[NE, NC], "Kuratowski graphs sharing one vertex")?;
    }
    for (id, g) in families::ne_nc_two_sums() {
        b.add(&id, &g, &mm_claims(&[NE, NC]), "Kuratowski blocks sharing two vertices");
    }
    for (i, s) in lists::NE_LIST.iter().enumerate() {
        let g = edgelist::parse(s)?;
        b.add(&format!("ne-list-{}", i + 1), &g, &mm_claims(&[NE]), "computer-search list NE");
    }
    for (i, s) in lists::NC_LIST.iter().enumerate() {
        let g = edgelist::parse(s)?;
        b.add(&format!("nc-list-{}", i + 1), &g, &mm_claims(&[NC]), "computer-search list NC");
    }
    for (id, desc, g) in families::mmna_graphs()? {
        b.add(&id, &g, &mm_claims(&[NA]), &format!("MMNA family member {desc}"));
    }
    Ok(b.entries)
}

/// Every catalog entry, built once per process.
pub fn catalog() -> Result<&'static [CatalogEntry]> {
    static CATALOG: OnceLock<Result<Vec<CatalogEntry>>> = OnceLock::new();
    match CATALOG.get_or_init(build_catalog) {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}

/// The explicit list of minor-minimal graphs for `p`.
pub fn mm_catalog(p: PropertyId) -> Result<Vec<CatalogEntry>> {
    Ok(catalog()?
        .iter()
        .filter(|e| e.is_minor_minimal(p))
        .cloned()
        .collect())
}

/// A graph showing that a property is not preserved in one direction.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub id: &'static str,
    pub graph: Graph,
    pub edge: Edge,
    pub description: &'static str,
}

/// K3,3 with eight edges each completed to a triangle through a new vertex;
/// the ninth edge `uv` becomes a path `u-x-v` and a further vertex `w` is
/// joined to `u` and `x`. Contracting `xv` gives an NE graph, yet `xv` is
/// the unique edge whose deletion leaves the graph planar.
pub fn ne_not_closed() -> Counterexample {
    let k33 = Graph::complete_bipartite(3, 3).expect("small");
    let edges = k33.edges();
    let mut g = k33.clone();
    for e in &edges[..8] {
        g = g.add_vertex().expect("small");
        let t = g.order() - 1;
        g.link(e.u(), t);
        g.link(e.v(), t);
    }
    let last = edges[8];
    let (u, v) = (last.u(), last.v());
    g.unlink(u, v);
    g = g.add_vertex().expect("small");
    let x = g.order() - 1;
    g = g.add_vertex().expect("small");
    let w = g.order() - 1;
    for (a, b) in [(u, x), (x, v), (w, u), (w, x)] {
        g.link(a, b);
    }
    Counterexample {
        id: "ne-not-closed",
        graph: g,
        edge: Edge::new(x, v).expect("distinct"),
        description: "G/e is not edge apex, but G has e as its only apex edge",
    }
}

/// Two copies of K5 sharing the edge `e`: contracting `e` leaves a planar
/// graph, while deleting it leaves a not-contraction-apex graph.
pub fn nc_not_closed() -> Counterexample {
    let k5 = Graph::complete(5).expect("small");
    let g = k5.two_vertex_union((0, 1), &k5, (0, 1)).expect("small");
    Counterexample {
        id: "nc-not-closed",
        graph: g,
        edge: Edge::new(0, 1).expect("distinct"),
        description: "G - e is not contraction apex, but G/e is planar",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_shapes() {
        let cases = [
            ("K33+e", 6, 10),
            ("K33+2e", 6, 11),
            ("barK5", 6, 11),
            ("barK33", 7, 10),
            ("K2⊔K5", 7, 11),
            ("K2∪̇K33", 7, 10),
            ("K3,3−e⋈K3,3−e", 10, 16),
            ("K5-e:K33", 9, 18),
            ("K43", 7, 12),
        ];
        for (id, n, m) in cases {
            let g = build_named(id).unwrap();
            assert_eq!((g.order(), g.size()), (n, m), "{id}");
        }
        assert!(build_named("K99").is_err());
        assert!(build_named("nonsense").is_err());
    }

    #[test]
    fn counterexample_shapes() {
        let c = ne_not_closed();
        assert_eq!((c.graph.order(), c.graph.size()), (16, 28));
        let c = nc_not_closed();
        assert_eq!((c.graph.order(), c.graph.size()), (8, 19));
    }
}
