//! Canonical labeling by individualization-refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first smallest non-singleton
//! cell in turn, and recurse. The canonical labeling is the leaf whose relabeled
//! adjacency rows are lexicographically greatest. Automorphisms discovered at
//! the leaves prune the tree in two ways: a leaf equivalent to the first leaf
//! sends the search back to where the two paths diverged, and stored
//! generators fixing the current path prune children lying in one orbit.

use std::fmt;

use smallvec::SmallVec;

use crate::graph::{iter_bits, Graph};

const N: usize = crate::graph::MAX_ORDER;

type Cols = [u8; N];
type Rows = SmallVec<[u64; 16]>;

/// Isomorphism-invariant key: order byte, size as two big-endian bytes, then
/// the upper triangle of the canonically relabeled adjacency matrix packed
/// column by column, most significant bit first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(SmallVec<[u8; 32]>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn from_rows(rows: &[u64]) -> CanonicalForm {
        let n = rows.len();
        let size: u32 = rows.iter().map(|r| r.count_ones()).sum::<u32>() / 2;
        let mut out: SmallVec<[u8; 32]> = SmallVec::new();
        out.push(n as u8);
        out.extend_from_slice(&(size as u16).to_be_bytes());
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | ((rows[i] >> j) & 1) as u8;
                nbits += 1;
                if nbits == 8 {
                    out.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(acc << (8 - nbits));
        }
        CanonicalForm(out)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in self.0.iter() {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// A canonical labeling: `perm[v]` is the canonical label of vertex `v`.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub form: CanonicalForm,
    pub perm: Vec<usize>,
    /// Cell index of each vertex in the equitable partition at the root of the
    /// search. Vertices in different cells lie in different orbits.
    pub(crate) root_cells: Vec<u8>,
}

impl Labeling {
    /// The graph relabeled by `perm`.
    pub fn apply(&self, g: &Graph) -> Graph {
        g.relabel_unchecked(&self.perm)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    Search::run(g, &[0u8; N])
}

/// `g` relabeled canonically; isomorphic inputs give identical outputs.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).apply(g)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Whether some automorphism of `g` maps `v` to `w`.
///
/// # Panics
/// If `v` or `w` is out of range.
pub fn same_orbit(g: &Graph, v: usize, w: usize) -> bool {
    assert!(v < g.order() && w < g.order(), "vertex out of range");
    v == w || individualized_form(g, v) == individualized_form(g, w)
}

/// Canonical form of `g` with `v` placed in a cell of its own, ahead of the rest.
fn individualized_form(g: &Graph, v: usize) -> CanonicalForm {
    let mut cols = [1u8; N];
    cols[v] = 0;
    Search::run(g, &cols).form
}

struct Leaf {
    rows: Rows,
    cols: Cols,
    path: SmallVec<[u8; 16]>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Cols>,
    path: SmallVec<[u8; 16]>,
    root_cells: Cols,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph, initial: &Cols) -> Labeling {
        let n = g.order();
        let mut s = Search {
            adj: g.rows(),
            n,
            first: None,
            best: None,
            gens: Vec::new(),
            path: SmallVec::new(),
            root_cells: [0; N],
        };
        let mut cols = *initial;
        normalize(&mut cols, n);
        s.node(cols, true);
        let best = s.best.expect("search visits at least one leaf");
        Labeling {
            form: CanonicalForm::from_rows(&best.rows),
            perm: best.cols[..n].iter().map(|&c| c as usize).collect(),
            root_cells: s.root_cells[..n].to_vec(),
        }
    }

    /// Returns the level to jump back to, if an automorphism allows it.
    fn node(&mut self, mut cols: Cols, root: bool) -> Option<usize> {
        let n = self.n;
        let cells = self.refine(&mut cols);
        if root {
            self.root_cells = cols;
        }
        if cells == n {
            return self.leaf(&cols);
        }
        let depth = self.path.len();
        let (start, members) = target_cell(&cols, n);
        let mut done = 0u64;
        for w in iter_bits(members) {
            if done != 0 && self.pruned(w, done) {
                continue;
            }
            done |= 1 << w;
            let mut child = cols;
            for x in iter_bits(members & !(1 << w)) {
                child[x] = start + 1;
            }
            self.path.push(w as u8);
            let jump = self.node(child, false);
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cols: &Cols) -> Option<usize> {
        let n = self.n;
        let mut rows: Rows = SmallVec::from_elem(0, n);
        for v in 0..n {
            let mut r = 0u64;
            for w in iter_bits(self.adj[v]) {
                r |= 1 << cols[w];
            }
            rows[cols[v] as usize] = r;
        }
        let Some(first) = &self.first else {
            let leaf = Leaf {
                rows,
                cols: *cols,
                path: self.path.clone(),
            };
            self.best = Some(Leaf {
                rows: leaf.rows.clone(),
                cols: leaf.cols,
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if rows == first.rows {
            let gamma = compose_inverse(&first.cols, cols, n);
            let common = first
                .path
                .iter()
                .zip(self.path.iter())
                .take_while(|(a, b)| a == b)
                .count();
            self.gens.push(gamma);
            return Some(common);
        }
        let best = self.best.as_mut().expect("best is set with first");
        match rows.as_slice().cmp(best.rows.as_slice()) {
            std::cmp::Ordering::Greater => {
                best.rows = rows;
                best.cols = *cols;
                best.path = self.path.clone();
            }
            std::cmp::Ordering::Equal => {
                let gamma = compose_inverse(&best.cols, cols, n);
                self.gens.push(gamma);
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }

    /// Whether `w` shares an orbit with a vertex in `done` under the stored
    /// generators that fix the current path pointwise.
    fn pruned(&self, w: usize, done: u64) -> bool {
        let n = self.n;
        let mut parent: [u8; N] = [0; N];
        for (v, p) in parent.iter_mut().enumerate().take(n) {
            *p = v as u8;
        }
        fn find(parent: &mut [u8; N], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for g in &self.gens {
            if self.path.iter().any(|&p| g[p as usize] != p) {
                continue;
            }
            any = true;
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, g[v] as usize));
                if a != b {
                    parent[a] = b as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        iter_bits(done).any(|d| find(&mut parent, d) == root)
    }

    /// Refines to the coarsest equitable partition below `cols`; returns the
    /// number of cells. A cell's index is the count of vertices in earlier cells.
    fn refine(&self, cols: &mut Cols) -> usize {
        let n = self.n;
        let mut sig = [[0u8; N]; N];
        loop {
            let mut masks = [0u64; N];
            for v in 0..n {
                masks[cols[v] as usize] |= 1 << v;
            }
            let cells: SmallVec<[u64; 16]> = masks[..n].iter().copied().filter(|&m| m != 0).collect();
            let k = cells.len();
            if k == n {
                return n;
            }
            for v in 0..n {
                for (i, &m) in cells.iter().enumerate() {
                    sig[v][i] = (self.adj[v] & m).count_ones() as u8;
                }
            }
            let mut order: SmallVec<[u8; 16]> = (0..n as u8).collect();
            let key = |v: u8| (cols[v as usize], &sig[v as usize][..k]);
            order.sort_unstable_by(|&a, &b| key(a).cmp(&key(b)));
            let mut next = *cols;
            let mut count = 0;
            let mut start = 0u8;
            for i in 0..n {
                if i == 0 || key(order[i]) != key(order[i - 1]) {
                    start = i as u8;
                    count += 1;
                }
                next[order[i] as usize] = start;
            }
            *cols = next;
            if count == k {
                return k;
            }
        }
    }
}

/// Rewrites arbitrary cell labels so each label is the number of vertices
/// carrying a smaller label.
fn normalize(cols: &mut Cols, n: usize) {
    let mut order: SmallVec<[u8; 16]> = (0..n as u8).collect();
    order.sort_by_key(|&v| cols[v as usize]);
    let mut next = *cols;
    let mut start = 0u8;
    for i in 0..n {
        if i > 0 && cols[order[i] as usize] != cols[order[i - 1] as usize] {
            start = i as u8;
        }
        next[order[i] as usize] = start;
    }
    *cols = next;
}

/// First smallest non-singleton cell: (index, member mask).
fn target_cell(cols: &Cols, n: usize) -> (u8, u64) {
    let mut masks = [0u64; N];
    for v in 0..n {
        masks[cols[v] as usize] |= 1 << v;
    }
    let mut best: Option<(u8, u64)> = None;
    for (c, &m) in masks[..n].iter().enumerate() {
        let size = m.count_ones();
        if size > 1 && best.is_none_or(|(_, bm)| size < bm.count_ones()) {
            best = Some((c as u8, m));
        }
    }
    best.expect("partition is not discrete")
}

/// The automorphism `a^-1 . b` for two leaf labelings with equal relabeled graphs.
fn compose_inverse(a: &Cols, b: &Cols, n: usize) -> Cols {
    let mut inv = [0u8; N];
    for v in 0..n {
        inv[a[v] as usize] = v as u8;
    }
    let mut out = [0u8; N];
    for v in 0..n {
        out[v] = inv[b[v] as usize];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permuted(g: &Graph, seed: u64) -> Graph {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        g.relabel(&perm).unwrap()
    }

    #[test]
    fn symmetric_graphs_are_invariant_under_relabeling() {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let two = k33.disjoint_union(&k33).unwrap();
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let cube = {
            let mut e = Vec::new();
            for v in 0..8usize {
                for b in 0..3 {
                    let w = v ^ (1 << b);
                    if v < w {
                        e.push((v, w));
                    }
                }
            }
            Graph::from_edges(8, &e).unwrap()
        };
        for g in [k33, two, petersen, cube, Graph::complete(12).unwrap(), Graph::empty(9).unwrap()] {
            let f = canonical_form(&g);
            for seed in 1..20 {
                assert_eq!(canonical_form(&permuted(&g, seed)), f);
            }
        }
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let lab = canonical_labeling(&g);
        assert_eq!(canonical_form(&lab.apply(&g)), lab.form);
        assert_eq!(canonical_graph(&lab.apply(&g)), lab.apply(&g));
    }

    #[test]
    fn orbits_of_a_path() {
        let p = Graph::path(5).unwrap();
        assert!(same_orbit(&p, 0, 4));
        assert!(same_orbit(&p, 1, 3));
        assert!(!same_orbit(&p, 0, 1));
        assert!(!same_orbit(&p, 2, 3));
    }

    #[test]
    fn form_layout() {
        let f = canonical_form(&Graph::complete(3).unwrap());
        assert_eq!(f.as_bytes(), &[3, 0, 3, 0b1110_0000]);
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).as_bytes(), &[0, 0, 0]);
    }
}
