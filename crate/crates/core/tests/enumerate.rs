use std::collections::HashSet;

use mmsieve::enumerate::{count, enumerate, EnumFilter, EnumOptions, PlanarityFilter};
use mmsieve::{canonical_form, has_kuratowski_minor, Graph};

/// Canonical key by brute force over all permutations.
fn naive_key(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut key = 0u64;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(perm[i], perm[j]) {
                    key |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(key);
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best
}

fn labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn oracle_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
    let mut seen = HashSet::new();
    for g in labeled(n) {
        if keep(&g) {
            seen.insert(naive_key(&g));
        }
    }
    seen.len()
}

#[test]
fn counts_match_brute_force_up_to_order_six() {
    for n in 1..=6 {
        let all = enumerate(&EnumFilter::new(n), EnumOptions::default()).unwrap();
        assert_eq!(all.len(), oracle_classes(n, |_| true), "order {n}");
        let forms: HashSet<_> = all.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), all.len(), "duplicates at order {n}");

        let f = EnumFilter::new(n).connected(true).min_degree(2);
        let got = count(&f, EnumOptions::default()).unwrap() as usize;
        let want = oracle_classes(n, |g| g.is_connected() && g.min_degree().unwrap() >= 2);
        assert_eq!(got, want, "connected, min degree 2, order {n}");

        let f = EnumFilter::new(n).planarity(PlanarityFilter::KeepPlanar);
        let got = count(&f, EnumOptions::default()).unwrap() as usize;
        let want = oracle_classes(n, |g| !has_kuratowski_minor(g));
        assert_eq!(got, want, "planar, order {n}");
    }
}

#[test]
fn size_filters_match_brute_force() {
    let f = EnumFilter::new(6).sizes(7, Some(9));
    let got = count(&f, EnumOptions::default()).unwrap() as usize;
    let want = oracle_classes(6, |g| (7..=9).contains(&g.size()));
    assert_eq!(got, want);
}

#[test]
fn larger_orders_have_the_known_counts() {
    let opts = EnumOptions::default();
    assert_eq!(count(&EnumFilter::new(7), opts).unwrap(), 1044);
    assert_eq!(count(&EnumFilter::new(8), opts).unwrap(), 12346);
    assert_eq!(count(&EnumFilter::new(8).connected(true), opts).unwrap(), 11117);
}

#[test]
fn job_count_does_not_change_output() {
    let f = EnumFilter::new(7).planarity(PlanarityFilter::KeepNonplanar);
    let one = enumerate(&f, EnumOptions { jobs: 1, ..Default::default() }).unwrap();
    let four = enumerate(&f, EnumOptions { jobs: 4, ..Default::default() }).unwrap();
    assert_eq!(one, four);
}
