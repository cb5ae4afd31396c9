mod common;

use mmsieve::enumerate::{enumerate, EnumFilter, EnumOptions};
use mmsieve::{find_k_subgraph, has_kuratowski_minor, is_planar, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn agrees_with_minor_oracle_up_to_order_seven() {
    let mut checked = 0;
    for n in 1..=7 {
        for g in enumerate(&EnumFilter::new(n), EnumOptions::default()).unwrap() {
            assert_eq!(is_planar(&g), !has_kuratowski_minor(&g), "{g:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

#[test]
fn agrees_with_minor_oracle_on_random_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 8..=11 {
        for _ in 0..150 {
            let g = common::random_graph(&mut rng, n, 0.15, 0.55);
            assert_eq!(is_planar(&g), !has_kuratowski_minor(&g), "{g:?}");
        }
    }
}

#[test]
fn edge_bound_and_classics() {
    assert!(is_planar(&Graph::complete(4).unwrap()));
    assert!(!is_planar(&Graph::complete(5).unwrap()));
    assert!(!is_planar(&Graph::complete_bipartite(3, 3).unwrap()));
    assert!(is_planar(&Graph::complete_bipartite(2, 30).unwrap()));
    assert!(is_planar(&Graph::cycle(64).unwrap()));
    assert!(is_planar(&Graph::empty(0).unwrap()));
    // Octahedron: K6 minus a perfect matching.
    let oct = Graph::complete(6).unwrap().delete_edge(0, 1).unwrap().delete_edge(2, 3).unwrap().delete_edge(4, 5).unwrap();
    assert!(is_planar(&oct));
    assert!(!is_planar(&oct.add_edge(0, 1).unwrap()));
}

#[test]
fn k_subgraphs_are_valid_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs: Vec<Graph> = (5..=7)
        .flat_map(|n| enumerate(&EnumFilter::new(n), EnumOptions::default()).unwrap())
        .collect();
    for n in [8, 10, 14, 20] {
        for _ in 0..40 {
            graphs.push(common::random_graph(&mut rng, n, 0.2, 0.6));
        }
    }
    for g in graphs {
        match find_k_subgraph(&g) {
            Some(k) => {
                assert!(!is_planar(&g));
                assert!(k.validate(&g), "{g:?}");
                assert!(k.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
            }
            None => assert!(is_planar(&g), "{g:?}"),
        }
    }
}
