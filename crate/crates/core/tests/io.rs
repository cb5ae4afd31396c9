use mmsieve::io::{edgelist, graph6, read_graphs, Format};
use mmsieve::{Error, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..=64, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, q)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for j in 0..n {
            for i in 0..j {
                if rng.random_bool(q) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let s = graph6::encode(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        prop_assume!(g.order() > 0);
        let s = edgelist::emit(&g);
        prop_assert_eq!(Format::detect(&s), Format::EdgeList);
        prop_assert_eq!(edgelist::parse(&s).unwrap(), g);
    }
}

#[test]
fn ten_thousand_graph6_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let n = rng.random_range(0..=64);
        let q = rng.random_range(0.0..1.0);
        let mut edges = Vec::new();
        for j in 0..n {
            for i in 0..j {
                if rng.random_bool(q) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }
}

/// Reference bytes from the published format: K4 is `C~`, the 5-cycle
/// 1-2-3-4-5-1 is `Dhc`, and the Petersen graph in the standard labeling is
/// `IheA@GUAo`.
#[test]
fn graph6_reference_strings() {
    assert_eq!(graph6::encode(&Graph::complete(4).unwrap()), "C~");
    assert_eq!(graph6::encode(&Graph::cycle(5).unwrap()), "Dhc");
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    assert_eq!(graph6::encode(&petersen), "IheA@GUAo");
    assert_eq!(graph6::decode(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
}

#[test]
fn graph6_errors() {
    assert!(matches!(graph6::decode("C"), Err(Error::Parse { .. })));
    assert!(matches!(graph6::decode("C~~"), Err(Error::Parse { .. })));
    assert!(matches!(graph6::decode("C\u{7f}"), Err(Error::Parse { .. })));
}

#[test]
fn edge_list_examples() {
    let k3 = edgelist::parse("{(1,2),(2,3),(1,3)}").unwrap();
    assert_eq!(k3, Graph::complete(3).unwrap());
    let g = edgelist::parse("6;{(1,2)}").unwrap();
    assert_eq!((g.order(), g.size()), (6, 1));
    assert_eq!(edgelist::emit(&g), "6;{(1,2)}");
    let g = edgelist::parse(
        "{(1,8),(1,9),(2,4),(2,5),(2,6),(2,7),(3,4),(3,5),(3,6),(3,7),(4,8),(4,9),(5,8),(5,9),(6,8),(6,9),(7,8),(7,9)}",
    )
    .unwrap();
    assert_eq!((g.order(), g.size()), (9, 18));
}

#[test]
fn edge_list_errors_carry_positions() {
    for text in ["{(0,1)}", "{(1,1)}", "{(1,2),(2,1)}", "2;{(1,3)}", "{(1,2"] {
        match edgelist::parse(text) {
            Err(Error::Parse { pos, .. }) => assert!(pos <= text.len(), "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    assert!(edgelist::parse("{(1,2)} junk").is_err());
    match read_graphs("C~\n{(1,2),(x)}\n") {
        Err(Error::Parse { pos, .. }) => assert!(pos >= 3),
        other => panic!("{other:?}"),
    }
}
