mod common;

use common::{all_classes, Oracle};
use mmsieve::minimality::{is_mmne_with, SieveLimits};
use mmsieve::{
    is_minor_minimal, is_minor_minimal_exhaustive, is_minor_minimal_upclosed, is_mmnc, is_mmne,
    one_step_minors, Error, Graph, PropertyId,
};

#[test]
fn every_decider_matches_the_oracle_up_to_order_six() {
    let mut oracle = Oracle::new();
    for n in 1..=6 {
        for g in all_classes(n) {
            for p in PropertyId::ALL {
                let want = oracle.minor_minimal(&g, p);
                assert_eq!(is_minor_minimal(&g, p).unwrap(), want, "{p} {g:?}");
                assert_eq!(is_minor_minimal_exhaustive(&g, p, 6).unwrap(), want, "{p} {g:?}");
                if matches!(p, PropertyId::NA | PropertyId::IA | PropertyId::IE | PropertyId::IC) {
                    assert_eq!(is_minor_minimal_upclosed(&g, p).unwrap(), want, "{p} {g:?}");
                }
            }
        }
    }
}

#[test]
fn sieves_on_known_graphs() {
    let k5 = Graph::complete(5).unwrap();
    let k6 = Graph::complete(6).unwrap();
    let k6e = k6.delete_edge(0, 1).unwrap();
    assert!(!is_mmne(&k5).unwrap());
    assert!(!is_mmne(&k6).unwrap());
    assert!(is_mmne(&k6e).unwrap());
    assert!(is_mmnc(&k6).unwrap());
    assert!(!is_mmnc(&k6e).unwrap());
    let k43 = Graph::complete_bipartite(4, 3).unwrap();
    assert!(is_mmne(&k43).unwrap());
}

#[test]
fn upclosed_rejects_other_properties() {
    let g = Graph::complete(5).unwrap();
    assert!(matches!(
        is_minor_minimal_upclosed(&g, PropertyId::NE),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        is_minor_minimal_exhaustive(&Graph::complete(7).unwrap(), PropertyId::NE, 6),
        Err(Error::ResourceLimit(_))
    ));
}

#[test]
fn sieve_cap_is_enforced() {
    let k6e = Graph::complete(6).unwrap().delete_edge(0, 1).unwrap();
    let r = is_mmne_with(&k6e, SieveLimits { max_visited: 1 });
    assert!(matches!(r, Err(Error::ResourceLimit(_))));
}

#[test]
fn one_step_minors_of_k5() {
    let ms = one_step_minors(&Graph::complete(5).unwrap());
    let shapes: Vec<_> = ms.iter().map(|g| (g.order(), g.size())).collect();
    assert_eq!(ms.len(), 2);
    assert!(shapes.contains(&(5, 9)) && shapes.contains(&(4, 6)));
}
