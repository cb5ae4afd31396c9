use mmsieve::catalog::{mm_catalog, ne_nc_two_sums};
use mmsieve::moves::{explore_family, star_to_triangle, triangle_to_star, triangles, Triangle};
use mmsieve::{check, is_isomorphic, is_mmne, is_planar, Graph, PropertyId};

#[test]
fn delta_y_shapes() {
    let k5 = Graph::complete(5).unwrap();
    let t = Triangle::new(&k5, 0, 1, 2).unwrap();
    let h = triangle_to_star(&k5, t).unwrap();
    assert_eq!((h.order(), h.size()), (6, 10));
    assert!(!is_planar(&h));
}

#[test]
fn round_trip_on_clean_triangles() {
    for e in mm_catalog(PropertyId::NE).unwrap() {
        let g = &e.graph;
        for t in triangles(g) {
            let h = triangle_to_star(g, t).unwrap();
            let back = star_to_triangle(&h, g.order()).unwrap();
            assert_eq!(&back, g, "{}", e.id);
        }
    }
}

/// Delta-Y keeps NE exactly when every new edge is still needed.
#[test]
fn ne_preservation_matches_direct_check() {
    use mmsieve::moves::ne_preserved_after_ty;
    let mut tried = 0;
    for e in mm_catalog(PropertyId::NE).unwrap() {
        let g = &e.graph;
        if g.order() > 8 {
            continue;
        }
        for t in triangles(g) {
            let direct = check(&triangle_to_star(g, t).unwrap(), PropertyId::NE);
            assert_eq!(ne_preserved_after_ty(g, t).unwrap(), direct, "{} {t:?}", e.id);
            tried += 1;
        }
    }
    assert!(tried > 0);
}

#[test]
fn two_sum_seeds_stay_minimal() {
    let seeds: Vec<Graph> = ne_nc_two_sums().into_iter().map(|(_, g)| g).collect();
    assert_eq!(seeds.len(), 6);
    let report = explore_family(&seeds, PropertyId::NE, 1).unwrap();
    assert!(report.scanned as usize >= seeds.len());
    for s in &seeds {
        assert!(is_mmne(s).unwrap());
        let hit = report
            .found
            .iter()
            .any(|f| is_isomorphic(&mmsieve::io::graph6::decode(&f.graph6).unwrap(), s));
        assert!(hit);
    }
}

#[test]
fn exploration_rejects_other_properties() {
    let k5 = Graph::complete(5).unwrap();
    assert!(explore_family(&[k5], PropertyId::NA, 1).is_err());
}
