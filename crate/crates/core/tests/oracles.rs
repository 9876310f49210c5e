//! The recognizers against exhaustive search on every small connected chordal
//! graph, with the counts frozen.

use leafpower::chordal::is_chordal;
use leafpower::oracle::enumerate::{canonical_code, connected_chordal_masks, graph_from_masks};
use leafpower::oracle::{bruteforce_good_partition, bruteforce_linear_leafpower};
use leafpower::star::find_good_partition;
use leafpower::Graph;

fn masks_of(g: &Graph) -> Vec<u32> {
    (0..g.order()).map(|v| g.neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect()
}

fn three_sun() -> Graph {
    Graph::new(
        ["x", "y", "z", "a", "b", "c"],
        [("x", "y"), ("y", "z"), ("x", "z"), ("a", "x"), ("a", "y"), ("b", "y"), ("b", "z"), ("c", "x"), ("c", "z")],
    )
    .unwrap()
}

#[test]
fn star_rejections_by_order() {
    let rejected: Vec<usize> = (1..=7)
        .map(|n| connected_chordal_masks(n).iter().filter(|adj| find_good_partition(&graph_from_masks(adj)).is_none()).count())
        .collect();
    assert_eq!(rejected, [0, 0, 0, 0, 0, 1, 9]);
}

#[test]
fn the_only_six_vertex_rejection_is_the_three_sun() {
    let sun = canonical_code(&masks_of(&three_sun()));
    for adj in connected_chordal_masks(6) {
        let g = graph_from_masks(&adj);
        let rejected = find_good_partition(&g).is_none();
        assert_eq!(rejected, canonical_code(&adj) == sun);
        assert_eq!(rejected, bruteforce_good_partition(&g, 8).unwrap().is_none());
    }
}

#[test]
fn linear_leaf_powers_by_order() {
    let mut counts = Vec::new();
    let sun = canonical_code(&masks_of(&three_sun()));
    for n in 1..=6 {
        let mut count = 0;
        for adj in connected_chordal_masks(n) {
            let g = graph_from_masks(&adj);
            match bruteforce_linear_leafpower(&g, 8).unwrap() {
                Some(root) => {
                    count += 1;
                    assert!(g.same_graph(&root.induced_graph().unwrap()));
                }
                None => assert_eq!(canonical_code(&adj), sun),
            }
        }
        counts.push(count);
    }
    assert_eq!(counts, [1, 1, 2, 5, 15, 57]);
}

#[test]
fn oracles_respect_their_limit() {
    let big = Graph::with_order(9, &[(0, 1)]).unwrap();
    assert!(bruteforce_good_partition(&big, 8).is_err());
    assert!(bruteforce_linear_leafpower(&big, 8).is_err());
    assert!(is_chordal(&big));
}
