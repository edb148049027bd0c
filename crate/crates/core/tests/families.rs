// SPDX-License-Identifier: Apache-2.0

mod common;

use steiner::families::{
    gen_delta, gen_delta_prime, gen_g, gen_h, gen_t, generate, is_tree_with_at_most_4_leaves, sweep,
    sweep_graphs, Family, FamilyError, FamilyParams,
};
use steiner::steiner::steiner_diameter;
use steiner::{graph6, Graph, VertexSet};

fn p(family: Family, abcd: [usize; 4], n: usize) -> FamilyParams {
    FamilyParams::new(family, abcd, n)
}

fn cycle_rank(g: &Graph) -> usize {
    g.size() + 1 - g.order()
}

#[test]
fn smallest_h_graphs() {
    let h1 = gen_h(&p(Family::H1, [0, 0, 0, 1], 5)).unwrap();
    let k4_pendant = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
    assert!(common::isomorphic(&h1, &k4_pendant));

    let h3 = gen_h(&p(Family::H3, [0, 1, 0, 0], 5)).unwrap();
    // a 4-cycle through u1..u4 and one vertex on u3, u4
    assert!(common::isomorphic(&h3, &Graph::complete_bipartite(2, 3)));
    assert!(h3.has_edge(4, 2) && h3.has_edge(4, 3));
    let core = h3.induced(&VertexSet::from_mask(5, 0b1111));
    assert!(common::isomorphic(&core, &Graph::cycle(4)));

    let h2 = gen_h(&p(Family::H2, [0, 0, 1, 0], 5)).unwrap();
    assert_eq!(h2.size(), 7);
    assert!(!h2.has_edge(0, 3));
    assert!(h2.has_edge(4, 0) && h2.has_edge(4, 3));
}

#[test]
fn constraint_violations_are_named() {
    let err = gen_h(&p(Family::H3, [0, 0, 0, 0], 4)).unwrap_err();
    assert!(matches!(err, FamilyError::Constraint { constraint: "b >= 1", .. }));
    let err = gen_h(&p(Family::H1, [1, 0, 0, 1], 6)).unwrap_err();
    assert!(err.to_string().contains("a <= b"));
    assert!(gen_t(&p(Family::T, [3, 3, 0, 0], 6)).is_err());
    assert!("K9".parse::<Family>().is_err());
}

#[test]
fn tree_examples() {
    assert_eq!(gen_t(&p(Family::T, [0, 0, 0, 0], 6)).unwrap(), Graph::path(6));
    let chair = gen_t(&p(Family::T, [1, 1, 0, 0], 5)).unwrap();
    let leaves = (0..5).filter(|&v| chair.degree(v) == 1).count();
    assert_eq!(leaves, 3);
    assert!(is_tree_with_at_most_4_leaves(&Graph::path(7)));
    assert!(!is_tree_with_at_most_4_leaves(&Graph::star(5)));
    for n in 2..=9 {
        for (_, g) in sweep_graphs(Family::T, n) {
            assert!(is_tree_with_at_most_4_leaves(&g), "{}", graph6::encode(&g));
        }
    }
}

#[test]
fn triangle_examples() {
    let delta = gen_delta(&p(Family::Delta, [0, 0, 0, 0], 5)).unwrap();
    assert_eq!(delta.order(), 5);
    assert_eq!(cycle_rank(&delta), 1);
    assert_eq!(delta.circumference(), Some(3));
    let twin = gen_delta_prime(&p(Family::DeltaPrime, [0, 0, 0, 0], 6)).unwrap();
    assert_eq!(cycle_rank(&twin), 2);
    assert_eq!(twin.circumference(), Some(3));
    // the triangles share no edge
    let triangles: Vec<[usize; 3]> = common::subsets(6, 3)
        .into_iter()
        .filter(|s| twin.has_edge(s[0], s[1]) && twin.has_edge(s[1], s[2]) && twin.has_edge(s[0], s[2]))
        .map(|s| [s[0], s[1], s[2]])
        .collect();
    assert_eq!(triangles.len(), 2);
    let shared = triangles[0].iter().filter(|v| triangles[1].contains(v)).count();
    assert!(shared <= 1);
    for n in 5..=9 {
        for (_, g) in sweep_graphs(Family::Delta, n) {
            assert_eq!((g.order(), cycle_rank(&g)), (n, 1));
        }
        for (_, g) in sweep_graphs(Family::DeltaPrime, n) {
            assert_eq!((g.order(), cycle_rank(&g)), (n, 2));
        }
    }
}

#[test]
fn core_with_paths_examples() {
    let g2 = gen_g(&p(Family::G2, [1, 0, 0, 0], 5)).unwrap();
    assert_eq!((g2.size(), g2.circumference()), (5, Some(4)));
    let g3 = gen_g(&p(Family::G3, [1, 1, 1, 1], 8)).unwrap();
    assert_eq!(g3.size(), 9);
    assert_eq!((0..8).filter(|&v| g3.degree(v) == 1).count(), 4);
    assert_eq!(gen_g(&p(Family::G1, [0, 0, 0, 0], 4)).unwrap(), Graph::complete(4));
    assert_eq!(sweep_graphs(Family::G2, 5).len(), 4);
}

#[test]
fn extremal_families_reach_the_maximum_at_small_orders() {
    for family in Family::EXTREMAL {
        for n in 5..=7 {
            for params in sweep(family, n) {
                let g = generate(&params).unwrap();
                assert!(g.is_connected());
                assert!(g.non_cut_vertices().unwrap().len() <= 4, "{params:?}");
                assert_eq!(steiner_diameter(&g, 4).unwrap(), n - 1, "{params:?}");
            }
        }
    }
}

#[test]
fn generators_reject_what_sweeps_omit() {
    for family in Family::ALL {
        let n = 7;
        let accepted = sweep(family, n);
        for a in 0..=n {
            for b in 0..=n {
                for c in 0..=n {
                    for d in 0..=n {
                        let params = p(family, [a, b, c, d], n);
                        assert_eq!(generate(&params).is_ok(), accepted.contains(&params));
                    }
                }
            }
        }
    }
}

#[test]
fn generated_orders_match_the_target() {
    for family in Family::ALL {
        for n in 4..=9 {
            for (params, g) in sweep_graphs(family, n) {
                assert_eq!(g.order(), n, "{params:?}");
                assert!(g.is_connected(), "{params:?}");
            }
        }
    }
}
