use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treecover::random::{gnp, random_tree, shuffle_children};
use treecover::unfold::neighborhood_codes;
use treecover::{
    build_table, check_neighborhood, cover_ball, edge_type, erdos_gallai, neighborhood_collection,
    realize_neighborhood, verify_realization, RootedTree, SimpleGraph,
};

fn arb_tree(max_nodes: usize) -> impl Strategy<Value = RootedTree> {
    (1..=max_nodes, any::<u64>()).prop_map(|(nodes, seed)| random_tree(&mut ChaCha8Rng::seed_from_u64(seed), nodes))
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n, 0.0f64..0.6, any::<u64>()).prop_map(|(n, p, seed)| gnp(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

proptest! {
    #[test]
    fn canonical_code_ignores_child_order(t in arb_tree(40), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = t.canonical_code();
        for _ in 0..10 {
            prop_assert_eq!(shuffle_children(&t, &mut rng).canonical_code(), code.clone());
        }
    }

    #[test]
    fn serialize_round_trip(t in arb_tree(40)) {
        let text = t.serialize();
        let back: RootedTree = text.parse().unwrap();
        prop_assert_eq!(back.canonical_code(), t.canonical_code());
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn truncate_depth_and_size(t in arb_tree(40), k in 0usize..8) {
        let cut = t.truncate(k);
        prop_assert_eq!(cut.depth(), t.depth().min(k));
        prop_assert!(cut.node_count() <= t.node_count());
        prop_assert_eq!(cut.node_count() == t.node_count(), t.depth() <= k);
    }

    #[test]
    fn edge_type_ignores_representative(t in arb_tree(25), seed in any::<u64>(), extra in 0usize..3) {
        prop_assume!(!t.is_leaf());
        let h = t.depth() + extra;
        let shuffled = shuffle_children(&t, &mut ChaCha8Rng::seed_from_u64(seed));
        let mut original: Vec<_> = (0..t.root_degree()).map(|c| edge_type(&t, c, h).unwrap()).collect();
        let mut other: Vec<_> = (0..t.root_degree()).map(|c| edge_type(&shuffled, c, h).unwrap()).collect();
        original.sort();
        other.sort();
        prop_assert_eq!(&original, &other);
        for ty in &original {
            prop_assert!(ty.r().to_tree().depth() < h);
            prop_assert!(ty.s().to_tree().depth() < h);
        }
    }

    #[test]
    fn typed_degrees_sum_to_root_degree(trees in proptest::collection::vec(arb_tree(15), 0..8), extra in 0usize..2) {
        let h = treecover::max_depth(&trees).max(1) + extra;
        let table = build_table(&trees, h).unwrap();
        for i in 0..trees.len() {
            let sum: usize = table.types().map(|ty| table.degree(i, ty)).sum();
            prop_assert_eq!(sum, table.degree_sequence()[i]);
        }
        for ty in table.types() {
            prop_assert_eq!(table.total(ty), table.degrees(ty).unwrap().iter().sum::<usize>());
            prop_assert_eq!(ty.inverse().class() == ty.class(), ty.is_diagonal());
        }
    }

    #[test]
    fn depth_one_reduces_to_erdos_gallai(d in proptest::collection::vec(0usize..6, 0..8)) {
        let trees: Vec<RootedTree> = d.iter().map(|&k| RootedTree::with_children(vec![RootedTree::leaf(); k])).collect();
        let table = build_table(&trees, 1).unwrap();
        prop_assert!(table.types().all(|ty| ty.r().as_str() == "()" && ty.s().as_str() == "()"));
        prop_assert_eq!(check_neighborhood(&table).graphical(), erdos_gallai(&d).is_ok());
    }

    #[test]
    fn cover_ball_truncation(g in arb_graph(9), h in 0usize..5) {
        for v in 0..g.n() {
            let deep = cover_ball(&g, v, h).unwrap();
            prop_assert_eq!(deep.root_degree(), if h == 0 { 0 } else { g.degree(v) });
            prop_assert!(deep.depth() <= h);
            for k in 0..=h {
                prop_assert_eq!(deep.truncate(k).canonical_code(), cover_ball(&g, v, k).unwrap().canonical_code());
            }
        }
    }

    #[test]
    fn harvested_collections_realize(g in arb_graph(10), h in 1usize..4) {
        let trees = neighborhood_collection(&g, h);
        let table = build_table(&trees, h).unwrap();
        let verdict = check_neighborhood(&table);
        prop_assert!(verdict.graphical(), "{:?}", verdict);
        prop_assert!(erdos_gallai(table.degree_sequence()).is_ok());

        let realization = realize_neighborhood(&trees, h).unwrap();
        prop_assert!(verify_realization(&realization.graph, &trees, h));
        for i in 0..trees.len() {
            for ty in table.types() {
                prop_assert_eq!(realization.typed_degree(i, ty), table.degree(i, ty));
            }
        }
        let again = realize_neighborhood(&trees, h).unwrap();
        prop_assert_eq!(again.graph.to_edge_list(), realization.graph.to_edge_list());
    }
}

/// Ball of radius `h` around `v` in a forest, built by plain BFS.
fn forest_ball(g: &SimpleGraph, v: usize, parent: Option<usize>, h: usize) -> RootedTree {
    if h == 0 {
        return RootedTree::leaf();
    }
    RootedTree::with_children(
        g.neighbors(v)
            .filter(|&w| Some(w) != parent)
            .map(|w| forest_ball(g, w, Some(v), h - 1))
            .collect(),
    )
}

#[test]
fn trees_are_their_own_cover() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for nodes in 1..30 {
        let shape = random_tree(&mut rng, nodes);
        // Flatten the rooted tree into a graph.
        let mut edges = Vec::new();
        let mut stack = vec![(&shape, 0usize)];
        let mut next = 1;
        while let Some((node, id)) = stack.pop() {
            for c in node.children() {
                edges.push((id, next));
                stack.push((c, next));
                next += 1;
            }
        }
        let g = SimpleGraph::from_edges(nodes, edges).unwrap();
        assert!(g.is_forest());
        for v in 0..nodes {
            for h in 0..5 {
                assert_eq!(
                    cover_ball(&g, v, h).unwrap().canonical_code(),
                    forest_ball(&g, v, None, h).canonical_code()
                );
            }
        }
    }
}

fn regular_tree_ball(d: usize, h: usize) -> RootedTree {
    fn below(d: usize, h: usize) -> RootedTree {
        if h == 0 {
            RootedTree::leaf()
        } else {
            RootedTree::with_children(vec![below(d, h - 1); d - 1])
        }
    }
    if h == 0 {
        RootedTree::leaf()
    } else {
        RootedTree::with_children(vec![below(d, h - 1); d])
    }
}

#[test]
fn regular_graphs_unfold_to_regular_trees() {
    let k4 = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let cube = SimpleGraph::from_edges(
        8,
        (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v),
    )
    .unwrap();
    for (g, d) in [(&k4, 3), (&cube, 3)] {
        for h in 0..5 {
            let expected = regular_tree_ball(d, h).canonical_code();
            assert!(neighborhood_codes(g, h).iter().all(|c| *c == expected));
        }
    }
}

#[test]
fn realization_need_not_be_connected() {
    // Two disjoint triangles and C_6 share every cover ball.
    let trees = vec![regular_tree_ball(2, 3); 6];
    let r = realize_neighborhood(&trees, 3).unwrap();
    assert!(verify_realization(&r.graph, &trees, 3));
    assert_eq!(r.graph.degree_sequence(), vec![2; 6]);
}
