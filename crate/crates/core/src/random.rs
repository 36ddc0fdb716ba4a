//! Random trees and graphs for property tests and the self-test.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::SimpleGraph;
use crate::tree::RootedTree;

/// Random recursive tree on `nodes >= 1` nodes: node `i` hangs below a
/// uniformly chosen earlier node.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, nodes: usize) -> RootedTree {
    assert!(nodes >= 1, "a tree has at least one node");
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for i in 1..nodes {
        let parent = rng.gen_range(0..i);
        kids[parent].push(i);
    }
    fn build(v: usize, kids: &[Vec<usize>]) -> RootedTree {
        RootedTree::with_children(kids[v].iter().map(|&c| build(c, kids)).collect())
    }
    build(0, &kids)
}

/// Copy of `t` with every child list shuffled.
pub fn shuffle_children<R: Rng + ?Sized>(t: &RootedTree, rng: &mut R) -> RootedTree {
    let mut children: Vec<RootedTree> = t.children().iter().map(|c| shuffle_children(c, rng)).collect();
    children.shuffle(rng);
    RootedTree::with_children(children)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}
