//! Balls in the universal cover of a graph.
//!
//! The depth-`h` ball around a lift of `v` is the tree of non-backtracking
//! walks of length at most `h` starting at `v`. It is computed branch by
//! branch: the branch entered at `w` from `u` with `k` steps left depends only
//! on `(w, u, k)`, so results are memoized on that triple and the (possibly
//! infinite) cover is never built.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::tree::{CanonCode, RootedTree};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("vertex {vertex} out of range for n = {n}")]
pub struct VertexOutOfRange {
    pub vertex: usize,
    pub n: usize,
}

/// A cover ball together with the vertex it was unfolded from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverBall {
    pub tree: RootedTree,
    pub base_vertex: usize,
}

/// Memoized unfolding of one graph.
pub struct Unfolder<'g> {
    graph: &'g SimpleGraph,
    memo: HashMap<(usize, usize, usize), CanonCode>,
}

impl<'g> Unfolder<'g> {
    pub fn new(graph: &'g SimpleGraph) -> Self {
        Unfolder {
            graph,
            memo: HashMap::new(),
        }
    }

    /// Canonical code of the depth-`h` cover ball at `v`.
    pub fn ball_code(&mut self, v: usize, h: usize) -> Result<CanonCode, VertexOutOfRange> {
        let n = self.graph.n();
        if v >= n {
            return Err(VertexOutOfRange { vertex: v, n });
        }
        Ok(self.expand(v, None, h))
    }

    fn expand(&mut self, at: usize, from: Option<usize>, left: usize) -> CanonCode {
        if left == 0 {
            return CanonCode::leaf();
        }
        if let Some(from) = from {
            if let Some(code) = self.memo.get(&(at, from, left)) {
                return code.clone();
            }
        }
        let graph = self.graph;
        let mut codes: Vec<CanonCode> = graph
            .neighbors(at)
            .filter(|&w| Some(w) != from)
            .map(|w| self.expand(w, Some(at), left - 1))
            .collect();
        let code = CanonCode::from_child_codes(&mut codes);
        if let Some(from) = from {
            self.memo.insert((at, from, left), code.clone());
        }
        code
    }
}

/// Depth-`h` ball of the universal cover around a lift of `v`, in canonical
/// form.
pub fn cover_ball(graph: &SimpleGraph, v: usize, h: usize) -> Result<RootedTree, VertexOutOfRange> {
    Ok(Unfolder::new(graph).ball_code(v, h)?.to_tree())
}

/// Cover balls of every vertex, as canonical codes.
pub fn neighborhood_codes(graph: &SimpleGraph, h: usize) -> Vec<CanonCode> {
    let mut unfolder = Unfolder::new(graph);
    (0..graph.n())
        .map(|v| unfolder.ball_code(v, h).expect("vertex in range"))
        .collect()
}

/// `[cover_ball(graph, i, h) for i in 0..n]`.
pub fn neighborhood_collection(graph: &SimpleGraph, h: usize) -> Vec<RootedTree> {
    neighborhood_codes(graph, h).iter().map(CanonCode::to_tree).collect()
}

/// First vertex whose cover ball differs from its tree, if any. A length
/// mismatch reports the first index past the shorter side.
pub fn first_mismatch(graph: &SimpleGraph, trees: &[RootedTree], h: usize) -> Option<usize> {
    let n = graph.n();
    let mut unfolder = Unfolder::new(graph);
    for (i, t) in trees.iter().enumerate().take(n) {
        if unfolder.ball_code(i, h).expect("vertex in range") != t.canonical_code() {
            return Some(i);
        }
    }
    (trees.len() != n).then(|| trees.len().min(n))
}

/// `true` iff the cover ball of every vertex `i` is isomorphic to `trees[i]`.
pub fn verify_realization(graph: &SimpleGraph, trees: &[RootedTree], h: usize) -> bool {
    first_mismatch(graph, trees, h).is_none()
}
