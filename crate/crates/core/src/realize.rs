//! Construction of a realization from a passing typed degree table.
//!
//! Each diagonal type gets a simple graph from Havel–Hakimi and each class-A
//! type gets a loopless digraph from Kleitman–Wang, with arc `i -> j` meaning
//! the edge has type `τ` seen from `i` and `τ⁻¹` seen from `j`. The union of
//! all these edge sets is the realization.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Digraph, SimpleGraph};
use crate::sequence::{check_neighborhood, typed_pairs, Verdict};
use crate::tree::RootedTree;
use crate::typing::{build_table, EdgeType, TypeClass, TypingError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("collection is not graphical ({} failing condition(s))", .0.failures().len())]
    NotGraphical(Verdict),
    #[error(transparent)]
    Depth(#[from] TypingError),
    #[error("internal error: greedy realizer got stuck on a sequence that passed its test")]
    InternalInfeasible,
    #[error("internal error: edge {u} {v} contributed twice while gluing")]
    SimplicityViolation { u: usize, v: usize },
}

impl RealizeError {
    /// Errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            RealizeError::InternalInfeasible | RealizeError::SimplicityViolation { .. }
        )
    }
}

/// Simple graph with degree sequence `d`. Repeatedly takes the vertex with
/// the largest residual degree and joins it to the vertices with the next
/// largest residual degrees; ties go to the lower index.
pub fn havel_hakimi(d: &[usize]) -> Result<SimpleGraph, RealizeError> {
    let n = d.len();
    let mut residual = d.to_vec();
    let mut graph = SimpleGraph::new(n);
    let by_residual = |residual: &[usize], a: usize, b: usize| residual[b].cmp(&residual[a]).then(a.cmp(&b));

    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| by_residual(&residual, a, b));
        let Some(&v) = order.first() else { break };
        let need = residual[v];
        if need == 0 {
            break;
        }
        residual[v] = 0;
        let targets = &order[1..];
        if targets.len() < need || residual[targets[need - 1]] == 0 {
            return Err(RealizeError::InternalInfeasible);
        }
        for &u in &targets[..need] {
            residual[u] -= 1;
            graph.add_edge(v, u).map_err(|_| RealizeError::InternalInfeasible)?;
        }
    }
    if graph.degree_sequence() != d {
        return Err(RealizeError::InternalInfeasible);
    }
    Ok(graph)
}

/// Loopless digraph with bi-degrees `(out, in)`. Repeatedly takes the vertex
/// with the lexicographically largest residual `(out, in)` and sends all its
/// remaining arcs to the other vertices with the largest residual in-degree
/// (ties: larger residual out-degree, then lower index).
pub fn kleitman_wang(pairs: &[(usize, usize)]) -> Result<Digraph, RealizeError> {
    let n = pairs.len();
    let mut residual = pairs.to_vec();
    let mut digraph = Digraph::new(n);

    loop {
        let source = (0..n)
            .filter(|&v| residual[v].0 > 0)
            .min_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let Some(v) = source else { break };
        let need = residual[v].0;
        residual[v].0 = 0;

        let mut targets: Vec<usize> = (0..n).filter(|&u| u != v && residual[u].1 > 0).collect();
        if targets.len() < need {
            return Err(RealizeError::InternalInfeasible);
        }
        targets.sort_by(|&a, &b| {
            residual[b]
                .1
                .cmp(&residual[a].1)
                .then(residual[b].0.cmp(&residual[a].0))
                .then(a.cmp(&b))
        });
        for &u in &targets[..need] {
            residual[u].1 -= 1;
            digraph.add_arc(v, u).map_err(|_| RealizeError::InternalInfeasible)?;
        }
    }
    if digraph.bidegrees() != pairs {
        return Err(RealizeError::InternalInfeasible);
    }
    Ok(digraph)
}

/// Per-type piece of a realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Part {
    Undirected(SimpleGraph),
    Directed(Digraph),
}

impl Part {
    fn n(&self) -> usize {
        match self {
            Part::Undirected(g) => g.n(),
            Part::Directed(d) => d.n(),
        }
    }
}

/// Provenance of a realized edge: its type as seen from `tail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTag {
    pub ty: EdgeType,
    pub tail: usize,
}

impl EdgeTag {
    /// Type of the edge as seen from endpoint `vertex`.
    pub fn type_from(&self, vertex: usize) -> EdgeType {
        if vertex == self.tail {
            self.ty.clone()
        } else {
            self.ty.inverse()
        }
    }
}

/// A glued graph with the originating type of every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub graph: SimpleGraph,
    /// Keyed by `(u, v)` with `u < v`.
    pub tags: BTreeMap<(usize, usize), EdgeTag>,
}

impl Realization {
    /// Number of edges at `vertex` whose type, seen from `vertex`, is `ty`.
    pub fn typed_degree(&self, vertex: usize, ty: &EdgeType) -> usize {
        self.graph
            .neighbors(vertex)
            .filter(|&u| {
                let key = (vertex.min(u), vertex.max(u));
                self.tags[&key].type_from(vertex) == *ty
            })
            .count()
    }
}

/// Unions the parts on the common vertex set `0..n`. Directed parts lose
/// their orientation. Any pair contributed twice, whether by two parts or by
/// opposite arcs of one digraph, is a [`RealizeError::SimplicityViolation`].
pub fn glue(n: usize, parts: &BTreeMap<EdgeType, Part>) -> Result<Realization, RealizeError> {
    let mut graph = SimpleGraph::new(n);
    let mut tags = BTreeMap::new();
    for (ty, part) in parts {
        assert_eq!(part.n(), n, "part on a different vertex set");
        let edges: Vec<(usize, usize)> = match part {
            Part::Undirected(g) => g.edges().collect(),
            Part::Directed(d) => d.arcs().collect(),
        };
        for (tail, head) in edges {
            let key = (tail.min(head), tail.max(head));
            if graph.add_edge(tail, head).is_err() {
                return Err(RealizeError::SimplicityViolation { u: key.0, v: key.1 });
            }
            tags.insert(key, EdgeTag { ty: ty.clone(), tail });
        }
    }
    Ok(Realization { graph, tags })
}

/// Full pipeline: table, verdict, per-type realizers, glue.
pub fn realize_neighborhood(trees: &[RootedTree], h: usize) -> Result<Realization, RealizeError> {
    let table = build_table(trees, h)?;
    let verdict = check_neighborhood(&table);
    if !verdict.graphical() {
        return Err(RealizeError::NotGraphical(verdict));
    }

    let mut parts = BTreeMap::new();
    for ty in table.representatives() {
        let part = match ty.class() {
            TypeClass::Diagonal => Part::Undirected(havel_hakimi(&table.degrees_or_zero(&ty))?),
            TypeClass::A => Part::Directed(kleitman_wang(&typed_pairs(&table, &ty))?),
            TypeClass::B => unreachable!("representatives are diagonal or class A"),
        };
        parts.insert(ty, part);
    }
    glue(table.n(), &parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::CanonCode;

    fn t(s: &str) -> RootedTree {
        s.parse().unwrap()
    }

    #[test]
    fn havel_hakimi_examples() {
        let g = havel_hakimi(&[1, 1]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(havel_hakimi(&[0, 0, 0]).unwrap(), SimpleGraph::new(3));
        let d = [3, 3, 2, 2, 1, 1];
        assert_eq!(havel_hakimi(&d).unwrap().degree_sequence(), d);
        let d = [3, 1, 2, 3, 5, 2, 3, 1];
        assert_eq!(havel_hakimi(&d).unwrap().degree_sequence(), d);
    }

    #[test]
    fn havel_hakimi_rejects_infeasible() {
        assert_eq!(havel_hakimi(&[3, 3, 3, 1]), Err(RealizeError::InternalInfeasible));
        assert_eq!(havel_hakimi(&[1]), Err(RealizeError::InternalInfeasible));
    }

    #[test]
    fn kleitman_wang_examples() {
        let d = kleitman_wang(&[(1, 0), (0, 1)]).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(kleitman_wang(&[(0, 0); 4]).unwrap().arc_count(), 0);
        let d = kleitman_wang(&[(2, 2), (2, 2), (2, 2)]).unwrap();
        assert_eq!(d.bidegrees(), vec![(2, 2); 3]);
    }

    #[test]
    fn kleitman_wang_rejects_loops() {
        assert_eq!(kleitman_wang(&[(1, 1)]), Err(RealizeError::InternalInfeasible));
    }

    #[test]
    fn glue_single_and_empty() {
        let ty = EdgeType::new(CanonCode::leaf(), CanonCode::leaf());
        let mut parts = BTreeMap::new();
        parts.insert(
            ty.clone(),
            Part::Undirected(SimpleGraph::from_edges(2, [(0, 1)]).unwrap()),
        );
        let r = glue(2, &parts).unwrap();
        assert_eq!(r.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(r.tags[&(0, 1)].ty, ty);

        let r = glue(3, &BTreeMap::new()).unwrap();
        assert_eq!(r.graph, SimpleGraph::new(3));
    }

    #[test]
    fn glue_detects_double_edges() {
        let leaf = CanonCode::leaf();
        let path = CanonCode::from_canonical("(())").unwrap();
        let mut parts = BTreeMap::new();
        parts.insert(
            EdgeType::new(leaf.clone(), leaf.clone()),
            Part::Undirected(SimpleGraph::from_edges(2, [(0, 1)]).unwrap()),
        );
        parts.insert(
            EdgeType::new(path.clone(), path.clone()),
            Part::Undirected(SimpleGraph::from_edges(2, [(0, 1)]).unwrap()),
        );
        assert_eq!(glue(2, &parts), Err(RealizeError::SimplicityViolation { u: 0, v: 1 }));

        let mut d = Digraph::new(2);
        d.add_arc(0, 1).unwrap();
        d.add_arc(1, 0).unwrap();
        let mut parts = BTreeMap::new();
        parts.insert(EdgeType::new(path, leaf), Part::Directed(d));
        assert!(glue(2, &parts).unwrap_err().is_internal());
    }

    #[test]
    fn realize_single_edge() {
        let r = realize_neighborhood(&[t("(())"), t("(())")], 1).unwrap();
        assert_eq!(r.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn realize_c4() {
        let r = realize_neighborhood(&vec![t("((())(()))"); 4], 2).unwrap();
        assert_eq!(r.graph.degree_sequence(), vec![2; 4]);
        assert_eq!(r.graph.edge_count(), 4);
        assert!(!r.graph.is_forest());
    }

    #[test]
    fn realize_not_graphical() {
        let err = realize_neighborhood(&[t("(())"), t("((()))")], 2).unwrap_err();
        assert!(matches!(err, RealizeError::NotGraphical(ref v) if !v.graphical()));
        assert!(!err.is_internal());
    }

    #[test]
    fn realize_depth_error() {
        let err = realize_neighborhood(&[t("((()))")], 1).unwrap_err();
        assert!(matches!(err, RealizeError::Depth(TypingError::DepthExceeded { .. })));
    }

    #[test]
    fn realize_path_tags_match_table() {
        // P_3 at h = 2: ends see ("()", "(())"), the middle sees the inverse twice.
        let trees = [t("((()))"), t("(()())"), t("((()))")];
        let r = realize_neighborhood(&trees, 2).unwrap();
        assert_eq!(r.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let end = EdgeType::new(CanonCode::leaf(), CanonCode::from_canonical("(())").unwrap());
        assert_eq!(r.typed_degree(0, &end), 1);
        assert_eq!(r.typed_degree(1, &end.inverse()), 2);
        assert_eq!(r.typed_degree(1, &end), 0);
    }
}
