//! Brute-force ground truth on small vertex counts.
//!
//! Every labeled simple graph (or loopless digraph) on `n` vertices is
//! enumerated as a bitmask over vertex pairs. Realizability of a collection is
//! then decided by unfolding each candidate, independently of the typing and
//! degree-sequence machinery it is used to certify.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Digraph, SimpleGraph};
use crate::realize::{realize_neighborhood, RealizeError};
use crate::sequence::check_neighborhood;
use crate::tree::{CanonCode, RootedTree};
use crate::typing::build_table;
use crate::unfold::{neighborhood_codes, verify_realization};

/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_GRAPH_VERTICES: usize = 7;
/// Largest `n` accepted by [`enumerate_digraphs`].
pub const MAX_DIGRAPH_VERTICES: usize = 4;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("n = {n} exceeds the enumeration limit {max}")]
pub struct SizeError {
    pub n: usize,
    pub max: usize,
}

fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labeled simple graph on `0..n`, one per subset of the possible
/// edges.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = SimpleGraph>, SizeError> {
    if n > MAX_GRAPH_VERTICES {
        return Err(SizeError {
            n,
            max: MAX_GRAPH_VERTICES,
        });
    }
    let pairs = unordered_pairs(n);
    let count: u64 = 1 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        SimpleGraph::from_edges(n, edges).expect("distinct pairs")
    }))
}

/// Every loopless digraph on `0..n`, one per subset of the ordered pairs.
pub fn enumerate_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>, SizeError> {
    if n > MAX_DIGRAPH_VERTICES {
        return Err(SizeError {
            n,
            max: MAX_DIGRAPH_VERTICES,
        });
    }
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let count: u64 = 1 << arcs.len();
    Ok((0..count).map(move |mask| {
        let mut d = Digraph::new(n);
        for (b, &(u, v)) in arcs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                d.add_arc(u, v).expect("distinct arcs");
            }
        }
        d
    }))
}

/// First enumerated graph whose cover ball at each vertex `i` matches
/// `trees[i]`.
pub fn exists_realization_bruteforce(trees: &[RootedTree], h: usize) -> Result<Option<SimpleGraph>, SizeError> {
    Ok(enumerate_graphs(trees.len())?.find(|g| verify_realization(g, trees, h)))
}

/// All neighborhood multisets realized by some graph on `n` vertices at
/// depth `h`. Membership is existence of a realization up to relabeling.
#[derive(Debug, Clone)]
pub struct RealizableSet {
    n: usize,
    h: usize,
    collections: HashSet<Vec<CanonCode>>,
}

impl RealizableSet {
    pub fn build(n: usize, h: usize) -> Result<Self, SizeError> {
        let collections = enumerate_graphs(n)?
            .map(|g| {
                let mut codes = neighborhood_codes(&g, h);
                codes.sort();
                codes
            })
            .collect();
        Ok(RealizableSet { n, h, collections })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// Number of distinct neighborhood multisets.
    pub fn len(&self) -> usize {
        self.collections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.collections.is_empty()
    }

    pub fn contains(&self, trees: &[RootedTree]) -> bool {
        if trees.len() != self.n {
            return false;
        }
        let mut codes: Vec<CanonCode> = trees.iter().map(RootedTree::canonical_code).collect();
        codes.sort();
        self.collections.contains(&codes)
    }
}

/// How a mutant was derived from a harvested collection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mutation {
    /// Overwrite one tree with a copy of a non-isomorphic tree of the
    /// collection.
    DuplicateTree,
    /// Remove one leaf at maximum depth from one tree.
    DropLeaf,
    /// Attach a leaf to a node above depth `h`.
    AddLeaf,
    /// Exchange two non-isomorphic root branches between two trees.
    SwapBranches,
}

const MUTATIONS: [Mutation; 4] = [
    Mutation::DuplicateTree,
    Mutation::DropLeaf,
    Mutation::AddLeaf,
    Mutation::SwapBranches,
];

fn paths_at_depth(t: &RootedTree, depth: usize) -> Vec<Vec<usize>> {
    fn walk(t: &RootedTree, depth: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() == depth {
            out.push(path.clone());
            return;
        }
        for (i, c) in t.children().iter().enumerate() {
            path.push(i);
            walk(c, depth, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(t, depth, &mut Vec::new(), &mut out);
    out
}

fn node_mut<'a>(t: &'a mut RootedTree, path: &[usize]) -> &'a mut RootedTree {
    path.iter().fold(t, |node, &i| &mut node.children_mut()[i])
}

/// Applies `kind` at a random position, or returns `None` when the
/// collection offers no place for it.
pub fn mutate<R: Rng + ?Sized>(trees: &[RootedTree], h: usize, kind: Mutation, rng: &mut R) -> Option<Vec<RootedTree>> {
    let n = trees.len();
    if n == 0 {
        return None;
    }
    let codes: Vec<CanonCode> = trees.iter().map(RootedTree::canonical_code).collect();
    let mut out = trees.to_vec();
    match kind {
        Mutation::DuplicateTree => {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| codes[i] != codes[j])
                .collect();
            let &(target, source) = pairs.choose(rng)?;
            out[target] = trees[source].clone();
        }
        Mutation::DropLeaf => {
            let candidates: Vec<usize> = (0..n).filter(|&i| !trees[i].is_leaf()).collect();
            let &i = candidates.choose(rng)?;
            let leaves = paths_at_depth(&trees[i], trees[i].depth());
            let path = leaves.choose(rng)?;
            let (last, parent) = path.split_last()?;
            node_mut(&mut out[i], parent).children_mut().remove(*last);
        }
        Mutation::AddLeaf => {
            if h == 0 {
                return None;
            }
            let i = rng.gen_range(0..n);
            let spots: Vec<Vec<usize>> = (0..h).flat_map(|d| paths_at_depth(&trees[i], d)).collect();
            let path = spots.choose(rng)?;
            node_mut(&mut out[i], path).children_mut().push(RootedTree::leaf());
        }
        Mutation::SwapBranches => {
            let mut options = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for (a, ca) in trees[i].children().iter().enumerate() {
                        for (b, cb) in trees[j].children().iter().enumerate() {
                            if !ca.is_isomorphic(cb) {
                                options.push((i, a, j, b));
                            }
                        }
                    }
                }
            }
            let &(i, a, j, b) = options.choose(rng)?;
            let branch_a = trees[i].children()[a].clone();
            let branch_b = trees[j].children()[b].clone();
            out[i].children_mut()[a] = branch_b;
            out[j].children_mut()[b] = branch_a;
        }
    }
    Some(out)
}

/// One checker/oracle mismatch.
#[derive(Debug, Clone, Serialize)]
pub struct Disagreement {
    pub collection: Vec<String>,
    pub stage: &'static str,
    pub checker: bool,
    pub oracle: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub h: usize,
    pub graphs: usize,
    pub mutants: usize,
    pub cases_total: usize,
    pub agreements: usize,
    /// Mutants that the checker and oracle both rejected.
    pub negatives_confirmed: usize,
    pub simplicity_violations: usize,
    pub disagreements: Vec<Disagreement>,
}

impl OracleReport {
    /// `true` when the checker and realizer agree with the oracle everywhere.
    pub fn certified(&self) -> bool {
        self.disagreements.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossValidation {
    pub n: usize,
    pub h: usize,
    pub mutants_per_case: usize,
    pub seed: u64,
}

impl CrossValidation {
    pub fn new(n: usize, h: usize) -> Self {
        CrossValidation {
            n,
            h,
            mutants_per_case: 3,
            seed: 0,
        }
    }
}

fn codes_of(trees: &[RootedTree]) -> Vec<String> {
    trees.iter().map(RootedTree::serialize).collect()
}

/// Runs the checker against the oracle on every graph with `n` vertices and
/// on mutants of the harvested collections.
///
/// Harvested collections must be accepted, realized and verified. Mutants
/// must get the same verdict as brute-force existence, and accepted mutants
/// must also realize and verify.
pub fn cross_validate(cfg: CrossValidation) -> Result<OracleReport, SizeError> {
    let CrossValidation {
        n,
        h,
        mutants_per_case,
        seed,
    } = cfg;
    let realizable = RealizableSet::build(n, h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ (h as u64));
    let mut report = OracleReport {
        n,
        h,
        graphs: 0,
        mutants: 0,
        cases_total: 0,
        agreements: 0,
        negatives_confirmed: 0,
        simplicity_violations: 0,
        disagreements: Vec::new(),
    };

    for g in enumerate_graphs(n)? {
        report.graphs += 1;
        let trees: Vec<RootedTree> = neighborhood_codes(&g, h).iter().map(CanonCode::to_tree).collect();
        judge(&trees, h, true, &mut report);

        let mut made = 0;
        for _ in 0..mutants_per_case * 4 {
            if made == mutants_per_case {
                break;
            }
            let kind = *MUTATIONS.choose(&mut rng).expect("non-empty");
            if let Some(mutant) = mutate(&trees, h, kind, &mut rng) {
                made += 1;
                report.mutants += 1;
                let exists = realizable.contains(&mutant);
                judge(&mutant, h, exists, &mut report);
            }
        }
    }
    report.cases_total = report.graphs + report.mutants;
    Ok(report)
}

fn judge(trees: &[RootedTree], h: usize, exists: bool, report: &mut OracleReport) {
    let table = build_table(trees, h).expect("cases stay within depth h");
    let graphical = check_neighborhood(&table).graphical();
    let mut disagree = |stage: &'static str, detail: String| {
        report.disagreements.push(Disagreement {
            collection: codes_of(trees),
            stage,
            checker: graphical,
            oracle: exists,
            detail,
        });
    };
    if graphical != exists {
        disagree("verdict", String::new());
        return;
    }
    if !graphical {
        report.negatives_confirmed += 1;
        report.agreements += 1;
        return;
    }
    match realize_neighborhood(trees, h) {
        Ok(r) if verify_realization(&r.graph, trees, h) => report.agreements += 1,
        Ok(r) => disagree("verify", r.graph.to_edge_list()),
        Err(e) => {
            if matches!(e, RealizeError::SimplicityViolation { .. }) {
                report.simplicity_violations += 1;
            }
            disagree("realize", e.to_string());
        }
    }
}
