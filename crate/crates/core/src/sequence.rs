//! Graphicality tests for degree sequences and the full neighborhood verdict.
//!
//! Undirected sequences use the Erdős–Gallai inequalities. Bi-degree
//! sequences use the Fulkerson–Chen–Anstee inequalities in their loopless
//! form: pairs are sorted by decreasing `(out, in)` and the first `k` terms on
//! the right are capped at `k - 1`.

use serde::{Serialize, Serializer};

use crate::tree::RootedTree;
use crate::typing::{build_table, EdgeType, TypedDegreeTable, TypingError};

/// Why a sequence is not (di)graphical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceViolation {
    /// Degree sum is odd.
    OddSum,
    /// Out-degree and in-degree sums differ.
    SumMismatch,
    /// The `k`-th inequality fails; `k` is the smallest such index.
    Inequality { k: usize },
    /// An entry exceeds `n - 1` while every inequality holds. The
    /// inequalities already exclude this, so it signals an arithmetic bug.
    EntryTooLarge { vertex: usize },
}

impl SequenceViolation {
    /// Violating `k`, or 0 for parity, balance and range failures.
    pub fn witness_k(self) -> usize {
        match self {
            SequenceViolation::Inequality { k } => k,
            _ => 0,
        }
    }
}

/// Decides whether `d` is the degree sequence of a simple graph.
pub fn erdos_gallai(d: &[usize]) -> Result<(), SequenceViolation> {
    let n = d.len();
    if d.iter().sum::<usize>() % 2 != 0 {
        return Err(SequenceViolation::OddSum);
    }
    let mut sorted = d.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));

    // suffix[i] = sorted[i] + ... + sorted[n-1]
    let mut suffix = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + sorted[i];
    }

    let mut lhs = 0usize;
    for k in 1..=n {
        lhs += sorted[k - 1];
        // Entries at positions >= k that are at least k contribute k each.
        let at_least_k = sorted.partition_point(|&x| x >= k).max(k);
        let rhs = k * (k - 1) + k * (at_least_k - k) + suffix[at_least_k];
        if lhs > rhs {
            return Err(SequenceViolation::Inequality { k });
        }
    }

    if let Some(vertex) = d.iter().position(|&x| x + 1 > n) {
        return Err(SequenceViolation::EntryTooLarge { vertex });
    }
    Ok(())
}

/// Decides whether `(out, in)` pairs are the bi-degrees of a loopless digraph
/// without parallel arcs.
pub fn fulkerson_chen_anstee(pairs: &[(usize, usize)]) -> Result<(), SequenceViolation> {
    let n = pairs.len();
    let out_sum: usize = pairs.iter().map(|p| p.0).sum();
    let in_sum: usize = pairs.iter().map(|p| p.1).sum();
    if out_sum != in_sum {
        return Err(SequenceViolation::SumMismatch);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| pairs[j].cmp(&pairs[i]).then(i.cmp(&j)));
    let ins: Vec<usize> = order.iter().map(|&i| pairs[i].1.min(n + 1)).collect();

    // at_least[j] = #{i : in_i >= j}
    let mut hist = vec![0usize; n + 2];
    for &b in &ins {
        hist[b] += 1;
    }
    let mut at_least = vec![0usize; n + 3];
    for j in (0..n + 2).rev() {
        at_least[j] = at_least[j + 1] + hist[j];
    }

    // rhs(k) = sum_i min(in_i, k) - #{i <= k : in_i >= k}
    let mut capped_total = 0usize;
    let mut prefix_hist = vec![0usize; n + 2];
    let mut prefix_at_least = 0usize;
    let mut lhs = 0usize;
    for k in 1..=n {
        lhs += pairs[order[k - 1]].0;
        capped_total += at_least[k];
        prefix_at_least -= prefix_hist[k - 1];
        let b = ins[k - 1];
        prefix_hist[b] += 1;
        if b >= k {
            prefix_at_least += 1;
        }
        let rhs = capped_total - prefix_at_least;
        if lhs > rhs {
            return Err(SequenceViolation::Inequality { k });
        }
    }

    if let Some(vertex) = pairs.iter().position(|&(a, b)| a.max(b) + 1 > n) {
        return Err(SequenceViolation::EntryTooLarge { vertex });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FailureKind {
    OddDiagonalSum,
    UnbalancedPair,
    EGViolation,
    DirectedEGViolation,
    DepthExceeded,
}

/// The type a failure is attached to. Non-diagonal failures are reported on
/// the class-A member of the pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeKey {
    Global,
    Type(EdgeType),
}

impl Serialize for TypeKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            TypeKey::Global => serializer.serialize_str("global"),
            TypeKey::Type(ty) => ty.serialize(serializer),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FailureRecord {
    #[serde(rename = "type")]
    pub type_key: TypeKey,
    pub kind: FailureKind,
    /// Smallest violated inequality for EG failures. For `DepthExceeded` it
    /// holds the offending vertex index.
    #[serde(rename = "k")]
    pub witness_k: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    failures: Vec<FailureRecord>,
}

impl Verdict {
    pub fn from_failures(mut failures: Vec<FailureRecord>) -> Self {
        failures.sort();
        Verdict { failures }
    }

    pub fn graphical(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[FailureRecord] {
        &self.failures
    }

    /// Merges two verdicts; the result does not depend on argument order.
    pub fn merge(mut self, other: Verdict) -> Verdict {
        self.failures.extend(other.failures);
        Verdict::from_failures(self.failures)
    }

    pub fn report(&self, h: usize) -> VerdictReport<'_> {
        VerdictReport {
            graphical: self.graphical(),
            h,
            failures: &self.failures,
        }
    }
}

/// JSON shape `{ "graphical", "h", "failures": [{ "type", "kind", "k" }] }`.
#[derive(Debug, Serialize)]
pub struct VerdictReport<'a> {
    pub graphical: bool,
    pub h: usize,
    pub failures: &'a [FailureRecord],
}

/// Checks every diagonal type with Erdős–Gallai and every non-diagonal pair
/// with Fulkerson–Chen–Anstee, collecting all failures.
pub fn check_neighborhood(table: &TypedDegreeTable) -> Verdict {
    let mut failures = Vec::new();
    for ty in table.representatives() {
        if ty.is_diagonal() {
            let d = table.degrees_or_zero(&ty);
            if let Err(v) = erdos_gallai(&d) {
                let (kind, k) = match v {
                    SequenceViolation::OddSum => (FailureKind::OddDiagonalSum, None),
                    SequenceViolation::Inequality { k } => (FailureKind::EGViolation, Some(k)),
                    _ => (FailureKind::EGViolation, None),
                };
                failures.push(FailureRecord {
                    type_key: TypeKey::Type(ty),
                    kind,
                    witness_k: k,
                });
            }
        } else {
            let pairs = typed_pairs(table, &ty);
            if let Err(v) = fulkerson_chen_anstee(&pairs) {
                let (kind, k) = match v {
                    SequenceViolation::SumMismatch => (FailureKind::UnbalancedPair, None),
                    SequenceViolation::Inequality { k } => (FailureKind::DirectedEGViolation, Some(k)),
                    _ => (FailureKind::DirectedEGViolation, None),
                };
                failures.push(FailureRecord {
                    type_key: TypeKey::Type(ty),
                    kind,
                    witness_k: k,
                });
            }
        }
    }
    Verdict::from_failures(failures)
}

/// `(d^τ_i, d^{τ⁻¹}_i)` for every vertex.
pub fn typed_pairs(table: &TypedDegreeTable, ty: &EdgeType) -> Vec<(usize, usize)> {
    let out = table.degrees_or_zero(ty);
    let inn = table.degrees_or_zero(&ty.inverse());
    out.into_iter().zip(inn).collect()
}

/// Like [`check_neighborhood`] on a raw collection, reporting trees deeper
/// than `h` as global `DepthExceeded` failures instead of an error.
pub fn check_collection(trees: &[RootedTree], h: usize) -> Verdict {
    match build_table(trees, h) {
        Ok(table) => check_neighborhood(&table),
        Err(TypingError::DepthExceeded { indices, .. }) => Verdict::from_failures(
            indices
                .into_iter()
                .map(|i| FailureRecord {
                    type_key: TypeKey::Global,
                    kind: FailureKind::DepthExceeded,
                    witness_k: Some(i),
                })
                .collect(),
        ),
        Err(_) => unreachable!("build_table only fails on depth"),
    }
}
