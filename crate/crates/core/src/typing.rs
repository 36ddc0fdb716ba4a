//! Edge types of root-incident edges and the typed degree table.
//!
//! For an edge `e = (root, x)` of a tree `t` of depth at most `h`, removing
//! `e` splits `t` into two parts. The part hanging below `x`, rooted at `x`,
//! is kept whole and becomes `s`. The part containing the root is cut back to
//! depth `h - 1` and becomes `r`. The type of `e` is the ordered pair `(r, s)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::tree::{CanonCode, RootedTree};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TypingError {
    #[error("child index {index} out of range for root degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("trees deeper than h = {h} at indices {indices:?}")]
    DepthExceeded { h: usize, indices: Vec<usize> },
    #[error("edge types need h >= 1")]
    ZeroDepth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TypeClass {
    #[serde(rename = "diag")]
    Diagonal,
    A,
    B,
}

impl TypeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            TypeClass::Diagonal => "diag",
            TypeClass::A => "A",
            TypeClass::B => "B",
        }
    }
}

/// Ordered pair `(r, s)` of canonical codes. The class is derived from the
/// string order of the pair: equal codes are diagonal, `r < s` is class A
/// and `r > s` is class B.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeType {
    r: CanonCode,
    s: CanonCode,
}

impl EdgeType {
    pub fn new(r: CanonCode, s: CanonCode) -> Self {
        EdgeType { r, s }
    }

    pub fn r(&self) -> &CanonCode {
        &self.r
    }

    pub fn s(&self) -> &CanonCode {
        &self.s
    }

    pub fn class(&self) -> TypeClass {
        use std::cmp::Ordering::*;
        match self.r.cmp(&self.s) {
            Equal => TypeClass::Diagonal,
            Less => TypeClass::A,
            Greater => TypeClass::B,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.r == self.s
    }

    /// The opposite type `(s, r)`.
    pub fn inverse(&self) -> EdgeType {
        EdgeType {
            r: self.s.clone(),
            s: self.r.clone(),
        }
    }

    /// Representative of `{self, self.inverse()}` that is diagonal or class A.
    pub fn canonical_orientation(&self) -> EdgeType {
        match self.class() {
            TypeClass::B => self.inverse(),
            _ => self.clone(),
        }
    }
}

/// Type of the edge from the root of `t` to its child `child_index`.
pub fn edge_type(t: &RootedTree, child_index: usize, h: usize) -> Result<EdgeType, TypingError> {
    if h == 0 {
        return Err(TypingError::ZeroDepth);
    }
    let degree = t.root_degree();
    if child_index >= degree {
        return Err(TypingError::IndexOutOfRange {
            index: child_index,
            degree,
        });
    }
    if t.depth() > h {
        return Err(TypingError::DepthExceeded { h, indices: vec![0] });
    }
    let s = t.children()[child_index].canonical_code();
    Ok(EdgeType::new(remainder_code(t, child_index, h), s))
}

/// Code of `t` with child `skip` removed, truncated to depth `h - 1`.
fn remainder_code(t: &RootedTree, skip: usize, h: usize) -> CanonCode {
    let mut codes: Vec<CanonCode> = if h == 1 {
        Vec::new()
    } else {
        t.children()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, c)| c.truncate(h - 2).canonical_code())
            .collect()
    };
    CanonCode::from_child_codes(&mut codes)
}

/// Per-vertex counts `d^τ_i` of root-incident edges of each type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedDegreeTable {
    h: usize,
    degree_seq: Vec<usize>,
    types: BTreeMap<EdgeType, Vec<usize>>,
}

impl TypedDegreeTable {
    pub fn n(&self) -> usize {
        self.degree_seq.len()
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// Root degrees `d_i` of the input trees.
    pub fn degree_sequence(&self) -> &[usize] {
        &self.degree_seq
    }

    /// Sum of all root degrees, `2m` for a graphical collection.
    pub fn degree_sum(&self) -> usize {
        self.degree_seq.iter().sum()
    }

    /// Types occurring in at least one tree, in key order.
    pub fn types(&self) -> impl Iterator<Item = &EdgeType> {
        self.types.keys()
    }

    pub fn contains(&self, ty: &EdgeType) -> bool {
        self.types.contains_key(ty)
    }

    /// `(d^τ_i)_i`, or `None` when `τ` does not occur.
    pub fn degrees(&self, ty: &EdgeType) -> Option<&[usize]> {
        self.types.get(ty).map(Vec::as_slice)
    }

    /// `(d^τ_i)_i` with zeros for an absent type.
    pub fn degrees_or_zero(&self, ty: &EdgeType) -> Vec<usize> {
        self.degrees(ty).map_or_else(|| vec![0; self.n()], <[usize]>::to_vec)
    }

    pub fn degree(&self, vertex: usize, ty: &EdgeType) -> usize {
        self.types.get(ty).map_or(0, |d| d[vertex])
    }

    /// `N_τ`, zero for an absent type.
    pub fn total(&self, ty: &EdgeType) -> usize {
        self.types.get(ty).map_or(0, |d| d.iter().sum())
    }

    /// Diagonal types together with the class-A member of every
    /// non-diagonal pair that occurs in either orientation.
    pub fn representatives(&self) -> BTreeSet<EdgeType> {
        self.types.keys().map(EdgeType::canonical_orientation).collect()
    }

    pub fn to_dump(&self) -> TableDump {
        TableDump {
            h: self.h,
            n: self.n(),
            types: self
                .types
                .iter()
                .map(|(ty, degrees)| TypeDump {
                    r: ty.r.as_str().to_owned(),
                    s: ty.s.as_str().to_owned(),
                    class: ty.class(),
                    total: degrees.iter().sum(),
                    degrees: degrees.clone(),
                })
                .collect(),
        }
    }
}

/// JSON shape of a table: `{ "h", "n", "types": [{ "r", "s", "class", "N", "degrees" }] }`.
#[derive(Debug, Clone, Serialize)]
pub struct TableDump {
    pub h: usize,
    pub n: usize,
    pub types: Vec<TypeDump>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeDump {
    pub r: String,
    pub s: String,
    pub class: TypeClass,
    #[serde(rename = "N")]
    pub total: usize,
    pub degrees: Vec<usize>,
}

/// Builds the typed degree table of a collection at depth `h`.
///
/// Every tree must have depth at most `h`. `h = 0` is accepted only for
/// collections of single-node trees, which have no edges to type.
pub fn build_table(trees: &[RootedTree], h: usize) -> Result<TypedDegreeTable, TypingError> {
    let offenders: Vec<usize> = trees
        .iter()
        .enumerate()
        .filter(|(_, t)| t.depth() > h)
        .map(|(i, _)| i)
        .collect();
    if !offenders.is_empty() {
        return Err(TypingError::DepthExceeded { h, indices: offenders });
    }

    let n = trees.len();
    let mut types: BTreeMap<EdgeType, Vec<usize>> = BTreeMap::new();
    for (i, t) in trees.iter().enumerate() {
        // Children with isomorphic subtrees produce the same type.
        let mut by_code: BTreeMap<CanonCode, (usize, usize)> = BTreeMap::new();
        for (c, child) in t.children().iter().enumerate() {
            by_code.entry(child.canonical_code()).or_insert((c, 0)).1 += 1;
        }
        for (s, (first, count)) in by_code {
            let ty = EdgeType::new(remainder_code(t, first, h), s);
            types.entry(ty).or_insert_with(|| vec![0; n])[i] += count;
        }
    }

    Ok(TypedDegreeTable {
        h,
        degree_seq: trees.iter().map(RootedTree::root_degree).collect(),
        types,
    })
}
