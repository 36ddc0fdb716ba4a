//! Unlabeled rooted trees and their balanced-parentheses encoding.
//!
//! A tree is written as a single balanced-parentheses word: the outermost
//! pair is the root and each nested pair is a child subtree. The same
//! alphabet doubles as the AHU canonical form, where the children codes of
//! every node are sorted ascending, so two trees are isomorphic exactly when
//! their [`CanonCode`]s are equal.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty tree encoding")]
    Empty,
    #[error("unexpected character {found:?} at offset {offset}")]
    InvalidChar { found: char, offset: usize },
    #[error("unbalanced parentheses at offset {offset}")]
    Unbalanced { offset: usize },
    #[error("trailing input after the root closes at offset {offset}")]
    TrailingInput { offset: usize },
    #[error("encoding is not in canonical order")]
    NotCanonical,
}

/// Error for a tree collection file, carrying the 1-based line number.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct CollectionError {
    pub line: usize,
    #[source]
    pub source: ParseError,
}

/// An unlabeled rooted tree. Child order is a storage artifact; use
/// [`RootedTree::canonical_code`] to compare trees up to isomorphism.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RootedTree {
    children: Vec<RootedTree>,
}

/// AHU canonical code of a rooted tree. Equality is rooted-tree isomorphism.
///
/// Codes are ordered lexicographically over the alphabet `')' < '('`, so a
/// leaf `"()"` sorts before every larger tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonCode(String);

impl Ord for CanonCode {
    fn cmp(&self, other: &Self) -> Ordering {
        // '(' and ')' are adjacent bytes; complementing flips their order.
        self.0.bytes().map(|b| !b).cmp(other.0.bytes().map(|b| !b))
    }
}

impl PartialOrd for CanonCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl CanonCode {
    /// Code of the single-node tree.
    pub fn leaf() -> Self {
        CanonCode("()".to_owned())
    }

    /// Accepts `s` only if it is already in canonical form.
    pub fn from_canonical(s: &str) -> Result<Self, ParseError> {
        let tree: RootedTree = s.parse()?;
        let code = tree.canonical_code();
        if code.0 == s.trim() {
            Ok(code)
        } else {
            Err(ParseError::NotCanonical)
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Number of nodes in the encoded tree.
    pub fn node_count(&self) -> usize {
        self.0.len() / 2
    }

    pub fn to_tree(&self) -> RootedTree {
        // Codes are only built from valid trees.
        self.0.parse().expect("canonical code is a valid encoding")
    }

    /// Builds the code of a node from the codes of its children, sorting
    /// them in place.
    pub(crate) fn from_child_codes(children: &mut [CanonCode]) -> Self {
        children.sort_unstable();
        let len = 2 + children.iter().map(|c| c.0.len()).sum::<usize>();
        let mut out = String::with_capacity(len);
        out.push('(');
        for c in children.iter() {
            out.push_str(&c.0);
        }
        out.push(')');
        CanonCode(out)
    }
}

impl fmt::Display for CanonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for CanonCode {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl RootedTree {
    /// The single-node tree.
    pub fn leaf() -> Self {
        RootedTree { children: Vec::new() }
    }

    pub fn with_children(children: Vec<RootedTree>) -> Self {
        RootedTree { children }
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn children_mut(&mut self) -> &mut Vec<RootedTree> {
        &mut self.children
    }

    pub fn into_children(self) -> Vec<RootedTree> {
        self.children
    }

    /// Number of children of the root.
    pub fn root_degree(&self) -> usize {
        self.children.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(RootedTree::node_count).sum::<usize>()
    }

    /// Length of the longest root-to-leaf path, in edges.
    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    pub fn canonical_code(&self) -> CanonCode {
        let mut codes: Vec<CanonCode> = self.children.iter().map(RootedTree::canonical_code).collect();
        CanonCode::from_child_codes(&mut codes)
    }

    /// Same tree with every child list in canonical order.
    pub fn canonicalize(&self) -> RootedTree {
        self.canonical_code().to_tree()
    }

    pub fn is_isomorphic(&self, other: &RootedTree) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    /// Ball of radius `k` around the root: every node at depth at most `k`.
    pub fn truncate(&self, k: usize) -> RootedTree {
        if k == 0 {
            return RootedTree::leaf();
        }
        RootedTree {
            children: self.children.iter().map(|c| c.truncate(k - 1)).collect(),
        }
    }

    /// Canonical text form. Output is always canonical, so isomorphic trees
    /// serialize identically.
    pub fn serialize(&self) -> String {
        self.canonical_code().into_string()
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_code().as_str())
    }
}

impl FromStr for RootedTree {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        parse_tree(text)
    }
}

/// Parses a single balanced-parentheses word. Surrounding whitespace is
/// ignored.
pub fn parse_tree(text: &str) -> Result<RootedTree, ParseError> {
    let lead = text.len() - text.trim_start().len();
    let word = text.trim();
    if word.is_empty() {
        return Err(ParseError::Empty);
    }

    // Open nodes; the last entry collects children of the innermost node.
    let mut stack: Vec<Vec<RootedTree>> = Vec::new();
    let mut root = None;
    for (i, ch) in word.char_indices() {
        let offset = lead + i;
        if root.is_some() {
            return Err(ParseError::TrailingInput { offset });
        }
        match ch {
            '(' => stack.push(Vec::new()),
            ')' => {
                let children = stack.pop().ok_or(ParseError::Unbalanced { offset })?;
                let node = RootedTree { children };
                match stack.last_mut() {
                    Some(parent) => parent.push(node),
                    None => root = Some(node),
                }
            }
            other => return Err(ParseError::InvalidChar { found: other, offset }),
        }
    }
    root.ok_or(ParseError::Unbalanced {
        offset: lead + word.len(),
    })
}

pub fn canonical_code(t: &RootedTree) -> CanonCode {
    t.canonical_code()
}

pub fn depth(t: &RootedTree) -> usize {
    t.depth()
}

pub fn truncate(t: &RootedTree, k: usize) -> RootedTree {
    t.truncate(k)
}

pub fn serialize(t: &RootedTree) -> String {
    t.serialize()
}

/// Parses a tree collection file: one word per line, blank lines and lines
/// starting with `#` skipped. Line order gives vertex indices.
pub fn parse_collection(text: &str) -> Result<Vec<RootedTree>, CollectionError> {
    Ok(parse_collection_lines(text)?.into_iter().map(|(_, t)| t).collect())
}

/// Like [`parse_collection`], keeping the 1-based source line of each tree.
pub fn parse_collection_lines(text: &str) -> Result<Vec<(usize, RootedTree)>, CollectionError> {
    let mut trees = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tree = parse_tree(content).map_err(|source| CollectionError { line: idx + 1, source })?;
        trees.push((idx + 1, tree));
    }
    Ok(trees)
}

/// Writes one canonical code per line.
pub fn write_collection(trees: &[RootedTree]) -> String {
    let mut out = String::new();
    for t in trees {
        out.push_str(t.canonical_code().as_str());
        out.push('\n');
    }
    out
}
