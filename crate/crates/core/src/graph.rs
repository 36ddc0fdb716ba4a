//! Simple graphs and loopless digraphs on vertices `0..n`, plus the edge-list
//! text format and DOT export.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphParseError {
    #[error("missing header line \"n=<N>\"")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Undirected graph without loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if !self.adj[u].insert(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    /// `true` when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (u, v) in self.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Edge-list text: `n=<N>` then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n={}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Parses the edge-list format. Blank lines and `#` comments are
    /// skipped; endpoints may come in either order.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphParseError> {
        let mut graph: Option<SimpleGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let syntax = |message: String| GraphParseError::Syntax { line, message };
            match graph.as_mut() {
                None => {
                    let n = content
                        .strip_prefix("n=")
                        .ok_or(GraphParseError::MissingHeader)?
                        .trim()
                        .parse::<usize>()
                        .map_err(|e| syntax(format!("bad vertex count: {e}")))?;
                    graph = Some(SimpleGraph::new(n));
                }
                Some(g) => {
                    let fields: Vec<&str> = content.split_whitespace().collect();
                    if fields.len() != 2 {
                        return Err(syntax(format!("expected \"u v\", found {content:?}")));
                    }
                    let parse = |f: &str| f.parse::<usize>().map_err(|e| syntax(format!("bad vertex {f:?}: {e}")));
                    let (u, v) = (parse(fields[0])?, parse(fields[1])?);
                    g.add_edge(u, v)
                        .map_err(|source| GraphParseError::Invalid { line, source })?;
                }
            }
        }
        graph.ok_or(GraphParseError::MissingHeader)
    }
}

/// Directed graph without loops or parallel arcs. Opposite arcs `(i, j)` and
/// `(j, i)` may coexist.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    out: Vec<BTreeSet<usize>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            out: vec![BTreeSet::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [from, to] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if from == to {
            return Err(GraphError::Loop(from));
        }
        if !self.out[from].insert(to) {
            return Err(GraphError::DuplicateEdge(from, to));
        }
        Ok(())
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.out.get(from).is_some_and(|s| s.contains(&to))
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(BTreeSet::len).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().map(move |&v| (u, v)))
    }

    /// `(out-degree, in-degree)` of every vertex.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut deg: Vec<(usize, usize)> = self.out.iter().map(|s| (s.len(), 0)).collect();
        for (_, v) in self.arcs() {
            deg[v].1 += 1;
        }
        deg
    }
}
