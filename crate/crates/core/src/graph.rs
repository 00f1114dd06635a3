//! Simple undirected graphs and validated trees.
//!
//! Vertices are dense `0..n` ids. Edges are stored normalized (smaller id
//! first) and sorted, so two graphs built from the same edge set compare equal
//! no matter how the input was ordered.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("a tree on {n} vertices has {expected} edges, found {found}")]
    WrongEdgeCount {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge set is disconnected")]
    Disconnected,
    #[error("relabeling is not a permutation of 0..{0}")]
    BadPermutation(usize),
}

/// A simple undirected graph on `n >= 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalized edges in ascending order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Open neighborhood of `v`, ascending.
    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex], GraphError> {
        self.adj
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::VertexOutOfRange { vertex: v, n: self.n })
    }

    pub(crate) fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adj
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.neighbors(v).map(<[Vertex]>::len)
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence(self.adj.iter().map(Vec::len).collect())
    }

    pub fn is_connected(&self) -> bool {
        bfs_distances(&self.adj, 0).iter().all(Option::is_some)
    }
}

/// A connected acyclic graph. Construction checks `|E| = n - 1` and
/// connectivity, which together rule out cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree(Graph);

impl Tree {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_graph(Graph::new(n, edges)?)
    }

    pub fn from_graph(graph: Graph) -> Result<Self, GraphError> {
        let expected = graph.n - 1;
        if graph.edges.len() != expected {
            return Err(GraphError::WrongEdgeCount {
                n: graph.n,
                expected,
                found: graph.edges.len(),
            });
        }
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(Tree(graph))
    }

    pub fn as_graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// Rename vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Tree, GraphError> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(GraphError::BadPermutation(n));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::BadPermutation(n));
            }
        }
        Tree::new(n, self.edges().iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// True for trees with no vertex of degree above 2.
    pub fn is_path(&self) -> bool {
        self.adj.iter().all(|nb| nb.len() <= 2)
    }

    /// True when one vertex is adjacent to every other (`n <= 3` paths count).
    pub fn is_star(&self) -> bool {
        self.n() <= 2 || self.adj.iter().any(|nb| nb.len() == self.n() - 1)
    }

    /// Edge count of a longest path; 0 for a single vertex.
    pub fn diameter(&self) -> usize {
        let first = bfs_distances(&self.adj, 0);
        let far = farthest(&first);
        let second = bfs_distances(&self.adj, far);
        second[farthest(&second)].unwrap_or(0)
    }

    /// The one or two vertices left after repeatedly stripping all leaves.
    pub fn center(&self) -> Vec<Vertex> {
        let n = self.n();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in &self.adj[leaf] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let center = self.center();
        let code = center
            .iter()
            .map(|&root| rooted_code(&self.adj, root))
            .min()
            .expect("a tree has at least one central vertex");
        CanonicalCode(code)
    }
}

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl From<Tree> for Graph {
    fn from(t: Tree) -> Graph {
        t.0
    }
}

/// Per-vertex degrees, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Deref for DegreeSequence {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Isomorphism-class key for trees: the AHU parenthesis encoding rooted at the
/// center, minimized over both centers when the tree is bicentral.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Only '(' and ')' are ever stored.
        f.write_str(std::str::from_utf8(&self.0).map_err(|_| fmt::Error)?)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn make_path(n: usize) -> Result<Tree, GraphError> {
    Tree::new(n, (1..n).map(|v| (v - 1, v)))
}

/// Vertex 0 is the center.
pub fn make_star(n: usize) -> Result<Tree, GraphError> {
    Tree::new(n, (1..n).map(|v| (0, v)))
}

/// A center (vertex 0) with one pendant path per entry of `legs`.
pub fn make_spider(legs: &[usize]) -> Result<Tree, GraphError> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::new(next, edges)
}

fn bfs_distances(adj: &[Vec<Vertex>], source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0);
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn farthest(dist: &[Option<usize>]) -> Vertex {
    let mut best = 0;
    for (v, d) in dist.iter().enumerate() {
        if d > &dist[best] {
            best = v;
        }
    }
    best
}

fn rooted_code(adj: &[Vec<Vertex>], root: Vertex) -> Vec<u8> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in &adj[u] {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = adj[u]
            .iter()
            .filter(|&&w| parent[w] == u && w != root)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[u] = code;
    }
    std::mem::take(&mut codes[root])
}
