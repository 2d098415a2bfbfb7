//! Immutable simple graphs on at most 32 vertices with bitmask adjacency.

use std::fmt;
use thiserror::Error;

pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} out of range 1..={MAX_VERTICES}")]
    BadOrder(usize),
    #[error("edge endpoint {0} out of range for {1} vertices")]
    EndpointOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set contains {0}, out of range for {1} vertices")]
    BadVertexSet(usize, usize),
    #[error("combined graph would have {0} vertices, limit is {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("thickening clique size must be positive")]
    EmptyThickeningClique,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Subset of vertices 0..n-1, stored as a bitmask.
pub type VertexSet = u32;

pub fn set_of(vs: &[usize]) -> VertexSet {
    vs.iter().fold(0, |m, &v| m | (1 << v))
}

pub fn set_members(mut s: VertexSet) -> Vec<usize> {
    let mut out = Vec::with_capacity(s.count_ones() as usize);
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        out.push(v);
        s &= s - 1;
    }
    out
}

pub fn full_set(n: usize) -> VertexSet {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mut adj = vec![0u32; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, &[]).expect("order in range")
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = full_set(n) & !(1 << v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("order in range")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("order in range")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        full_set(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in set_members(self.adj[u] & !((1u32 << (u + 1)).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        set_members(s)
            .iter()
            .all(|&v| s & !self.adj[v] & !(1 << v) == 0)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        set_members(s).iter().all(|&v| s & self.adj[v] == 0)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.all_vertices())
    }

    fn is_connected_within(&self, s: VertexSet) -> bool {
        if s == 0 {
            return true;
        }
        let start = s.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in set_members(frontier) {
                next |= self.adj[v] & s & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == s
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.all_vertices())
    }

    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = s;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u32 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in set_members(frontier) {
                    next |= self.adj[v] & s & !comp;
                }
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut g = self.disjoint_union(other)?;
        let left = full_set(self.n);
        let right = full_set(n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = self.adj.clone();
        for v in 0..other.n {
            adj.push(other.adj[v] << self.n);
        }
        Ok(Graph { n, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = self.all_vertices();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph; vertices are relabeled in increasing order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s & !self.all_vertices() != 0 {
            let bad = (s & !self.all_vertices()).trailing_zeros() as usize;
            return Err(GraphError::BadVertexSet(bad, self.n));
        }
        let members = set_members(s);
        if members.is_empty() {
            return Err(GraphError::BadOrder(0));
        }
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![0u32; members.len()];
        for (i, &v) in members.iter().enumerate() {
            for w in set_members(self.adj[v] & s) {
                adj[i] |= 1 << index[w];
            }
        }
        Ok(Graph {
            n: members.len(),
            adj,
        })
    }

    /// Replace each vertex x by a clique of `sizes[x]` vertices, joining
    /// cliques exactly along the original edges.
    pub fn thicken(&self, sizes: &[usize]) -> Result<Graph, GraphError> {
        assert_eq!(sizes.len(), self.n, "one size per vertex");
        if sizes.iter().any(|&s| s == 0) {
            return Err(GraphError::EmptyThickeningClique);
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(GraphError::TooLarge(total));
        }
        let mut block = vec![0u32; self.n];
        let mut start = 0usize;
        for v in 0..self.n {
            block[v] = (full_set(start + sizes[v])) & !full_set(start);
            start += sizes[v];
        }
        let mut adj = vec![0u32; total];
        for v in 0..self.n {
            let mut reach = block[v];
            for w in set_members(self.adj[v]) {
                reach |= block[w];
            }
            for x in set_members(block[v]) {
                adj[x] = reach & !(1 << x);
            }
        }
        Ok(Graph { n: total, adj })
    }

    /// Relabel through a permutation: vertex v of self becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u32; self.n];
        for v in 0..self.n {
            for w in set_members(self.adj[v]) {
                adj[perm[v]] |= 1 << perm[w];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Graph with one edge removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// Text format: first line "n m", then m lines "u v".
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse("bad header".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse("bad header".into()))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line: {line}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line: {line}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse(format!(
                "expected {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
