//! Multigraphs as symmetric multiplicity tables; source of line graphs.

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    mu: Vec<Vec<u32>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: &[(usize, usize, u32)]) -> Result<Multigraph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mut mu = vec![vec![0u32; n]; n];
        for &(u, v, m) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            mu[u][v] += m;
            mu[v][u] += m;
        }
        Ok(Multigraph { n, mu })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self, u: usize, v: usize) -> u32 {
        self.mu[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.mu[v].iter().map(|&m| m as usize).sum()
    }

    pub fn edge_instance_count(&self) -> usize {
        (0..self.n)
            .map(|u| {
                (u + 1..self.n)
                    .map(|v| self.mu[u][v] as usize)
                    .sum::<usize>()
            })
            .sum()
    }

    /// Edge instances in a stable order: lexicographic by endpoints, then
    /// copy index. This fixes the line-graph vertex numbering.
    pub fn edge_instances(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                for c in 0..self.mu[u][v] {
                    out.push((u, v, c));
                }
            }
        }
        out
    }

    /// One line-graph vertex per edge instance; two adjacent iff the edges
    /// share an endpoint (parallel copies are pairwise adjacent).
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        let inst = self.edge_instances();
        if inst.len() > MAX_VERTICES {
            return Err(GraphError::TooLarge(inst.len()));
        }
        if inst.is_empty() {
            return Err(GraphError::BadOrder(0));
        }
        let mut edges = Vec::new();
        for i in 0..inst.len() {
            for j in i + 1..inst.len() {
                let (a, b, _) = inst[i];
                let (c, d, _) = inst[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(inst.len(), &edges)
    }

    pub fn is_bipartite(&self) -> Option<(u32, u32)> {
        self.support().bipartition()
    }

    /// Underlying simple graph.
    pub fn support(&self) -> Graph {
        let edges: Vec<_> = (0..self.n)
            .flat_map(|u| {
                (u + 1..self.n)
                    .filter(move |&v| self.mu[u][v] > 0)
                    .map(move |v| (u, v))
            })
            .collect();
        Graph::new(self.n, &edges).expect("order validated at construction")
    }

    /// Text format: "n m" then m lines "u v mult".
    pub fn parse(text: &str) -> Result<Multigraph, GraphError> {
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
            let parts: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<Result<_, _>>()
                .map_err(|_| GraphError::Parse(format!("bad edge line: {line}")))?;
            if parts.len() != 3 {
                return Err(GraphError::Parse(format!("bad edge line: {line}")));
            }
            edges.push((parts[0], parts[1], parts[2] as u32));
        }
        if edges.len() != m {
            return Err(GraphError::Parse("missing edge lines".into()));
        }
        Multigraph::new(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut body = String::new();
        let mut m = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.mu[u][v] > 0 {
                    body.push_str(&format!("{u} {v} {}\n", self.mu[u][v]));
                    m += 1;
                }
            }
        }
        format!("{} {}\n{}", self.n, m, body)
    }
}

/// Graph::bipartition lives here to keep graph.rs lean.
impl Graph {
    /// Two-coloring of the vertices if bipartite, as side masks.
    pub fn bipartition(&self) -> Option<(u32, u32)> {
        let mut side = vec![u8::MAX; self.n()];
        let mut left = 0u32;
        let mut right = 0u32;
        for start in 0..self.n() {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            left |= 1 << start;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in crate::graph::set_members(self.neighbors(v)) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        if side[w] == 0 {
                            left |= 1 << w;
                        } else {
                            right |= 1 << w;
                        }
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some((left, right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5_times3() -> Multigraph {
        Multigraph::new(5, &[(0, 1, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3), (4, 0, 3)]).unwrap()
    }

    #[test]
    fn line_graph_of_thick_c5() {
        let l = c5_times3().line_graph().unwrap();
        assert_eq!(l.n(), 15);
        assert!(l.vertices().all(|v| l.degree(v) == 8));
    }

    #[test]
    fn line_graph_small_cases() {
        // star K_{1,3} -> K3
        let star = Multigraph::new(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        assert_eq!(star.line_graph().unwrap(), Graph::complete(3));
        // path of 2 edges -> K2
        let p = Multigraph::new(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(p.line_graph().unwrap(), Graph::complete(2));
    }

    #[test]
    fn degree_formula_vertexwise() {
        // d_L(xy) = d(x) + d(y) - mu(xy) - 1, for every edge instance
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(2..6);
            let mut edges = Vec::new();
            let mut total = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let m = rng.gen_range(0..3u32);
                    if m > 0 && total + m as usize <= 10 {
                        edges.push((u, v, m));
                        total += m as usize;
                    }
                }
            }
            if total == 0 {
                continue;
            }
            let mg = Multigraph::new(n, &edges).unwrap();
            let l = mg.line_graph().unwrap();
            for (i, (u, v, _)) in mg.edge_instances().into_iter().enumerate() {
                assert_eq!(
                    l.degree(i),
                    mg.degree(u) + mg.degree(v) - mg.mu(u, v) as usize - 1
                );
            }
        }
    }

    #[test]
    fn bipartition_examples() {
        assert!(c5_times3().is_bipartite().is_none());
        let p = Multigraph::new(3, &[(0, 1, 2), (1, 2, 3)]).unwrap();
        let (l, r) = p.is_bipartite().unwrap();
        assert_eq!(l | r, 0b111);
        assert_eq!(l & r, 0);
    }

    #[test]
    fn text_roundtrip() {
        let mg = c5_times3();
        assert_eq!(Multigraph::parse(&mg.to_text()).unwrap(), mg);
        assert!(Multigraph::parse("2 1\n0 0 2\n").is_err());
    }
}
