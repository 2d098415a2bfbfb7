//! Exact clique and independence numbers by bitset branch and bound.

use crate::graph::{Graph, VertexSet};

/// Greedy coloring of the subgraph induced on `cand`, used as an upper bound
/// on the clique number within `cand`.
fn color_bound(g: &Graph, cand: VertexSet) -> usize {
    let mut colors = 0;
    let mut rest = cand;
    while rest != 0 {
        colors += 1;
        let mut avail = rest;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            avail &= !g.neighbors(v);
            rest &= !(1 << v);
        }
    }
    colors
}

fn expand(g: &Graph, current: VertexSet, cand: VertexSet, best: &mut (usize, VertexSet)) {
    let size = current.count_ones() as usize;
    if cand == 0 {
        if size > best.0 {
            *best = (size, current);
        }
        return;
    }
    if size + color_bound(g, cand) <= best.0 {
        return;
    }
    // branch on vertices in index order; deterministic
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        if size + (rest.count_ones() as usize) <= best.0 {
            return;
        }
        expand(g, current | (1 << v), rest & g.neighbors(v), best);
        rest &= rest - 1;
    }
}

/// A maximum clique (lexicographically first found under the fixed branching
/// order) as a vertex set.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = (0usize, 0u32);
    expand(g, 0, g.all_vertices(), &mut best);
    best.1
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).count_ones() as usize
}

pub fn max_independent_set(g: &Graph) -> VertexSet {
    max_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// A clique of size at least `k` containing only vertices of `within`,
/// if one exists.
pub fn find_clique_of_size(g: &Graph, k: usize, within: VertexSet) -> Option<VertexSet> {
    fn go(g: &Graph, k: usize, current: VertexSet, cand: VertexSet) -> Option<VertexSet> {
        let size = current.count_ones() as usize;
        if size >= k {
            return Some(current);
        }
        if size + color_bound(g, cand) < k {
            return None;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if size + (rest.count_ones() as usize) < k {
                return None;
            }
            if let Some(c) = go(g, k, current | (1 << v), rest & g.neighbors(v)) {
                return Some(c);
            }
            rest &= rest - 1;
        }
        None
    }
    go(g, k, 0, within)
}

/// All cliques (including the empty one) of the graph; only for small n.
pub fn all_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = vec![0u32];
    let mut i = 0;
    while i < out.len() {
        let c = out[i];
        let start = if c == 0 {
            0
        } else {
            31 - c.leading_zeros() as usize + 1
        };
        for v in start..g.n() {
            if c & !g.neighbors(v) == 0 {
                out.push(c | (1 << v));
            }
        }
        i += 1;
    }
    out
}

/// True iff there is a vertex whose removal leaves a complete graph.
/// Complete graphs themselves qualify.
pub fn is_almost_complete(g: &Graph) -> bool {
    if g.n() == 1 {
        return true;
    }
    g.vertices()
        .any(|v| g.is_clique(g.all_vertices() & !(1 << v)))
}
