//! Circular and linear interval recognition by exhaustive ordering search.
//!
//! Criterion: an order of V(G) (circular resp. linear) such that for every
//! edge uv, some closed arc (resp. the closed segment) between u and v
//! induces a clique.
//!
//! Equivalence with the point-and-intervals definition:
//!  * Given points p_1 <= ... <= p_n on the line/circle and closed intervals
//!    whose members are cliques inducing exactly the adjacency, take the
//!    point order. An edge uv lies in a common interval I; every vertex
//!    between u and v also lies in I, so the closed segment between u and v
//!    is a subset of the clique I — the criterion holds.
//!  * Conversely, given an order satisfying the criterion, place the
//!    vertices at distinct points in that order and take as intervals all
//!    maximal segments/arcs that induce cliques. Adjacent vertices share an
//!    interval (extend their clique segment to a maximal one); nonadjacent
//!    vertices never share one (a clique segment cannot contain both). So
//!    the graph is exactly the interval model's graph.

use super::StructureError;
use crate::graph::{set_members, Graph};

const ORDER_BUDGET_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularRepresentation {
    /// Circular vertex sequence.
    pub order: Vec<usize>,
    /// Maximal clique arcs as inclusive index pairs (start, end) into
    /// `order`, wrapping allowed.
    pub arcs: Vec<(usize, usize)>,
}

/// Does the closed segment of `order[i..=j]` induce a clique?
fn segment_clique(g: &Graph, order: &[usize], i: usize, j: usize) -> bool {
    let set = order[i..=j].iter().fold(0u32, |m, &v| m | (1 << v));
    g.is_clique(set)
}

fn circular_order_ok(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    let pos = {
        let mut p = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    for (u, v) in g.edges() {
        let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        // inner arc i..=j or outer arc j..=i (wrapping)
        let inner = segment_clique(g, order, i, j);
        let outer = || {
            let set = order[j..]
                .iter()
                .chain(order[..=i].iter())
                .fold(0u32, |m, &v| m | (1 << v));
            g.is_clique(set)
        };
        if !inner && !outer() {
            return false;
        }
    }
    true
}

/// Maximal clique arcs of an accepted circular order.
fn maximal_arcs(g: &Graph, order: &[usize]) -> Vec<(usize, usize)> {
    let n = order.len();
    if n == 1 {
        return vec![(0, 0)];
    }
    let mut masks: Vec<(u32, (usize, usize))> = Vec::new();
    let full: u32 = order.iter().map(|&v| 1u32 << v).sum();
    if g.is_clique(full) {
        return vec![(0, n - 1)];
    }
    for start in 0..n {
        for len in 1..n {
            let set = (0..len).fold(0u32, |m, k| m | (1 << order[(start + k) % n]));
            if g.is_clique(set) {
                masks.push((set, (start, (start + len - 1) % n)));
            } else {
                break;
            }
        }
    }
    let mut out: Vec<(usize, usize)> = masks
        .iter()
        .filter(|(m, _)| !masks.iter().any(|(m2, _)| m2 != m && m2 & m == *m))
        .map(|&(_, arc)| arc)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Exhaustive search over circular orders, rotation fixed by pinning vertex
/// 0 first and reflection halved.
pub fn is_circular_interval(g: &Graph) -> Result<Option<CircularRepresentation>, StructureError> {
    let n = g.n();
    if n > ORDER_BUDGET_N {
        return Err(StructureError::Budget(n, ORDER_BUDGET_N));
    }
    if n <= 2 {
        let order: Vec<usize> = (0..n).collect();
        let arcs = maximal_arcs(g, &order);
        return Ok(Some(CircularRepresentation { order, arcs }));
    }
    let mut order: Vec<usize> = vec![0];
    let mut rest: Vec<usize> = (1..n).collect();
    fn go(g: &Graph, order: &mut Vec<usize>, rest: &mut Vec<usize>) -> bool {
        if rest.is_empty() {
            return circular_order_ok(g, order);
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            // reflection symmetry: demand order[1] < order[n-1]
            if order.len() == g.n() - 1 && order[1] > v {
                rest.insert(i, v);
                continue;
            }
            order.push(v);
            if go(g, order, rest) {
                return true;
            }
            order.pop();
            rest.insert(i, v);
        }
        false
    }
    if go(g, &mut order, &mut rest) {
        let arcs = maximal_arcs(g, &order);
        Ok(Some(CircularRepresentation { order, arcs }))
    } else {
        Ok(None)
    }
}

/// Can `v` be appended to the linear prefix? Its leftmost prefix neighbor
/// onward must form a clique together with v.
fn linear_append_ok(g: &Graph, prefix: &[usize], v: usize) -> bool {
    let nbrs = g.neighbors(v);
    let leftmost = match prefix.iter().position(|&p| nbrs & (1 << p) != 0) {
        None => return true,
        Some(i) => i,
    };
    for (k, &p) in prefix.iter().enumerate().skip(leftmost) {
        if nbrs & (1 << p) == 0 {
            return false;
        }
        for &q in prefix.iter().skip(k + 1) {
            if !g.has_edge(p, q) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive search over linear orders with incremental pruning; the
/// incremental condition certifies every edge's closed segment is a clique.
pub fn is_linear_interval(g: &Graph) -> Result<Option<Vec<usize>>, StructureError> {
    let n = g.n();
    if n > ORDER_BUDGET_N {
        return Err(StructureError::Budget(n, ORDER_BUDGET_N));
    }
    fn go(g: &Graph, order: &mut Vec<usize>, rest: &mut Vec<usize>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            if linear_append_ok(g, order, v) {
                order.push(v);
                if go(g, order, rest) {
                    return true;
                }
                order.pop();
            }
            rest.insert(i, v);
        }
        false
    }
    let mut order = Vec::with_capacity(n);
    let mut rest: Vec<usize> = (0..n).collect();
    if go(g, &mut order, &mut rest) {
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

/// Check an explicit linear order against the clique-segment criterion
/// (used by the 2-join machinery and tests).
pub(crate) fn linear_order_ok(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for v in order {
        for w in set_members(g.neighbors(*v)) {
            if pos[w] == usize::MAX {
                return false; // order must cover the whole graph
            }
        }
    }
    g.edges().iter().all(|&(u, v)| {
        let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        segment_clique(g, order, i, j)
    })
}
