//! Interval 2-joins: detection, classification, and reduction.
//!
//! A 2-join is an induced linear interval subgraph H whose attachment to
//! the rest of the graph is exactly: end clique A1 joined to outside clique
//! B1, end clique A2 joined to outside clique B2, no other edges. The ends
//! are recovered from the outside-neighborhood patterns of H's vertices
//! (each must be B1, B2, or B1 u B2), and condition "ends of H" means a
//! linear interval order of H exists with A1 as prefix set and A2 as
//! suffix set.
//!
//! The left/right labeling of H is unique only up to reflection, so
//! reducibility is evaluated as a disjunction over both ends and all valid
//! orders.
//!
//! Reduction of a canonical reducible join with N_H(A1)\A1 = N_H(v1)\A1,
//! C := N_H(v1)\A1: the reduced join is
//!   H'  = H \ (A1 u (C n A2)),   A1' = C \ A2,   A2' = A2 \ C,
//!   B1' = A1 u (C n A2),         B2' = B2 u (C n A2).
//! Keeping all of H \ (A1 u (C n A2)) (not only A1' u A2') is needed so
//! that interior vertices between the new ends stay inside H'; the result
//! is re-verified by the find-side checker, and |H'| < |H| since A1 is
//! nonempty.

use super::interval::linear_order_ok;
use super::StructureError;
use crate::graph::{set_members, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoJoinKind {
    Trivial,
    Canonical,
    NonCanonical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoJoin {
    pub h: VertexSet,
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub b1: VertexSet,
    pub b2: VertexSet,
    pub kind: TwoJoinKind,
    pub reducible: bool,
    /// A linear interval order of H realizing A1 as prefix and A2 as suffix.
    pub order: Vec<usize>,
}

pub const DEFAULT_MAX_H: usize = 8;

/// Search every valid end-respecting linear order of H. Returns
/// (witness order, left-reducibility order, right-reducibility order).
fn end_orders(
    g: &Graph,
    h: VertexSet,
    a1: VertexSet,
    a2: VertexSet,
) -> (Option<Vec<usize>>, Option<Vec<usize>>, Option<Vec<usize>>) {
    let verts = set_members(h);
    let t = verts.len();
    let k1 = (a1 & h).count_ones() as usize;
    let k2 = (a2 & h).count_ones() as usize;
    let nh = |s: VertexSet| -> VertexSet {
        set_members(s & h).iter().fold(0u32, |m, &v| m | g.neighbors(v)) & h & !s
    };
    let n_a1 = nh(a1);
    let n_a2 = nh(a2);
    let zone_ok = |pos: usize, v: usize| -> bool {
        let in1 = a1 & (1 << v) != 0;
        let in2 = a2 & (1 << v) != 0;
        let want1 = pos < k1;
        let want2 = pos + k2 >= t;
        in1 == want1 && in2 == want2
    };
    // incremental clique-segment pruning within H
    let append_ok = |prefix: &[usize], v: usize| -> bool {
        let nbrs = g.neighbors(v);
        let leftmost = match prefix.iter().position(|&p| nbrs & (1 << p) != 0) {
            None => return true,
            Some(i) => i,
        };
        for (i, &p) in prefix.iter().enumerate().skip(leftmost) {
            if nbrs & (1 << p) == 0 {
                return false;
            }
            for &q in prefix.iter().skip(i + 1) {
                if !g.has_edge(p, q) {
                    return false;
                }
            }
        }
        true
    };
    let mut witness = None;
    let mut left = None;
    let mut right = None;
    #[allow(clippy::too_many_arguments)]
    fn go(
        order: &mut Vec<usize>,
        rest: &mut Vec<usize>,
        zone_ok: &dyn Fn(usize, usize) -> bool,
        append_ok: &dyn Fn(&[usize], usize) -> bool,
        finish: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if rest.is_empty() {
            return finish(order);
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            if zone_ok(order.len(), v) && append_ok(order, v) {
                order.push(v);
                if go(order, rest, zone_ok, append_ok, finish) {
                    return true;
                }
                order.pop();
            }
            rest.insert(i, v);
        }
        false
    }
    let mut order = Vec::with_capacity(t);
    let mut rest = verts.clone();
    go(
        &mut order,
        &mut rest,
        &zone_ok,
        &append_ok,
        &mut |ord: &[usize]| {
            if witness.is_none() {
                witness = Some(ord.to_vec());
            }
            let v1 = ord[0];
            let vt = ord[t - 1];
            // the set C = N_H(v1) \ A1 must reach beyond A2, else the
            // reduced quintuple loses its first end and is not a 2-join
            if left.is_none() && (g.neighbors(v1) & h & !a1) == n_a1 && n_a1 & !a2 != 0 {
                left = Some(ord.to_vec());
            }
            if right.is_none() && (g.neighbors(vt) & h & !a2) == n_a2 && n_a2 & !a1 != 0 {
                right = Some(ord.to_vec());
            }
            left.is_some() && right.is_some() // stop once both witnessed
        },
    );
    (witness, left, right)
}

/// Check whether H with outside cliques (b1, b2) forms an interval 2-join;
/// derives A1, A2, verifies all four conditions, and classifies.
pub fn verify_two_join(g: &Graph, h: VertexSet, b1: VertexSet, b2: VertexSet) -> Option<TwoJoin> {
    if h == 0 || b1 == 0 || b2 == 0 || (b1 | b2) & h != 0 {
        return None;
    }
    if !g.is_clique(b1) || !g.is_clique(b2) {
        return None;
    }
    let joined = |v: usize, b: VertexSet| g.neighbors(v) & b == b;
    let mut a1 = 0u32;
    let mut a2 = 0u32;
    for v in set_members(h) {
        if joined(v, b1) {
            a1 |= 1 << v;
        }
        if joined(v, b2) {
            a2 |= 1 << v;
        }
        // no other edges leave H
        let outside = g.neighbors(v) & !h;
        let entitled = (if joined(v, b1) { b1 } else { 0 }) | (if joined(v, b2) { b2 } else { 0 });
        if outside != entitled {
            return None;
        }
    }
    if a1 == 0 || a2 == 0 || !g.is_clique(a1) || !g.is_clique(a2) {
        return None;
    }
    let (witness, left, right) = end_orders(g, h, a1, a2);
    let order = witness?;
    debug_assert!({
        let sub = g.induced(h).unwrap();
        let local: Vec<usize> = order
            .iter()
            .map(|&v| set_members(h).iter().position(|&x| x == v).unwrap())
            .collect();
        linear_order_ok(&sub, &local)
    });
    let kind = if h == a1 && h == a2 {
        TwoJoinKind::Trivial
    } else if a1 & a2 == 0 {
        TwoJoinKind::Canonical
    } else {
        TwoJoinKind::NonCanonical
    };
    let complete = g.is_clique(h);
    let reducible = !complete && (left.is_some() || right.is_some());
    Some(TwoJoin { h, a1, a2, b1, b2, kind, reducible, order })
}

/// All connected vertex sets of size in 1..=max, proper subsets of V.
fn connected_subsets(g: &Graph, max: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    // grow from each minimum vertex; extensions restricted to higher-indexed
    // or neighbor-reachable vertices, dedup via a seen set
    let mut seen = std::collections::BTreeSet::new();
    fn grow(
        g: &Graph,
        s: VertexSet,
        ext: VertexSet,
        min_v: usize,
        max: usize,
        seen: &mut std::collections::BTreeSet<VertexSet>,
        out: &mut Vec<VertexSet>,
    ) {
        if !seen.insert(s) {
            return;
        }
        if (s.count_ones() as usize) < g.n() {
            out.push(s);
        }
        if s.count_ones() as usize == max {
            return;
        }
        let mut cand = ext;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if v < min_v {
                continue;
            }
            grow(g, s | (1 << v), (ext | g.neighbors(v)) & !s & !(1 << v), min_v, max, seen, out);
        }
    }
    for v in g.vertices() {
        grow(g, 1 << v, g.neighbors(v), v, max, &mut seen, &mut out);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Candidate (B1, B2) splits of the outside attachment of H.
fn b_candidates(g: &Graph, h: VertexSet) -> Vec<(VertexSet, VertexSet)> {
    let patterns: Vec<VertexSet> = {
        let mut p: Vec<VertexSet> = set_members(h)
            .into_iter()
            .map(|v| g.neighbors(v) & !h)
            .filter(|&o| o != 0)
            .collect();
        p.sort_unstable();
        p.dedup();
        p
    };
    if patterns.is_empty() {
        return vec![];
    }
    let u: VertexSet = patterns.iter().fold(0, |m, &p| m | p);
    let mut cands: Vec<(VertexSet, VertexSet)> = Vec::new();
    for (i, &x) in patterns.iter().enumerate() {
        for &y in patterns.iter().skip(i) {
            if x | y == u {
                cands.push((x.min(y), x.max(y)));
            }
        }
        if u & !x != 0 {
            let y = u & !x;
            cands.push((x.min(y), x.max(y)));
        }
    }
    if patterns.contains(&u) {
        cands.push((u, u));
        // a clique split of the union, for ends seeing everything
        if let Some((c1, c2)) = split_into_two_cliques(g, u) {
            if c1 != 0 && c2 != 0 {
                cands.push((c1.min(c2), c1.max(c2)));
            }
        }
    }
    cands.sort_unstable();
    cands.dedup();
    cands
}

fn split_into_two_cliques(g: &Graph, set: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let verts = set_members(set);
    let sub = g.induced(set).ok()?;
    let (s1, s2) = sub.complement().bipartition()?;
    let lift = |side: u32| -> VertexSet {
        set_members(side).into_iter().map(|i| 1u32 << verts[i]).sum()
    };
    Some((lift(s1), lift(s2)))
}

/// All interval 2-joins with connected H of at most `max_h` vertices.
pub fn find_interval_two_joins(g: &Graph, max_h: usize) -> Vec<TwoJoin> {
    let mut out: Vec<TwoJoin> = Vec::new();
    for h in connected_subsets(g, max_h) {
        for (b1, b2) in b_candidates(g, h) {
            if let Some(j) = verify_two_join(g, h, b1, b2) {
                let dup = out.iter().any(|o| {
                    o.h == j.h
                        && ((o.a1, o.b1, o.a2, o.b2) == (j.a1, j.b1, j.a2, j.b2)
                            || (o.a1, o.b1, o.a2, o.b2) == (j.a2, j.b2, j.a1, j.b1))
                });
                if !dup {
                    out.push(j);
                }
            }
        }
    }
    out.sort_by_key(|j| (j.h, j.a1, j.a2, j.b1, j.b2));
    out
}

/// Reduce a canonical reducible 2-join; the result is strictly smaller and
/// re-verified by the find-side checker.
pub fn reduce_two_join(g: &Graph, j: &TwoJoin) -> Result<TwoJoin, StructureError> {
    if j.kind != TwoJoinKind::Canonical {
        return Err(StructureError::NotCanonical);
    }
    if !j.reducible {
        return Err(StructureError::NotReducible);
    }
    let (_, left, right) = end_orders(g, j.h, j.a1, j.a2);
    // mirror so the left-end condition holds
    let (a1, a2, _b1, b2, order) = match (left, right) {
        (Some(o), _) => (j.a1, j.a2, j.b1, j.b2, o),
        (None, Some(o)) => {
            let mut o: Vec<usize> = o;
            o.reverse();
            (j.a2, j.a1, j.b2, j.b1, o)
        }
        (None, None) => return Err(StructureError::NotReducible),
    };
    let v1 = order[0];
    let c = g.neighbors(v1) & j.h & !a1;
    let h2 = j.h & !(a1 | (c & a2));
    let b1_new = a1 | (c & a2);
    let b2_new = b2 | (c & a2);
    debug_assert!(h2.count_ones() < j.h.count_ones());
    let reduced = verify_two_join(g, h2, b1_new, b2_new)
        .expect("reduced quintuple must verify as an interval 2-join");
    debug_assert_eq!(reduced.a1 & !(c & !a2), 0);
    Ok(reduced)
}
