//! Graph isomorphism by color refinement plus permutation search.
//! Adequate for the n <= 15 instances that arise here.

use crate::graph::{set_members, Graph};
use crate::multigraph::Multigraph;
use std::collections::BTreeMap;

/// Stable vertex classes from iterated neighborhood-label refinement.
fn refine(g: &Graph) -> Vec<u64> {
    let mut label: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    for _ in 0..g.n() {
        let sig: Vec<(u64, Vec<u64>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<u64> = set_members(g.neighbors(v)).iter().map(|&w| label[w]).collect();
                nb.sort_unstable();
                (label[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u64, Vec<u64>)> = sig.iter().collect();
        sorted.sort();
        sorted.dedup();
        let index: BTreeMap<&(u64, Vec<u64>), u64> = sorted
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i as u64))
            .collect();
        let new: Vec<u64> = sig.iter().map(|s| index[s]).collect();
        if new == label {
            break;
        }
        label = new;
    }
    label
}

/// Multiset invariant used for fast non-isomorphism rejection and bucketing.
pub fn invariant_key(g: &Graph) -> Vec<u64> {
    let mut l = refine(g);
    l.sort_unstable();
    let mut key = vec![g.n() as u64, g.edge_count() as u64];
    key.extend(l);
    key
}

fn extend(
    g: &Graph,
    h: &Graph,
    lg: &[u64],
    lh: &[u64],
    map: &mut Vec<usize>,
    used: &mut u32,
) -> bool {
    let v = map.len();
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if *used & (1 << w) != 0 || lg[v] != lh[w] {
            continue;
        }
        // adjacency with already-mapped vertices must transport exactly
        let ok = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !ok {
            continue;
        }
        map.push(w);
        *used |= 1 << w;
        if extend(g, h, lg, lh, map, used) {
            return true;
        }
        map.pop();
        *used &= !(1 << w);
    }
    false
}

/// A bijection phi with phi preserving adjacency exactly, or None.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let lg = refine(g);
    let lh = refine(h);
    {
        let mut a = lg.clone();
        let mut b = lh.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    let mut map = Vec::with_capacity(g.n());
    let mut used = 0u32;
    if extend(g, h, &lg, &lh, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn mg_extend(g: &Multigraph, h: &Multigraph, map: &mut Vec<usize>, used: &mut u32) -> bool {
    let v = map.len();
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if *used & (1 << w) != 0 || g.degree(v) != h.degree(w) {
            continue;
        }
        let ok = (0..v).all(|u| g.mu(u, v) == h.mu(map[u], w));
        if !ok {
            continue;
        }
        map.push(w);
        *used |= 1 << w;
        if mg_extend(g, h, map, used) {
            return true;
        }
        map.pop();
        *used &= !(1 << w);
    }
    false
}

/// Multiplicity-preserving isomorphism for small multigraphs.
pub fn multigraphs_isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    if g.n() != h.n() || g.edge_instance_count() != h.edge_instance_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = Vec::with_capacity(g.n());
    let mut used = 0u32;
    mg_extend(g, h, &mut map, &mut used)
}
