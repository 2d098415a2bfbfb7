//! Claw finding, bisimplicial vertices, two-clique covers, and thickened-C5
//! recognition.

use crate::graph::{set_members, Graph, VertexSet};

/// An induced K_{1,3}: (center, three pairwise nonadjacent leaves).
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    for v in g.vertices() {
        let nbrs = set_members(g.neighbors(v));
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in nbrs.iter().skip(j + 1) {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some((v, [a, b, c]));
                    }
                }
            }
        }
    }
    None
}

/// Two cliques covering N(v), i.e. a bipartition of the complement of
/// G[N(v)]; None when that complement is not bipartite.
pub fn is_bisimplicial(g: &Graph, v: usize) -> Option<(VertexSet, VertexSet)> {
    if g.neighbors(v) == 0 {
        return Some((0, 0));
    }
    let nbrs = set_members(g.neighbors(v));
    let h = g.induced(g.neighbors(v)).unwrap().complement();
    let (s1, s2) = h.bipartition()?;
    let lift = |side: u32| -> VertexSet {
        set_members(side).into_iter().map(|i| 1u32 << nbrs[i]).sum()
    };
    Some((lift(s1), lift(s2)))
}

/// Ok(()) when every vertex is bisimplicial; otherwise the least offending
/// vertex.
pub fn is_quasi_line(g: &Graph) -> Result<(), usize> {
    match g.vertices().find(|&v| is_bisimplicial(g, v).is_none()) {
        None => Ok(()),
        Some(v) => Err(v),
    }
}

/// Partition of V(G) into two cliques (one side may be empty); exists iff
/// the complement is bipartite.
pub fn two_clique_cover(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    g.complement().bipartition()
}

/// The five thickening cliques, in cycle order, when G is a thickening of
/// C5: closed-neighborhood twin classes must quotient to exactly C5, and the
/// classes must reconstruct G edge for edge.
pub fn as_thickened_c5(g: &Graph) -> Option<[VertexSet; 5]> {
    // closed-twin classes; members of a class are adjacent (v in N[v])
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut keys: Vec<u32> = Vec::new();
    for v in g.vertices() {
        let key = g.neighbors(v) | (1 << v);
        match keys.iter().position(|&k| k == key) {
            Some(i) => classes[i] |= 1 << v,
            None => {
                keys.push(key);
                classes.push(1 << v);
            }
        }
    }
    if classes.len() != 5 {
        return None;
    }
    // quotient adjacency: classes joined or anticomplete by twin-ness
    let rep: Vec<usize> = classes.iter().map(|&c| c.trailing_zeros() as usize).collect();
    let q_adj = |i: usize, j: usize| g.has_edge(rep[i], rep[j]);
    if (0..5).any(|i| (0..5).filter(|&j| j != i && q_adj(i, j)).count() != 2) {
        return None;
    }
    // walk the 5-cycle starting from class 0
    let mut order = vec![0usize];
    let first = (1..5).filter(|&j| q_adj(0, j)).min().unwrap();
    order.push(first);
    while order.len() < 5 {
        let last = *order.last().unwrap();
        let prev = order[order.len() - 2];
        let next = (0..5).find(|&j| j != prev && j != last && q_adj(last, j))?;
        order.push(next);
    }
    if !q_adj(order[4], order[0]) {
        return None;
    }
    let parts: [VertexSet; 5] = std::array::from_fn(|i| classes[order[i]]);
    // reconstruct edge for edge
    let class_of = |v: usize| (0..5).find(|&i| parts[i] & (1 << v) != 0).unwrap();
    for u in g.vertices() {
        for w in u + 1..g.n() {
            let (cu, cw) = (class_of(u), class_of(w));
            let expect = cu == cw || (cu + 1) % 5 == cw || (cw + 1) % 5 == cu;
            if g.has_edge(u, w) != expect {
                return None;
            }
        }
    }
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::set_of;

    #[test]
    fn claw_examples() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (c, leaves) = find_claw(&star).unwrap();
        assert_eq!(c, 0);
        assert_eq!(leaves, [1, 2, 3]);
        assert!(find_claw(&catalog::fig1d()).is_none());
        assert!(find_claw(&catalog::g_t(3).unwrap()).is_none());
        assert!(find_claw(&Graph::cycle(6)).is_none());
    }

    #[test]
    fn bisimplicial_examples() {
        // line graphs are quasi-line: L(K4) = K_{2,2,2} complement... use
        // the triangular prism = L(K3 with pendant at each vertex)
        let prism = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(is_quasi_line(&prism), Ok(()));
        for v in prism.vertices() {
            let (c1, c2) = is_bisimplicial(&prism, v).unwrap();
            assert_eq!(c1 | c2, prism.neighbors(v));
            assert_eq!(c1 & c2, 0);
            assert!(prism.is_clique(c1) && prism.is_clique(c2));
        }
        assert_eq!(is_quasi_line(&Graph::cycle(7)), Ok(()));
        // G_t is claw-free but not quasi-line: each K_t vertex sees the
        // whole C5, whose complement is an odd cycle; C5 vertices are fine
        let gt = catalog::g_t(5).unwrap();
        let v = is_quasi_line(&gt).unwrap_err();
        assert!(v < 5, "offender should be a K_t vertex, got {v}");
        for c5v in 5..10 {
            assert!(is_bisimplicial(&gt, c5v).is_some());
        }
    }

    #[test]
    fn two_clique_cover_examples() {
        let (c1, c2) = two_clique_cover(&Graph::cycle(4)).unwrap();
        assert_eq!(c1 | c2, 0b1111);
        assert!(Graph::cycle(4).is_clique(c1) && Graph::cycle(4).is_clique(c2));
        assert!(two_clique_cover(&Graph::cycle(5)).is_none());
        let (k, rest) = two_clique_cover(&Graph::complete(5)).unwrap();
        assert_eq!(k | rest, 0b11111);
        assert!(k == 0 || rest == 0 || (k & rest) == 0);
    }

    #[test]
    fn thick_c5_examples() {
        let g = catalog::thick_c5(&[2, 2, 1, 2, 1]).unwrap();
        let parts = as_thickened_c5(&g).unwrap();
        let mut sizes: Vec<u32> = parts.iter().map(|p| p.count_ones()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        // reconstruction is checked inside; also pin C5 itself
        let c5 = as_thickened_c5(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.iter().map(|p| p.count_ones()).sum::<u32>(), 5);
        assert_eq!(c5[0], set_of(&[0]));
        assert!(as_thickened_c5(&Graph::cycle(4)).is_none());
        assert!(as_thickened_c5(&Graph::complete(5)).is_none());
    }
}
