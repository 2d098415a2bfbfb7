//! Homogeneous pairs of cliques and the skeletal test / reduction.

use crate::clique::{all_cliques, clique_number};
use crate::graph::{set_members, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPair {
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub skeletal: bool,
}

fn outside_condition(g: &Graph, a1: VertexSet, a2: VertexSet) -> bool {
    let both = a1 | a2;
    g.vertices().filter(|&v| both & (1 << v) == 0).all(|v| {
        let nb = g.neighbors(v);
        (nb & a1 == a1 || nb & a1 == 0) && (nb & a2 == a2 || nb & a2 == 0)
    })
}

fn pair_skeletal(g: &Graph, a1: VertexSet, a2: VertexSet) -> bool {
    offending_edge(g, a1, a2).is_none()
}

/// Lex-least A1-A2 edge whose removal keeps omega(G[A1 u A2]) unchanged.
fn offending_edge(g: &Graph, a1: VertexSet, a2: VertexSet) -> Option<(usize, usize)> {
    let sub = g.induced(a1 | a2).unwrap();
    let verts = set_members(a1 | a2);
    let w = clique_number(&sub);
    for (i, &u) in verts.iter().enumerate() {
        for &v in verts.iter().skip(i + 1) {
            let crossing = (a1 & (1 << u) != 0 && a2 & (1 << v) != 0)
                || (a2 & (1 << u) != 0 && a1 & (1 << v) != 0);
            if crossing && g.has_edge(u, v) {
                let pu = verts.iter().position(|&x| x == u).unwrap();
                let pv = verts.iter().position(|&x| x == v).unwrap();
                if clique_number(&sub.without_edge(pu, pv)) == w {
                    return Some((u, v));
                }
            }
        }
    }
    None
}

/// All homogeneous pairs of cliques: disjoint nonempty cliques A1, A2 with
/// |A1| + |A2| >= 3 whose outside vertices are joined to or miss each A_i
/// entirely. Unordered pairs, reported with a1 < a2 as masks.
pub fn homogeneous_clique_pairs(g: &Graph) -> Vec<HomogeneousPair> {
    let cliques: Vec<VertexSet> = all_cliques(g).into_iter().filter(|&c| c != 0).collect();
    let mut out = Vec::new();
    for (i, &a1) in cliques.iter().enumerate() {
        for &a2 in cliques.iter().skip(i + 1) {
            if a1 & a2 != 0 || (a1 | a2).count_ones() < 3 {
                continue;
            }
            if outside_condition(g, a1, a2) {
                let (a1, a2) = (a1.min(a2), a1.max(a2));
                out.push(HomogeneousPair { a1, a2, skeletal: pair_skeletal(g, a1, a2) });
            }
        }
    }
    out.sort_by_key(|p| (p.a1, p.a2));
    out
}

/// None when skeletal; otherwise a non-skeletal pair with a removable
/// crossing edge.
pub fn is_skeletal(g: &Graph) -> Option<(HomogeneousPair, (usize, usize))> {
    homogeneous_clique_pairs(g)
        .into_iter()
        .filter(|p| !p.skeletal)
        .map(|p| {
            let e = offending_edge(g, p.a1, p.a2).unwrap();
            (p, e)
        })
        .next()
}

/// Delete removable crossing edges (lexicographically least per round)
/// until no non-skeletal homogeneous pair remains.
pub fn make_skeletal(g: &Graph) -> Graph {
    let mut g = g.clone();
    loop {
        let eligible: Option<(usize, usize)> = homogeneous_clique_pairs(&g)
            .into_iter()
            .filter(|p| !p.skeletal)
            .filter_map(|p| offending_edge(&g, p.a1, p.a2))
            .min();
        match eligible {
            None => return g,
            Some((u, v)) => g = g.without_edge(u, v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set_of;

    #[test]
    fn no_pairs_in_small_join() {
        // join(K2, E2): only candidate split has |A1| + |A2| = 2
        let g = Graph::complete(2).join(&Graph::empty(2)).unwrap();
        let pairs = homogeneous_clique_pairs(&g);
        assert!(pairs.iter().all(|p| (p.a1 | p.a2).count_ones() >= 3));
    }

    #[test]
    fn two_k2s_under_k1() {
        let g = Graph::complete(1)
            .join(&Graph::complete(2).disjoint_union(&Graph::complete(2)).unwrap())
            .unwrap();
        // vertices: 0 = hub, {1,2} and {3,4} the two K2s
        let pairs = homogeneous_clique_pairs(&g);
        assert!(pairs.contains(&HomogeneousPair {
            a1: set_of(&[1, 2]),
            a2: set_of(&[3, 4]),
            skeletal: true,
        }));
    }

    #[test]
    fn k6_minus_crossing_edge_not_skeletal() {
        // A1 = {0,1,2}, A2 = {3,4,5}, complete except edge 2-3: removing
        // another crossing edge keeps omega = 5
        let g = Graph::complete(6).without_edge(2, 3);
        let (pair, e) = is_skeletal(&g).unwrap();
        assert!(!pair.skeletal);
        let h = make_skeletal(&g);
        assert!(is_skeletal(&h).is_none());
        assert!(h.edge_count() < g.edge_count());
        assert!(g.has_edge(e.0, e.1));
        // chromatic number preserved
        let chi = |x: &Graph| crate::chromatic::chromatic_number(x, 1 << 20).unwrap().0;
        assert_eq!(chi(&g), chi(&h));
    }

    #[test]
    fn skeletal_graph_is_fixed_point() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(4)] {
            if is_skeletal(&g).is_none() {
                assert_eq!(make_skeletal(&g), g);
            }
        }
    }
}
