//! Shape predicates for the join-classification checks: the families of B
//! for which K3*B, K2*B, E2*B and K_t*B fail to be d1-choosable.

use crate::clique::is_almost_complete;
use crate::graph::Graph;
use crate::iso::is_isomorphic;

/// Disjoint union of complete subgraphs (every component a clique).
pub fn is_disjoint_cliques(g: &Graph) -> bool {
    g.components().iter().all(|&c| g.is_clique(c))
}

/// Exactly two components, both complete.
pub fn is_two_cliques(g: &Graph) -> bool {
    let comps = g.components();
    comps.len() == 2 && comps.iter().all(|&c| g.is_clique(c))
}

/// Two disjoint cliques plus one crossing edge: removing some edge leaves
/// two complete components with the endpoints split between them.
pub fn is_two_cliques_plus_edge(g: &Graph) -> bool {
    g.edges().iter().any(|&(u, v)| {
        let r = g.without_edge(u, v);
        let comps = r.components();
        comps.len() == 2
            && comps.iter().all(|&c| r.is_clique(c))
            && (comps[0] & (1 << u) != 0) != (comps[0] & (1 << v) != 0)
    })
}

/// A clique with two pendant edges hung at two distinct clique vertices.
pub fn is_clique_plus_two_pendants(g: &Graph) -> bool {
    let pendants: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    if pendants.len() != 2 {
        return false;
    }
    let rest = g.all_vertices() & !(1 << pendants[0]) & !(1 << pendants[1]);
    if rest == 0 || !g.is_clique(rest) {
        return false;
    }
    let (n0, n1) = (g.neighbors(pendants[0]), g.neighbors(pendants[1]));
    n0 & rest == n0 && n1 & rest == n1 && n0 != n1
}

/// E3 * K_{n-3} (join); plain E3 when n = 3.
pub fn e3_join_k(n: usize) -> Graph {
    if n == 3 {
        Graph::empty(3)
    } else {
        Graph::empty(3).join(&Graph::complete(n - 3)).unwrap()
    }
}

/// E3 u K_{n-3} (disjoint union); plain E3 when n = 3.
pub fn e3_union_k(n: usize) -> Graph {
    if n == 3 {
        Graph::empty(3)
    } else {
        Graph::empty(3).disjoint_union(&Graph::complete(n - 3)).unwrap()
    }
}

/// The classification families for non-d1-choosable K3*B: almost complete;
/// K_t u K_{n-t}; K_1 u K_t u K_{n-t-1}; E3 u K_{n-3}; or n <= 5 and
/// B = E3 * K_{n-3}.
pub fn k3_family(b: &Graph) -> bool {
    if is_almost_complete(b) {
        return true;
    }
    let n = b.n();
    for t in 1..n {
        let g = Graph::complete(t).disjoint_union(&Graph::complete(n - t)).unwrap();
        if is_isomorphic(b, &g).is_some() {
            return true;
        }
    }
    for t in 1..n.saturating_sub(1) {
        let g = Graph::complete(1)
            .disjoint_union(&Graph::complete(t))
            .unwrap()
            .disjoint_union(&Graph::complete(n - t - 1))
            .unwrap();
        if is_isomorphic(b, &g).is_some() {
            return true;
        }
    }
    if n >= 3 && is_isomorphic(b, &e3_union_k(n)).is_some() {
        return true;
    }
    if (3..=5).contains(&n) && is_isomorphic(b, &e3_join_k(n)).is_some() {
        return true;
    }
    false
}

/// The family for non-d1-choosable E2*B: disjoint cliques plus at most one
/// P3 component.
pub fn e2_family(b: &Graph) -> bool {
    if is_disjoint_cliques(b) {
        return true;
    }
    let mut p3s = 0;
    for &comp in &b.components() {
        if b.is_clique(comp) {
            continue;
        }
        let h = b.induced(comp).unwrap();
        if is_isomorphic(&h, &Graph::path(3)).is_some() {
            p3s += 1;
        } else {
            return false;
        }
    }
    p3s <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn shape_examples() {
        assert!(is_disjoint_cliques(&Graph::complete(3)));
        assert!(is_disjoint_cliques(&Graph::empty(4)));
        assert!(!is_disjoint_cliques(&Graph::path(3)));
        let two = Graph::complete(2).disjoint_union(&Graph::complete(3)).unwrap();
        assert!(is_two_cliques(&two));
        assert!(!is_two_cliques(&Graph::complete(4)));
        assert!(is_two_cliques_plus_edge(&Graph::path(4)));
        assert!(!is_two_cliques_plus_edge(&Graph::cycle(4)));
        // chair = K_{1,3} with one subdivided edge = triangle-free; the
        // clique-with-pendants shape at K2 is exactly P4
        assert!(is_clique_plus_two_pendants(&Graph::path(4)));
        let k3_pend = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        assert!(is_clique_plus_two_pendants(&k3_pend));
        let same_vertex = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!is_clique_plus_two_pendants(&same_vertex));
    }

    #[test]
    fn k3_family_examples() {
        assert!(k3_family(&Graph::complete(4))); // almost complete
        assert!(k3_family(&Graph::empty(3))); // E3
        assert!(k3_family(&e3_join_k(5)));
        assert!(!k3_family(&e3_join_k(6))); // join form only claimed up to 5
        assert!(k3_family(&e3_union_k(6)));
        assert!(k3_family(&Graph::path(3))); // almost complete: K3 minus an edge
        assert!(!k3_family(&Graph::path(4)));
        assert!(!k3_family(&Graph::cycle(5)));
    }

    #[test]
    fn e2_family_examples() {
        assert!(e2_family(&Graph::path(3)));
        assert!(e2_family(&Graph::path(3).disjoint_union(&Graph::complete(3)).unwrap()));
        assert!(!e2_family(&Graph::path(3).disjoint_union(&Graph::path(3)).unwrap()));
        assert!(!e2_family(&catalog::paw()));
        assert!(!e2_family(&Graph::path(4)));
    }
}
