//! Exhaustive universes of small graphs, one representative per isomorphism
//! class.

use crate::graph::{Graph, GraphError};
use crate::iso::{invariant_key, is_isomorphic};
use std::collections::BTreeMap;

const MAX_ENUM_N: usize = 8;

/// All graphs on n vertices up to isomorphism, by incremental vertex
/// extension. Deterministic output order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(GraphError::BadOrder(n));
    }
    let mut reps = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut buckets: BTreeMap<Vec<u64>, Vec<Graph>> = BTreeMap::new();
        for g in &reps {
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = g.edges();
                for b in 0..k - 1 {
                    if mask & (1 << b) != 0 {
                        edges.push((b, k - 1));
                    }
                }
                let h = Graph::new(k, &edges)?;
                let key = invariant_key(&h);
                let bucket = buckets.entry(key).or_default();
                if !bucket.iter().any(|r| is_isomorphic(r, &h).is_some()) {
                    bucket.push(h);
                }
            }
        }
        reps = buckets.into_values().flatten().collect();
    }
    Ok(reps)
}

/// All graphs on 1..=n vertices up to isomorphism.
pub fn graphs_up_to(n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_graphs(k)?);
    }
    Ok(out)
}

/// All trees on n vertices up to isomorphism, from Pruefer sequences.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > 8 {
        return Err(GraphError::BadOrder(n));
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)]);
    }
    if n == 2 {
        return Ok(vec![Graph::complete(2)]);
    }
    let mut buckets: BTreeMap<Vec<u64>, Vec<Graph>> = BTreeMap::new();
    let seqs = n.pow(n as u32 - 2);
    for code in 0..seqs {
        let mut pruefer = Vec::with_capacity(n - 2);
        let mut c = code;
        for _ in 0..n - 2 {
            pruefer.push(c % n);
            c /= n;
        }
        let mut degree = vec![1usize; n];
        for &v in &pruefer {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &v in &pruefer {
            let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
            edges.push((leaf.min(v), leaf.max(v)));
            degree[leaf] -= 1;
            degree[v] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
        edges.push((rest[0], rest[1]));
        let t = Graph::new(n, &edges)?;
        let key = invariant_key(&t);
        let bucket = buckets.entry(key).or_default();
        if !bucket.iter().any(|r| is_isomorphic(r, &t).is_some()) {
            bucket.push(t);
        }
    }
    Ok(buckets.into_values().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        // OEIS A000088
        let expect = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(enumerate_graphs(i + 1).unwrap().len(), c);
        }
    }

    #[test]
    fn tree_counts() {
        // OEIS A000055 (nonempty trees)
        let expect = [1usize, 1, 1, 2, 3, 6, 11, 23];
        for (i, &c) in expect.iter().enumerate() {
            let trees = enumerate_trees(i + 1).unwrap();
            assert_eq!(trees.len(), c);
            for t in &trees {
                assert_eq!(t.edge_count(), i);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(9).is_err());
    }
}
