//! Exact chromatic number: clique lower bound, greedy upper bound, then
//! DSATUR-style branch and bound under a configurable node budget.

use crate::clique::{clique_number, max_clique};
use crate::graph::{set_members, Graph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("search budget of {0} nodes exceeded")]
pub struct BudgetExceeded(pub u64);

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// A proper coloring as a vertex -> color map with colors 0..k-1.
pub type Coloring = Vec<usize>;

pub fn is_proper(g: &Graph, coloring: &[usize]) -> bool {
    coloring.len() == g.n()
        && g.edges()
            .into_iter()
            .all(|(u, v)| coloring[u] != coloring[v])
}

fn greedy_coloring(g: &Graph, order: &[usize]) -> Coloring {
    let mut color = vec![usize::MAX; g.n()];
    for &v in order {
        let mut used = 0u32;
        for w in set_members(g.neighbors(v)) {
            if color[w] != usize::MAX {
                used |= 1 << color[w];
            }
        }
        color[v] = (!used).trailing_zeros() as usize;
    }
    color
}

struct Search<'a> {
    g: &'a Graph,
    best_k: usize,
    best: Coloring,
    nodes: u64,
    budget: u64,
    lb: usize,
}

impl Search<'_> {
    fn go(&mut self, color: &mut [usize], colored: usize, used: usize) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetExceeded(self.budget));
        }
        if self.best_k <= self.lb {
            return Ok(()); // optimal already proven
        }
        if colored == self.g.n() {
            if used < self.best_k {
                self.best_k = used;
                self.best = color.to_vec();
            }
            return Ok(());
        }
        // pick uncolored vertex with max saturation, ties by degree then index
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in self.g.vertices() {
            if color[v] != usize::MAX {
                continue;
            }
            let mut sat = 0u32;
            for w in set_members(self.g.neighbors(v)) {
                if color[w] != usize::MAX {
                    sat |= 1 << color[w];
                }
            }
            let key = (sat.count_ones() as usize, self.g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let v = pick;
        let mut forbidden = 0u32;
        for w in set_members(self.g.neighbors(v)) {
            if color[w] != usize::MAX {
                forbidden |= 1 << color[w];
            }
        }
        let limit = (used + 1).min(self.best_k - 1);
        for c in 0..limit {
            if forbidden & (1 << c) != 0 {
                continue;
            }
            color[v] = c;
            self.go(color, colored + 1, used.max(c + 1))?;
            color[v] = usize::MAX;
        }
        Ok(())
    }
}

/// Exact chromatic number with a witness coloring.
pub fn chromatic_number(g: &Graph, budget: u64) -> Result<(usize, Coloring), BudgetExceeded> {
    let lb = clique_number(g);
    let order: Vec<usize> = {
        let mut o: Vec<usize> = g.vertices().collect();
        o.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        o
    };
    let greedy = greedy_coloring(g, &order);
    let ub = greedy.iter().max().unwrap() + 1;
    if ub == lb {
        return Ok((lb, greedy));
    }
    let mut s = Search {
        g,
        best_k: ub,
        best: greedy,
        nodes: 0,
        budget,
        lb,
    };
    let mut color = vec![usize::MAX; g.n()];
    // seed with a maximum clique: its vertices get distinct colors for free
    let seed = set_members(max_clique(g));
    for (c, &v) in seed.iter().enumerate() {
        color[v] = c;
    }
    s.go(&mut color, seed.len(), seed.len())?;
    let k = s.best_k;
    let witness = s.best;
    debug_assert!(is_proper(g, &witness));
    Ok((k, witness))
}

/// Proper coloring with at most `k` colors, if one exists.
pub fn color_with(g: &Graph, k: usize, budget: u64) -> Result<Option<Coloring>, BudgetExceeded> {
    let (chi, w) = chromatic_number(g, budget)?;
    if chi <= k {
        Ok(Some(w))
    } else {
        Ok(None)
    }
}
