//! The f-choosability oracle.
//!
//! Candidate list assignments are enumerated up to global color permutation:
//! each orbit is represented by its lexicographically minimal member, built
//! incrementally. Colors that have appeared in exactly the same lists so far
//! ("atoms") are interchangeable, so a candidate list for the next vertex is
//! determined by how many colors it takes from each atom (taking the lowest
//! labels) plus a block of fresh colors. This enumerates every orbit exactly
//! once at negligible bookkeeping cost.
//!
//! Two sound prunes keep the search feasible:
//!  * all-bad shortcut: if the already-fixed prefix cannot be colored from
//!    its lists, no completion can be good; the lex-least completion is a
//!    bad witness.
//!  * all-good prune: if some proper coloring c of the prefix leaves every
//!    still-free vertex v a surplus g(v) = f(v) - #{distinct colors on its
//!    fixed neighbors} admitting an elimination order with g(v) >= (number
//!    of remaining free neighbors) + 1, then any completion can be colored
//!    by combining c with greedy coloring in reverse elimination order,
//!    whatever the free lists turn out to be. When the elimination stalls,
//!    a stalled component is still surely colorable if its surplus matches
//!    its free degree everywhere and it is not a Gallai tree (every block a
//!    clique or an odd cycle): a connected graph that is not a Gallai tree
//!    is colorable from any lists at least as large as its degrees.

use super::assignment::{canonical_form, color_from_lists, lowest_bits, FSpec, ListAssignment};
use crate::graph::{full_set, set_members, Graph};
use std::cmp::Ordering;
use std::sync::atomic::{AtomicI64, Ordering as AtomicOrdering};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChoosabilityError {
    #[error("f({v}) = {f} >= |G| = {n}: the small-pot cap is unsound; request an exhaustive run")]
    FTooLarge { v: usize, f: usize, n: usize },
    #[error("exhaustive run needs {0} colors; at most 32 are supported")]
    PotTooLarge(usize),
    #[error("node budget of {0} exhausted")]
    Budget(u64),
    #[error(transparent)]
    FSpec(#[from] super::assignment::FSpecError),
    #[error("graph is f-choosable; there are no bad assignments")]
    Choosable,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Complete assignments whose colorability was decided individually.
    pub assignments: u64,
    /// Subtrees discarded because every completion is provably good.
    pub good_prunes: u64,
    /// Subtrees resolved because the fixed prefix is already uncolorable.
    pub bad_shortcuts: u64,
    /// Enumeration nodes visited.
    pub nodes: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.assignments += other.assignments;
        self.good_prunes += other.good_prunes;
        self.bad_shortcuts += other.bad_shortcuts;
        self.nodes += other.nodes;
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub choosable: bool,
    /// A bad assignment (canonical, vertex order), re-verified bad by
    /// exhaustive colorability search before being returned.
    pub witness: Option<ListAssignment>,
    pub stats: SearchStats,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Override the default pot cap of |G| - 1.
    pub pot_cap: Option<usize>,
    /// Allow f(v) >= |G|: enumerate with cap = sum of f instead.
    pub exhaustive: bool,
    pub node_budget: u64,
    /// Prefix colorings tried per node by the all-good prune.
    pub prune_colorings: usize,
    /// Search-node budget for each per-node prefix coloring enumeration.
    pub prune_nodes: u64,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            pot_cap: None,
            exhaustive: false,
            node_budget: 2_000_000_000,
            prune_colorings: 5_000,
            prune_nodes: 100_000,
        }
    }
}

/// Candidate lists for the next vertex: all ways to take `k` colors from the
/// current atoms (lowest labels of each) plus a block of fresh colors, in
/// lexicographic order of the resulting color sets.
fn candidates(atoms: &[u32], used: usize, k: usize, cap: usize, out: &mut Vec<u32>) {
    out.clear();
    fn go(atoms: &[u32], i: usize, rem: usize, acc: u32, used: usize, cap: usize, out: &mut Vec<u32>) {
        if i == atoms.len() {
            if used + rem <= cap {
                let fresh = full_set(used + rem) & !full_set(used);
                out.push(acc | fresh);
            }
            return;
        }
        let max_take = (atoms[i].count_ones() as usize).min(rem);
        for t in 0..=max_take {
            go(atoms, i + 1, rem - t, acc | lowest_bits(atoms[i], t), used, cap, out);
        }
    }
    go(atoms, 0, k, 0, used, cap, out);
    out.sort_by(|&a, &b| {
        let d = a ^ b;
        if d == 0 {
            Ordering::Equal
        } else if a & d & d.wrapping_neg() != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    });
}

/// Split atoms against a chosen list and append the fresh block.
fn refine_atoms(atoms: &[u32], used: usize, chosen: u32) -> (Vec<u32>, usize) {
    let mut next = Vec::with_capacity(atoms.len() + 2);
    for &a in atoms {
        let hit = a & chosen;
        if hit != 0 {
            next.push(hit);
        }
        if hit != a {
            next.push(a & !hit);
        }
    }
    let fresh = chosen & !full_set(used);
    let new_used = used + fresh.count_ones() as usize;
    if fresh != 0 {
        next.push(fresh);
    }
    (next, new_used)
}

/// Shared remaining-node budget; works for both the sequential and the
/// work-split solvers.
struct Gate {
    remaining: AtomicI64,
    total: u64,
}

impl Gate {
    fn new(total: u64) -> Gate {
        Gate {
            remaining: AtomicI64::new(total.min(i64::MAX as u64) as i64),
            total,
        }
    }

    fn spend(&self, n: u64) -> Result<(), ChoosabilityError> {
        if self.remaining.fetch_sub(n as i64, AtomicOrdering::Relaxed) <= 0 {
            Err(ChoosabilityError::Budget(self.total))
        } else {
            Ok(())
        }
    }
}

struct Solver<'a> {
    g: &'a Graph,
    n: usize,
    /// ord[i] = graph vertex explored at depth i.
    ord: Vec<usize>,
    f_ord: Vec<usize>,
    /// adjacency between depth indices
    adj_d: Vec<u32>,
    cap: usize,
    opts: &'a SolveOptions,
    gate: &'a Gate,
    stats: SearchStats,
    unflushed: u64,
}

enum NodeView {
    /// Every completion of this prefix is good.
    AllGood,
    /// The prefix itself is uncolorable, so every completion is bad.
    AllBad,
    Undecided,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, ord: Vec<usize>, f: &[usize], cap: usize, opts: &'a SolveOptions, gate: &'a Gate) -> Solver<'a> {
        let n = g.n();
        let mut pos = vec![0usize; n];
        for (i, &v) in ord.iter().enumerate() {
            pos[v] = i;
        }
        let adj_d: Vec<u32> = (0..n)
            .map(|i| {
                set_members(g.neighbors(ord[i]))
                    .into_iter()
                    .fold(0u32, |m, w| m | (1 << pos[w]))
            })
            .collect();
        let f_ord = ord.iter().map(|&v| f[v]).collect();
        Solver {
            g,
            n,
            ord,
            f_ord,
            adj_d,
            cap,
            opts,
            gate,
            stats: SearchStats::default(),
            unflushed: 0,
        }
    }

    fn tick(&mut self) -> Result<(), ChoosabilityError> {
        self.stats.nodes += 1;
        self.unflushed += 1;
        if self.unflushed >= 1024 {
            self.gate.spend(self.unflushed)?;
            self.unflushed = 0;
        }
        Ok(())
    }

    fn lists_in_graph_order(&self, lists: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.n];
        for (i, &l) in lists.iter().enumerate() {
            out[self.ord[i]] = l;
        }
        out
    }

    /// Greedy elimination check: can every completion be finished from
    /// surplus g after the prefix coloring?
    fn cascade(&self, depth: usize, surplus: &[usize]) -> bool {
        let all_free = full_set(self.n) & !full_set(depth);
        let mut remaining = all_free;
        while remaining != 0 {
            let mut progressed = false;
            let mut scan = remaining;
            while scan != 0 {
                let j = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let free_deg = (self.adj_d[j] & remaining).count_ones() as usize;
                if surplus[j - depth] >= free_deg + 1 {
                    remaining &= !(1 << j);
                    progressed = true;
                }
            }
            if !progressed {
                return self.stalled_remainder_choosable(depth, remaining, surplus);
            }
        }
        true
    }

    /// At a cascade stall every remaining vertex has surplus at most its free
    /// degree. A component is still surely colorable from any future lists
    /// when surplus equals the free degree everywhere and the component is
    /// not a Gallai tree (every block a clique or an odd cycle): a connected
    /// graph that is not a Gallai tree is colorable from arbitrary lists of
    /// sizes at least the degrees.
    fn stalled_remainder_choosable(&self, depth: usize, remaining: u32, surplus: &[usize]) -> bool {
        let mut left = remaining;
        while left != 0 {
            let mut comp = 1u32 << left.trailing_zeros();
            loop {
                let mut grown = comp;
                let mut m = comp;
                while m != 0 {
                    let j = m.trailing_zeros() as usize;
                    m &= m - 1;
                    grown |= self.adj_d[j] & remaining;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            let mut m = comp;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                let deg = (self.adj_d[j] & comp).count_ones() as usize;
                if surplus[j - depth] < deg {
                    return false;
                }
            }
            if is_gallai_tree(comp, &self.adj_d) {
                return false;
            }
            left &= !comp;
        }
        true
    }

    /// Enumerate proper colorings of the prefix (depth indices 0..depth)
    /// under small budgets, testing the cascade on each.
    fn classify(&self, depth: usize, lists: &[u32]) -> NodeView {
        let prefix_mask = full_set(depth);
        let verts = &self.ord[..depth];
        let lists_g = self.lists_in_graph_order(lists);
        let mut colorings_left = self.opts.prune_colorings;
        let mut budget = self.opts.prune_nodes;
        let mut found_any = false;
        let mut pruned = false;
        let mut limited = false;
        let complete = super::assignment::for_each_coloring(
            self.g,
            verts,
            &lists_g,
            &mut budget,
            &mut |colors| {
                found_any = true;
                // surplus per free vertex under this prefix coloring
                let mut surplus = Vec::with_capacity(self.n - depth);
                for j in depth..self.n {
                    let mut cols = 0u32;
                    let mut nb = self.adj_d[j] & prefix_mask;
                    while nb != 0 {
                        let p = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        cols |= 1 << colors[p];
                    }
                    surplus.push(self.f_ord[j].saturating_sub(cols.count_ones() as usize));
                }
                if self.cascade(depth, &surplus) {
                    pruned = true;
                    return false;
                }
                colorings_left -= 1;
                if colorings_left == 0 {
                    limited = true;
                    return false;
                }
                true
            },
        );
        if pruned {
            NodeView::AllGood
        } else if complete && !limited && !found_any {
            NodeView::AllBad
        } else {
            NodeView::Undecided
        }
    }

    /// Lexicographically least completion of the current prefix.
    fn first_completion(&self, depth: usize, lists: &[u32], atoms: &[u32], used: usize) -> Vec<u32> {
        let mut lists = lists.to_vec();
        let mut atoms = atoms.to_vec();
        let mut used = used;
        let mut cand = Vec::new();
        for i in depth..self.n {
            candidates(&atoms, used, self.f_ord[i], self.cap.max(used + self.f_ord[i]), &mut cand);
            // the cap relaxation above can never be needed when f < |G| and
            // cap = |G| - 1, but keeps this total for degenerate inputs
            let first = cand[0];
            lists.push(first);
            let (a, u) = refine_atoms(&atoms, used, first);
            atoms = a;
            used = u;
        }
        lists
    }

    fn solve(
        &mut self,
        depth: usize,
        lists: &mut Vec<u32>,
        atoms: &[u32],
        used: usize,
    ) -> Result<Option<Vec<u32>>, ChoosabilityError> {
        self.tick()?;
        if depth == self.n {
            self.stats.assignments += 1;
            return if color_from_lists(self.g, &self.lists_in_graph_order(lists)).is_none() {
                Ok(Some(lists.clone()))
            } else {
                Ok(None)
            };
        }
        match self.classify(depth, lists) {
            NodeView::AllGood => {
                self.stats.good_prunes += 1;
                return Ok(None);
            }
            NodeView::AllBad => {
                self.stats.bad_shortcuts += 1;
                return Ok(Some(self.first_completion(depth, lists, atoms, used)));
            }
            NodeView::Undecided => {}
        }
        let mut cand = Vec::new();
        candidates(atoms, used, self.f_ord[depth], self.cap, &mut cand);
        for c in cand {
            lists.push(c);
            let (next_atoms, next_used) = refine_atoms(atoms, used, c);
            let r = self.solve(depth + 1, lists, &next_atoms, next_used)?;
            if r.is_some() {
                return Ok(r);
            }
            lists.pop();
        }
        Ok(None)
    }
}

/// Biconnected blocks, as vertex masks, of the simple graph induced on the
/// bit positions in `verts` with adjacency rows `adj`.
fn blocks(verts: u32, adj: &[u32]) -> Vec<u32> {
    struct St<'a> {
        adj: &'a [u32],
        verts: u32,
        num: [u32; 32],
        low: [u32; 32],
        counter: u32,
        stack: Vec<(usize, usize)>,
        out: Vec<u32>,
    }
    fn dfs(st: &mut St, v: usize, parent: usize) {
        st.counter += 1;
        st.num[v] = st.counter;
        st.low[v] = st.counter;
        let mut nb = st.adj[v] & st.verts;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if w == parent {
                continue;
            }
            if st.num[w] == 0 {
                st.stack.push((v, w));
                dfs(st, w, v);
                st.low[v] = st.low[v].min(st.low[w]);
                if st.low[w] >= st.num[v] {
                    let mut b = 0u32;
                    while let Some(&(x, y)) = st.stack.last() {
                        st.stack.pop();
                        b |= (1 << x) | (1 << y);
                        if x == v && y == w {
                            break;
                        }
                    }
                    st.out.push(b);
                }
            } else if st.num[w] < st.num[v] {
                st.stack.push((v, w));
                st.low[v] = st.low[v].min(st.num[w]);
            }
        }
    }
    let mut st = St { adj, verts, num: [0; 32], low: [0; 32], counter: 0, stack: Vec::new(), out: Vec::new() };
    let mut m = verts;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if st.num[v] == 0 {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.out
}

/// Every block a clique or an odd cycle. A lone vertex (no blocks) counts as
/// a Gallai tree.
fn is_gallai_tree(verts: u32, adj: &[u32]) -> bool {
    blocks(verts, adj).into_iter().all(|b| {
        let mut clique = true;
        let mut m = b;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            if adj[j] & b != b & !(1u32 << j) {
                clique = false;
                break;
            }
        }
        if clique {
            return true;
        }
        if b.count_ones() % 2 == 0 {
            return false;
        }
        let mut m = b;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            if (adj[j] & b).count_ones() != 2 {
                return false;
            }
        }
        true
    })
}

fn validate(g: &Graph, f: &[usize], opts: &SolveOptions) -> Result<usize, ChoosabilityError> {
    // returns the pot cap to use
    let n = g.n();
    if let Some(cap) = opts.pot_cap {
        return Ok(cap.min(32));
    }
    if opts.exhaustive {
        let total: usize = f.iter().sum();
        if total > 32 {
            return Err(ChoosabilityError::PotTooLarge(total));
        }
        return Ok(total);
    }
    for (v, &fv) in f.iter().enumerate() {
        if fv >= n {
            return Err(ChoosabilityError::FTooLarge { v, f: fv, n });
        }
    }
    Ok(n - 1)
}

/// Ascending f (ties by index) puts the most constrained vertices first,
/// which lets the all-good prune fire at shallow depth.
fn search_order(g: &Graph, f: &[usize]) -> Vec<usize> {
    let mut ord: Vec<usize> = g.vertices().collect();
    ord.sort_by_key(|&v| (f[v], v));
    ord
}

fn finish_witness(g: &Graph, solver_lists: Option<&[u32]>, ord: &[usize], stats: SearchStats) -> Verdict {
    match solver_lists {
        None => Verdict { choosable: true, witness: None, stats },
        Some(lists) => {
            let mut in_graph_order = vec![0u32; g.n()];
            for (i, &l) in lists.iter().enumerate() {
                in_graph_order[ord[i]] = l;
            }
            // independent re-verification: the witness must fail exhaustive
            // colorability search
            assert!(
                color_from_lists(g, &in_graph_order).is_none(),
                "internal error: candidate witness is colorable"
            );
            let w = canonical_form(&ListAssignment::new(in_graph_order));
            Verdict { choosable: false, witness: Some(w), stats }
        }
    }
}

pub fn is_f_choosable_with(g: &Graph, f: &FSpec, opts: &SolveOptions) -> Result<Verdict, ChoosabilityError> {
    let fr = f.resolve(g)?;
    // greedy shortcut: f(v) >= d(v) + 1 everywhere is always choosable
    if g.vertices().all(|v| fr[v] >= g.degree(v) + 1) {
        return Ok(Verdict { choosable: true, witness: None, stats: SearchStats::default() });
    }
    let cap = validate(g, &fr, opts)?;
    let ord = search_order(g, &fr);
    let gate = Gate::new(opts.node_budget);
    let mut solver = Solver::new(g, ord.clone(), &fr, cap, opts, &gate);

    // a vertex with an empty required list is bad immediately
    if fr.iter().any(|&x| x == 0) {
        let lists = solver.first_completion(0, &[], &[], 0);
        solver.stats.bad_shortcuts += 1;
        let stats = solver.stats.clone();
        return Ok(finish_witness(g, Some(&lists), &ord, stats));
    }

    let result = solve_root(&mut solver)?;
    let stats = solver.stats.clone();
    Ok(finish_witness(g, result.as_deref(), &ord, stats))
}

#[cfg(feature = "parallel")]
fn solve_root(solver: &mut Solver<'_>) -> Result<Option<Vec<u32>>, ChoosabilityError> {
    use rayon::prelude::*;
    // expand (with pruning) to a frontier of independent subtrees, then
    // split; first-witness selection follows frontier order, so the verdict
    // is independent of worker count
    let split_depth = 2.min(solver.n);
    let mut frontier: Vec<(Vec<u32>, Vec<u32>, usize)> = vec![(vec![], vec![], 0)];
    for depth in 0..split_depth {
        let mut next = Vec::new();
        for (lists, atoms, used) in frontier {
            let mut lists = lists;
            solver.tick()?;
            match solver.classify(depth, &lists) {
                NodeView::AllGood => {
                    solver.stats.good_prunes += 1;
                    continue;
                }
                NodeView::AllBad => {
                    solver.stats.bad_shortcuts += 1;
                    return Ok(Some(solver.first_completion(depth, &lists, &atoms, used)));
                }
                NodeView::Undecided => {}
            }
            let mut cand = Vec::new();
            candidates(&atoms, used, solver.f_ord[depth], solver.cap, &mut cand);
            for c in cand {
                lists.push(c);
                let (a, u) = refine_atoms(&atoms, used, c);
                next.push((lists.clone(), a, u));
                lists.pop();
            }
        }
        frontier = next;
    }
    if frontier.is_empty() {
        return Ok(None);
    }
    let g = solver.g;
    let opts = solver.opts;
    let gate = solver.gate;
    let fr: Vec<usize> = {
        // rebuild per-graph-vertex f from the ordered copy
        let mut f = vec![0usize; solver.n];
        for (i, &v) in solver.ord.iter().enumerate() {
            f[v] = solver.f_ord[i];
        }
        f
    };
    let ord = solver.ord.clone();
    let cap = solver.cap;
    let slots: Vec<std::sync::Mutex<Option<SearchStats>>> =
        (0..frontier.len()).map(|_| std::sync::Mutex::new(None)).collect();
    let found = frontier
        .par_iter()
        .enumerate()
        .find_map_first(|(idx, (lists, atoms, used))| {
            let mut sub = Solver::new(g, ord.clone(), &fr, cap, opts, gate);
            let mut lists = lists.clone();
            let r = sub.solve(split_depth, &mut lists, atoms, *used);
            *slots[idx].lock().unwrap() = Some(sub.stats.clone());
            match r {
                Err(e) => Some((idx, Err(e))),
                Ok(Some(w)) => Some((idx, Ok(w))),
                Ok(None) => None,
            }
        });
    match found {
        Some((idx, r)) => {
            for slot in slots.iter().take(idx + 1) {
                if let Some(s) = slot.lock().unwrap().as_ref() {
                    solver.stats.absorb(s);
                }
            }
            r.map(Some)
        }
        None => {
            for slot in &slots {
                if let Some(s) = slot.lock().unwrap().as_ref() {
                    solver.stats.absorb(s);
                }
            }
            Ok(None)
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn solve_root(solver: &mut Solver<'_>) -> Result<Option<Vec<u32>>, ChoosabilityError> {
    let mut lists = Vec::new();
    solver.solve(0, &mut lists, &[], 0)
}

pub fn is_f_choosable(g: &Graph, f: &FSpec) -> Result<Verdict, ChoosabilityError> {
    is_f_choosable_with(g, f, &SolveOptions::default())
}

/// Single-threaded run regardless of the `parallel` feature; same verdicts.
pub fn is_f_choosable_sequential(
    g: &Graph,
    f: &FSpec,
    opts: &SolveOptions,
) -> Result<Verdict, ChoosabilityError> {
    let fr = f.resolve(g)?;
    if g.vertices().all(|v| fr[v] >= g.degree(v) + 1) {
        return Ok(Verdict { choosable: true, witness: None, stats: SearchStats::default() });
    }
    let cap = validate(g, &fr, opts)?;
    let ord = search_order(g, &fr);
    let gate = Gate::new(opts.node_budget);
    let mut solver = Solver::new(g, ord.clone(), &fr, cap, opts, &gate);
    if fr.iter().any(|&x| x == 0) {
        let lists = solver.first_completion(0, &[], &[], 0);
        solver.stats.bad_shortcuts += 1;
        let stats = solver.stats.clone();
        return Ok(finish_witness(g, Some(&lists), &ord, stats));
    }
    let mut lists = Vec::new();
    let result = solver.solve(0, &mut lists, &[], 0)?;
    let stats = solver.stats.clone();
    Ok(finish_witness(g, result.as_deref(), &ord, stats))
}

pub fn is_d1_choosable(g: &Graph) -> Result<Verdict, ChoosabilityError> {
    is_f_choosable(g, &FSpec::d1())
}

pub fn is_d0_choosable(g: &Graph) -> Result<Verdict, ChoosabilityError> {
    is_f_choosable(g, &FSpec::d0())
}

/// Every f-assignment with pot size at most `pot_cap`, one canonical
/// representative per color-permutation orbit, in lexicographic stream
/// order. `emit` returns false to stop; the function returns true iff the
/// stream was exhausted.
pub fn enumerate_assignments(
    g: &Graph,
    f: &FSpec,
    pot_cap: usize,
    emit: &mut dyn FnMut(&ListAssignment) -> bool,
) -> Result<bool, ChoosabilityError> {
    let fr = f.resolve(g)?;
    let cap = pot_cap.min(32);
    fn go(
        n: usize,
        f: &[usize],
        cap: usize,
        depth: usize,
        lists: &mut Vec<u32>,
        atoms: &[u32],
        used: usize,
        emit: &mut dyn FnMut(&ListAssignment) -> bool,
    ) -> bool {
        if depth == n {
            return emit(&ListAssignment::new(lists.clone()));
        }
        let mut cand = Vec::new();
        candidates(atoms, used, f[depth], cap, &mut cand);
        for c in cand {
            lists.push(c);
            let (a, u) = refine_atoms(atoms, used, c);
            if !go(n, f, cap, depth + 1, lists, &a, u, emit) {
                return false;
            }
            lists.pop();
        }
        true
    }
    let mut lists = Vec::new();
    Ok(go(g.n(), &fr, cap, 0, &mut lists, &[], 0, emit))
}

pub fn enumerate_assignments_collect(
    g: &Graph,
    f: &FSpec,
    pot_cap: usize,
) -> Result<Vec<ListAssignment>, ChoosabilityError> {
    let mut out = Vec::new();
    enumerate_assignments(g, f, pot_cap, &mut |a| {
        out.push(a.clone());
        true
    })?;
    Ok(out)
}

/// All bad assignments whose pot size equals the minimum pot size over all
/// bad f-assignments. Errors with `Choosable` if there are none.
pub fn minimal_bad_assignments(g: &Graph, f: &FSpec) -> Result<Vec<ListAssignment>, ChoosabilityError> {
    let fr = f.resolve(g)?;
    for (v, &fv) in fr.iter().enumerate() {
        if fv >= g.n() {
            return Err(ChoosabilityError::FTooLarge { v, f: fv, n: g.n() });
        }
    }
    for p in 0..g.n() {
        let mut bad = Vec::new();
        enumerate_assignments(g, f, p, &mut |a| {
            if a.pot_size() == p && color_from_lists(g, &a.lists).is_none() {
                bad.push(a.clone());
            }
            true
        })?;
        if !bad.is_empty() {
            return Ok(bad);
        }
    }
    Err(ChoosabilityError::Choosable)
}

/// Least k such that G is k-choosable.
pub fn list_chromatic_number(g: &Graph, opts: &SolveOptions) -> Result<usize, ChoosabilityError> {
    let lb = crate::clique::clique_number(g);
    for k in lb..g.n() {
        if is_f_choosable_with(g, &FSpec::constant(k), opts)?.choosable {
            return Ok(k);
        }
    }
    Ok(g.n()) // every graph is |G|-choosable
}
