//! List assignments over a shared color pot, list-size specifications, and
//! the list-coloring backtracker.

use crate::graph::{set_members, Graph};
use thiserror::Error;

/// Per-vertex color sets, colors as bit positions 0..31.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    pub lists: Vec<u32>,
}

impl ListAssignment {
    pub fn new(lists: Vec<u32>) -> ListAssignment {
        ListAssignment { lists }
    }

    pub fn pot(&self) -> u32 {
        self.lists.iter().fold(0, |m, &l| m | l)
    }

    pub fn pot_size(&self) -> usize {
        self.pot().count_ones() as usize
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(|l| l.count_ones() as usize).collect()
    }

    /// Serialization: one line per vertex, "v: c1 c2 c3".
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, &l) in self.lists.iter().enumerate() {
            let cols: Vec<String> = set_members(l).iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("{v}: {}\n", cols.join(" ")));
        }
        out
    }

    pub fn parse(text: &str, n: usize) -> Result<ListAssignment, String> {
        let mut lists = vec![0u32; n];
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (v, rest) = line
                .split_once(':')
                .ok_or_else(|| format!("bad list line: {line}"))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| format!("bad vertex in: {line}"))?;
            if v >= n {
                return Err(format!("vertex {v} out of range"));
            }
            for tok in rest.split_whitespace() {
                let c: usize = tok.parse().map_err(|_| format!("bad color in: {line}"))?;
                if c >= 32 {
                    return Err(format!("color {c} out of range"));
                }
                lists[v] |= 1 << c;
            }
        }
        Ok(ListAssignment { lists })
    }
}

/// Proper coloring with c(v) in L(v), or None after exhausting the search.
/// Branching: uncolored vertex with the fewest currently available colors,
/// ties by index; colors ascending.
pub fn color_from_lists(g: &Graph, lists: &[u32]) -> Option<Vec<usize>> {
    debug_assert_eq!(lists.len(), g.n());
    let mut avail: Vec<u32> = lists.to_vec();
    let mut color = vec![usize::MAX; g.n()];
    fn go(g: &Graph, avail: &mut [u32], color: &mut [usize], left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let mut pick = usize::MAX;
        let mut best = u32::MAX;
        for v in g.vertices() {
            if color[v] == usize::MAX {
                let k = avail[v].count_ones();
                if k < best {
                    best = k;
                    pick = v;
                    if k == 0 {
                        return false;
                    }
                }
            }
        }
        let v = pick;
        let mut cand = avail[v];
        while cand != 0 {
            let c = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            color[v] = c;
            let mut undo = Vec::new();
            for w in set_members(g.neighbors(v)) {
                if color[w] == usize::MAX && avail[w] & (1 << c) != 0 {
                    avail[w] &= !(1 << c);
                    undo.push(w);
                }
            }
            if go(g, avail, color, left - 1) {
                return true;
            }
            for w in undo {
                avail[w] |= 1 << c;
            }
            color[v] = usize::MAX;
        }
        color[v] = usize::MAX;
        false
    }
    if go(g, &mut avail, &mut color, g.n()) {
        Some(color)
    } else {
        None
    }
}

/// Enumerate proper colorings of the subgraph induced on `verts` from
/// `lists`, invoking `emit` for each; stop early when `emit` returns false
/// or when `node_budget` search nodes are spent. Returns false on budget
/// exhaustion (enumeration incomplete). At each vertex, colors already used
/// on the prefix are tried before fresh ones, so colorings with few distinct
/// colors surface early (callers prune best on high-reuse colorings).
pub fn for_each_coloring(
    g: &Graph,
    verts: &[usize],
    lists: &[u32],
    node_budget: &mut u64,
    emit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    // colors stored per position in `verts`
    fn go(
        g: &Graph,
        verts: &[usize],
        avail: &mut Vec<u32>,
        color: &mut Vec<usize>,
        depth: usize,
        budget: &mut u64,
        emit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Option<bool> {
        // None = stop requested, Some(true) = complete, Some(false) = budget out
        if depth == verts.len() {
            return if emit(color) { Some(true) } else { None };
        }
        if *budget == 0 {
            return Some(false);
        }
        *budget -= 1;
        let v = verts[depth];
        let used: u32 = color.iter().fold(0, |m, &c| m | (1 << c));
        let mut complete = true;
        for mut cand in [avail[depth] & used, avail[depth] & !used] {
            while cand != 0 {
                let c = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                color.push(c);
                let saved: Vec<u32> = avail[depth + 1..].to_vec();
                for j in depth + 1..verts.len() {
                    if g.has_edge(v, verts[j]) {
                        avail[j] &= !(1 << c);
                    }
                }
                let r = go(g, verts, avail, color, depth + 1, budget, emit);
                avail[depth + 1..].copy_from_slice(&saved);
                color.pop();
                match r {
                    None => return None,
                    Some(true) => {}
                    Some(false) => complete = false,
                }
            }
        }
        Some(complete)
    }
    let mut avail: Vec<u32> = verts.iter().map(|&v| lists[v]).collect();
    let mut color = Vec::with_capacity(verts.len());
    matches!(
        go(g, verts, &mut avail, &mut color, 0, node_budget, emit),
        Some(true) | None
    )
}

/// Required list sizes: d0 (f = d), d1 (f = d - 1), a constant, or explicit
/// sizes; `low` overrides bump a vertex to f = d(v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FBase {
    D0,
    D1,
    Const(usize),
    Explicit(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSpec {
    pub base: FBase,
    pub low: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FSpecError {
    #[error("explicit sizes cover {0} vertices, graph has {1}")]
    WrongLength(usize, usize),
    #[error("low vertex {0} out of range")]
    LowOutOfRange(usize),
    #[error("cannot parse f-spec: {0}")]
    Parse(String),
}

impl FSpec {
    pub fn d0() -> FSpec {
        FSpec { base: FBase::D0, low: vec![] }
    }

    pub fn d1() -> FSpec {
        FSpec { base: FBase::D1, low: vec![] }
    }

    pub fn constant(k: usize) -> FSpec {
        FSpec { base: FBase::Const(k), low: vec![] }
    }

    pub fn explicit(sizes: Vec<usize>) -> FSpec {
        FSpec { base: FBase::Explicit(sizes), low: vec![] }
    }

    pub fn with_low(mut self, low: &[usize]) -> FSpec {
        self.low = low.to_vec();
        self
    }

    /// Resolved sizes; d1 saturates at zero on isolated vertices (such a
    /// graph is trivially not choosable via the empty list).
    pub fn resolve(&self, g: &Graph) -> Result<Vec<usize>, FSpecError> {
        let mut f: Vec<usize> = match &self.base {
            FBase::D0 => g.vertices().map(|v| g.degree(v)).collect(),
            FBase::D1 => g.vertices().map(|v| g.degree(v).saturating_sub(1)).collect(),
            FBase::Const(k) => vec![*k; g.n()],
            FBase::Explicit(sizes) => {
                if sizes.len() != g.n() {
                    return Err(FSpecError::WrongLength(sizes.len(), g.n()));
                }
                sizes.clone()
            }
        };
        for &v in &self.low {
            if v >= g.n() {
                return Err(FSpecError::LowOutOfRange(v));
            }
            f[v] = g.degree(v);
        }
        Ok(f)
    }

    /// Syntax: "d1", "d0", "k=4", "f=3,3,2", each optionally followed by
    /// " low=2,5".
    pub fn parse(text: &str) -> Result<FSpec, FSpecError> {
        let mut base = None;
        let mut low = vec![];
        for tok in text.split_whitespace() {
            if tok == "d0" {
                base = Some(FBase::D0);
            } else if tok == "d1" {
                base = Some(FBase::D1);
            } else if let Some(k) = tok.strip_prefix("k=") {
                let k = k.parse().map_err(|_| FSpecError::Parse(text.into()))?;
                base = Some(FBase::Const(k));
            } else if let Some(sizes) = tok.strip_prefix("f=") {
                let sizes = sizes
                    .split(',')
                    .map(|t| t.parse())
                    .collect::<Result<Vec<usize>, _>>()
                    .map_err(|_| FSpecError::Parse(text.into()))?;
                base = Some(FBase::Explicit(sizes));
            } else if let Some(vs) = tok.strip_prefix("low=") {
                low = vs
                    .split(',')
                    .map(|t| t.parse())
                    .collect::<Result<Vec<usize>, _>>()
                    .map_err(|_| FSpecError::Parse(text.into()))?;
            } else {
                return Err(FSpecError::Parse(text.into()));
            }
        }
        let base = base.ok_or_else(|| FSpecError::Parse(text.into()))?;
        Ok(FSpec { base, low })
    }
}

impl std::fmt::Display for FSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.base {
            FBase::D0 => write!(f, "d0")?,
            FBase::D1 => write!(f, "d1")?,
            FBase::Const(k) => write!(f, "k={k}")?,
            FBase::Explicit(sizes) => {
                let s: Vec<String> = sizes.iter().map(|x| x.to_string()).collect();
                write!(f, "f={}", s.join(","))?;
            }
        }
        if !self.low.is_empty() {
            let s: Vec<String> = self.low.iter().map(|x| x.to_string()).collect();
            write!(f, " low={}", s.join(","))?;
        }
        Ok(())
    }
}

/// Lowest `k` set bits of a mask.
pub(crate) fn lowest_bits(mut mask: u32, k: usize) -> u32 {
    let mut out = 0;
    for _ in 0..k {
        let b = mask & mask.wrapping_neg();
        out |= b;
        mask ^= b;
    }
    out
}

/// Lexicographically minimal relabeling of an assignment under global color
/// permutation, reading lists in vertex order. Colors sharing the same
/// membership pattern over the already-processed prefix are interchangeable,
/// so the greedy choice below is globally minimal.
pub fn canonical_form(assignment: &ListAssignment) -> ListAssignment {
    let lists = &assignment.lists;
    // atoms: parallel vectors of (old-color mask, new-label mask)
    let mut atoms_old: Vec<u32> = Vec::new();
    let mut atoms_new: Vec<u32> = Vec::new();
    let mut fresh_old = assignment.pot();
    let mut used = 0usize;
    let mut out = Vec::with_capacity(lists.len());
    for &l in lists {
        let mut new_list = 0u32;
        let mut next_old = Vec::new();
        let mut next_new = Vec::new();
        for i in 0..atoms_old.len() {
            let hit_old = atoms_old[i] & l;
            let k = hit_old.count_ones() as usize;
            let hit_new = lowest_bits(atoms_new[i], k);
            new_list |= hit_new;
            if k > 0 {
                next_old.push(hit_old);
                next_new.push(hit_new);
            }
            if k < atoms_new[i].count_ones() as usize {
                next_old.push(atoms_old[i] & !hit_old);
                next_new.push(atoms_new[i] & !hit_new);
            }
        }
        let fresh_hit = l & fresh_old;
        let kf = fresh_hit.count_ones() as usize;
        if kf > 0 {
            let new_block = crate::graph::full_set(used + kf) & !crate::graph::full_set(used);
            new_list |= new_block;
            next_old.push(fresh_hit);
            next_new.push(new_block);
            fresh_old &= !fresh_hit;
            used += kf;
        }
        atoms_old = next_old;
        atoms_new = next_new;
        out.push(new_list);
    }
    ListAssignment { lists: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_from_lists_examples() {
        let k3 = Graph::complete(3);
        assert!(color_from_lists(&k3, &[0b11, 0b11, 0b11]).is_none());
        let c5 = Graph::cycle(5);
        let lists = [0b011, 0b110, 0b101, 0b011, 0b110];
        let c = color_from_lists(&c5, &lists).unwrap();
        for v in 0..5 {
            assert!(lists[v] & (1 << c[v]) != 0);
        }
        for (u, v) in c5.edges() {
            assert_ne!(c[u], c[v]);
        }
        // ordinary chromatic coloring from identical lists
        let any = Graph::cycle(5).join(&Graph::complete(2)).unwrap();
        let lists = vec![0b11111u32; 7];
        assert!(color_from_lists(&any, &lists).is_some());
    }

    #[test]
    fn fspec_resolution_and_parse() {
        let g = crate::catalog::n6();
        let d1 = FSpec::d1().resolve(&g).unwrap();
        assert_eq!(d1, vec![2, 2, 2, 2, 1, 3]);
        let low = FSpec::d1().with_low(&[4]).resolve(&g).unwrap();
        assert_eq!(low[4], 2);
        assert_eq!(FSpec::parse("d1 low=2,5").unwrap(), FSpec::d1().with_low(&[2, 5]));
        assert_eq!(FSpec::parse("k=4").unwrap(), FSpec::constant(4));
        assert_eq!(
            FSpec::parse("f=3,2,1").unwrap(),
            FSpec::explicit(vec![3, 2, 1])
        );
        assert!(FSpec::parse("nope").is_err());
        let roundtrip = FSpec::parse("d0 low=1").unwrap();
        assert_eq!(FSpec::parse(&roundtrip.to_string()).unwrap(), roundtrip);
    }

    #[test]
    fn assignment_text_roundtrip() {
        let a = ListAssignment::new(vec![0b101, 0b011, 0b100]);
        let b = ListAssignment::parse(&a.to_text(), 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pot_size(), 3);
        assert!(ListAssignment::parse("0: 40", 1).is_err());
    }

    #[test]
    fn canonical_form_basics() {
        // relabeling colors does not change the canonical form
        let a = ListAssignment::new(vec![0b10100, 0b00110]);
        let b = ListAssignment::new(vec![0b01001, 0b01010]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        // canonical form uses colors 0.. in first-appearance order
        let c = canonical_form(&a);
        assert_eq!(c.lists[0], 0b011);
    }

    #[test]
    fn canonical_form_is_orbit_minimum() {
        // brute force: min over all permutations of the pot
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        fn apply(a: &ListAssignment, p: &[usize]) -> Vec<u32> {
            a.lists
                .iter()
                .map(|&l| set_members(l).iter().fold(0u32, |m, &c| m | (1 << p[c])))
                .collect()
        }
        fn key(lists: &[u32]) -> Vec<Vec<usize>> {
            lists.iter().map(|&l| set_members(l)).collect()
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..5);
            let pot = rng.gen_range(1..5u32);
            let lists: Vec<u32> = (0..n)
                .map(|_| rng.gen_range(0..(1u32 << pot)))
                .collect();
            let a = ListAssignment::new(lists);
            // compact the pot so permutations cover it
            let a = canonical_form(&a);
            let p = a.pot_size();
            let min = perms(p)
                .iter()
                .map(|perm| key(&apply(&a, perm)))
                .min()
                .unwrap();
            assert_eq!(key(&canonical_form(&a).lists), min);
        }
    }
}
