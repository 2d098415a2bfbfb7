//! Counterexample verification, the chi >= Delta >= 9 clique/coloring
//! spot-check, and critical-subgraph extraction.

use super::report::{Report, Run};
use crate::chromatic::{chromatic_number, BudgetExceeded, Coloring};
use crate::clique::{clique_number, find_clique_of_size};
use crate::graph::{full_set, set_members, Graph, VertexSet};
use crate::structure::find_claw;
use thiserror::Error;

pub const MAX_COUNTEREXAMPLE_N: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BkError {
    #[error("claw at center {center} with leaves {leaves:?}")]
    ClawFound { center: usize, leaves: [usize; 3] },
    #[error("max degree {0} is below the required 9")]
    DeltaTooSmall(usize),
    #[error("graph has {0} vertices; the cap is {1}")]
    TooLarge(usize, usize),
    #[error("chromatic number {0} is below the requested {1}")]
    ChiBelow(usize, usize),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BkOutcome {
    /// A clique of size Delta.
    Clique(VertexSet),
    /// A proper coloring with at most Delta - 1 colors.
    Coloring(Coloring),
    /// Neither witness exists: chi > Delta - 1 and omega < Delta.  For a
    /// claw-free graph with Delta >= 9 this would refute a theorem, so it is
    /// reported as structured data rather than a panic.
    Refutation { delta: usize, omega: usize, chi: usize },
}

/// Pass iff chi = Delta and omega <= Delta - 1, i.e. the graph beats the
/// chi <= max{omega, Delta - 1} bound.
pub fn verify_counterexample(g: &Graph, budget: u64) -> Result<Report, BkError> {
    if g.n() > MAX_COUNTEREXAMPLE_N {
        return Err(BkError::TooLarge(g.n(), MAX_COUNTEREXAMPLE_N));
    }
    let mut run = Run::new("counterexample", format!("single graph, n = {}", g.n()));
    let delta = g.max_degree();
    let omega = clique_number(g);
    let (chi, _) = chromatic_number(g, budget)?;
    run.note(&format!("delta = {delta}, omega = {omega}, chi = {chi}"));
    run.tested(1);
    if chi != delta {
        run.fail(g.to_text(), format!("chi = {chi} != delta = {delta}"));
    } else if omega > delta - 1 {
        run.fail(g.to_text(), format!("omega = {omega} > delta - 1 = {}", delta - 1));
    }
    Ok(run.done())
}

/// For a claw-free graph with Delta >= 9: produce a K_Delta or a proper
/// (Delta - 1)-coloring; one must exist.
pub fn bk_check(g: &Graph, budget: u64) -> Result<BkOutcome, BkError> {
    if let Some((center, leaves)) = find_claw(g) {
        return Err(BkError::ClawFound { center, leaves });
    }
    let delta = g.max_degree();
    if delta < 9 {
        return Err(BkError::DeltaTooSmall(delta));
    }
    if let Some(k) = find_clique_of_size(g, delta, full_set(g.n())) {
        return Ok(BkOutcome::Clique(k));
    }
    let (chi, coloring) = chromatic_number(g, budget)?;
    if chi <= delta - 1 {
        return Ok(BkOutcome::Coloring(coloring));
    }
    Ok(BkOutcome::Refutation { delta, omega: clique_number(g), chi })
}

/// Greedy vertex deletion in index order until every remaining vertex is
/// needed: the result G' satisfies chi(G') >= k and chi(G' - v) < k for all v.
pub fn extract_critical(g: &Graph, k: usize, budget: u64) -> Result<Graph, BkError> {
    let (chi, _) = chromatic_number(g, budget)?;
    if chi < k {
        return Err(BkError::ChiBelow(chi, k));
    }
    let mut keep = full_set(g.n());
    loop {
        let mut deleted = false;
        for v in set_members(keep) {
            let rest = keep & !(1 << v);
            if rest == 0 {
                continue;
            }
            let h = g.induced(rest).unwrap();
            if chromatic_number(&h, budget)?.0 >= k {
                keep = rest;
                deleted = true;
                break;
            }
        }
        if !deleted {
            return Ok(g.induced(keep).unwrap());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::chromatic::is_proper;

    const BUDGET: u64 = 50_000_000;

    #[test]
    fn fig1_counterexamples_pass() {
        for g in [catalog::fig1a(), catalog::fig1b(), catalog::fig1c(), catalog::fig1d()] {
            let rep = verify_counterexample(&g, BUDGET).unwrap();
            assert!(rep.pass(), "{:?}", rep.failures);
        }
    }

    #[test]
    fn g5_is_not_a_counterexample() {
        let g = catalog::g_t(5).unwrap();
        let rep = verify_counterexample(&g, BUDGET).unwrap();
        assert!(!rep.pass()); // chi = 8 = delta - 1
    }

    #[test]
    fn bk_check_examples() {
        // G_5 has delta = 9, omega = 7: expect an 8-coloring
        let g5 = catalog::g_t(5).unwrap();
        match bk_check(&g5, BUDGET).unwrap() {
            BkOutcome::Coloring(c) => {
                assert!(is_proper(&g5, &c));
                assert!(c.iter().max().unwrap() + 1 <= 8);
            }
            other => panic!("expected coloring, got {other:?}"),
        }
        // K10: delta = 9 and omega = 10, the clique branch fires
        match bk_check(&Graph::complete(10), BUDGET).unwrap() {
            BkOutcome::Clique(k) => assert_eq!(k.count_ones(), 9),
            other => panic!("expected clique, got {other:?}"),
        }
        // hypothesis gates
        assert_eq!(bk_check(&catalog::fig1d(), BUDGET), Err(BkError::DeltaTooSmall(8)));
        let star = Graph::new(10, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(bk_check(&star, BUDGET), Err(BkError::ClawFound { center: 0, .. })));
    }

    #[test]
    fn extract_critical_examples() {
        let g = Graph::cycle(5).disjoint_union(&Graph::empty(1)).unwrap();
        let crit = extract_critical(&g, 3, BUDGET).unwrap();
        assert_eq!(crit.n(), 5);
        assert_eq!(crit, Graph::cycle(5));
        assert_eq!(extract_critical(&Graph::complete(5), 5, BUDGET).unwrap(), Graph::complete(5));
        assert_eq!(
            extract_critical(&Graph::path(4), 3, BUDGET),
            Err(BkError::ChiBelow(2, 3))
        );
        // criticality forces min degree >= k - 1
        let f = catalog::fig1a();
        let crit = extract_critical(&f, 6, BUDGET).unwrap();
        assert!(crit.min_degree() >= 5);
        assert!(chromatic_number(&crit, BUDGET).unwrap().0 >= 6);
    }
}
