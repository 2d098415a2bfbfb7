//! Randomized spot-checks for claims whose full hypotheses are out of
//! exhaustive reach: sampled list assignments that the surrounding argument
//! predicts are always colorable.

use super::checks::CheckError;
use super::report::{Report, Run};
use crate::choosability::color_from_lists;
use crate::clique::clique_number;
use crate::graph::Graph;
use crate::multigraph::Multigraph;
use crate::verifier::universe::graphs_up_to;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SMOKE_GADGETS: &[&str] = &["two-triple-edges", "mu-bound-AB"];

pub fn smoke_check_gadget(id: &str, samples: usize, seed: u64) -> Result<Report, CheckError> {
    match id {
        "two-triple-edges" => Ok(two_triple_edges(samples, seed)),
        "mu-bound-AB" => Ok(mu_bound_ab(samples, seed)),
        other => Err(CheckError::Unknown(other.to_string())),
    }
}

fn random_subset(rng: &mut ChaCha8Rng, pot: usize, k: usize) -> u32 {
    rand::seq::index::sample(rng, pot, k)
        .iter()
        .fold(0u32, |m, i| m | (1 << i))
}

/// Two triple edges sharing a middle vertex, plus pendant edges: the edge
/// coloring step colors the shared instances from lists of size 8 and the
/// pendant instances from lists of size 4 or 5.  Every sampled assignment
/// of those sizes must admit a proper edge coloring.
fn two_triple_edges(samples: usize, seed: u64) -> Report {
    let mut run = Run::new(
        "two-triple-edges",
        format!("{samples} sampled list assignments on the 13-instance gadget, pot of 9 colors"),
    )
    .smoke();
    let mg = Multigraph::new(
        10,
        &[
            (0, 3, 1),
            (0, 4, 1),
            (0, 5, 1),
            (0, 1, 3),
            (1, 6, 1),
            (1, 2, 3),
            (2, 7, 1),
            (2, 8, 1),
            (2, 9, 1),
        ],
    )
    .unwrap();
    let line = mg.line_graph().unwrap();
    let sizes: Vec<usize> = mg
        .edge_instances()
        .iter()
        .map(|&(u, v, _)| match (u, v) {
            (0, 1) | (1, 2) => 8,
            (1, _) => 5,
            _ => 4,
        })
        .collect();
    assert_eq!(line.n(), 13);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let lists: Vec<u32> = sizes.iter().map(|&k| random_subset(&mut rng, 9, k)).collect();
        run.tested(1);
        if color_from_lists(&line, &lists).is_none() {
            run.fail(
                format!("sample {i}"),
                format!("uncolorable edge lists {lists:?}"),
            );
        }
    }
    run.done()
}

/// Listed shapes for the K_t join claim, duplicated here so the smoke pool
/// matches the exhaustive check's complement.
fn listed_shape(t: usize, b: &Graph) -> bool {
    use super::families::{is_two_cliques, is_two_cliques_plus_edge};
    match t {
        3 => is_two_cliques(b),
        2 => {
            is_two_cliques(b)
                || is_two_cliques_plus_edge(b)
                || b.vertices().any(|v| {
                    b.neighbors(v) == b.all_vertices() & !(1 << v) && b.n() >= 2 && {
                        let rest = b.induced(b.all_vertices() & !(1 << v)).unwrap();
                        is_two_cliques(&rest)
                    }
                })
        }
        _ => false,
    }
}

/// Sampled lists of the exact guaranteed sizes on K_t joined to a complement
/// of a bipartite graph outside the failure shapes: each must be colorable.
fn mu_bound_ab(samples: usize, seed: u64) -> Report {
    let mut run = Run::new(
        "mu-bound-AB",
        format!("{samples} sampled list assignments over K_t * B pool, t in 2..=3, |B| <= 5"),
    )
    .smoke();
    let mut pool: Vec<(usize, usize, Graph)> = Vec::new();
    for t in 2..=3 {
        for j in 0..=1 {
            for b in graphs_up_to(5).unwrap() {
                if b.complement().bipartition().is_none() {
                    continue;
                }
                if clique_number(&b) + j >= b.n() || listed_shape(t, &b) {
                    continue;
                }
                pool.push((t, j, b));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let (t, j, b) = {
            use rand::Rng;
            &pool[rng.gen_range(0..pool.len())]
        };
        let g = Graph::complete(*t).join(b).unwrap();
        let sizes: Vec<usize> = g
            .vertices()
            .map(|v| if v < *t { g.degree(v) - j } else { g.degree(v) - 1 })
            .collect();
        let pot = sizes.iter().max().unwrap() + 2;
        let lists: Vec<u32> = sizes.iter().map(|&k| random_subset(&mut rng, pot, k)).collect();
        run.tested(1);
        if color_from_lists(&g, &lists).is_none() {
            run.fail(
                format!("sample {i}: t = {t}, j = {j}, B = {}", b.to_text().replace('\n', "; ")),
                format!("uncolorable lists {lists:?}"),
            );
        }
    }
    run.done()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadgets_pass() {
        for id in SMOKE_GADGETS {
            let rep = smoke_check_gadget(id, 50, 7).unwrap();
            assert!(rep.pass(), "{id}: {:?}", rep.failures);
            assert!(!rep.exhaustive);
            assert_eq!(rep.tested, 50);
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let a = smoke_check_gadget("two-triple-edges", 10, 42).unwrap();
        let b = smoke_check_gadget("two-triple-edges", 10, 42).unwrap();
        assert_eq!(a.tested, b.tested);
        assert_eq!(a.failures, b.failures);
    }

    #[test]
    fn zero_samples_is_vacuous_and_unknown_errors() {
        let rep = smoke_check_gadget("mu-bound-AB", 0, 1).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.tested, 0);
        assert!(smoke_check_gadget("bogus", 1, 1).is_err());
    }
}
