//! Command-line front end: graph ingestion, choosability and chromatic
//! queries, structure recognition, the check registry, and smoke gadgets.
//!
//! Exit codes: 0 = pass/choosable, 1 = failed/not choosable, 2 = input or
//! usage error, 3 = budget exceeded.

use bklab_core::catalog::{catalog_list, resolve_graph_arg};
use bklab_core::choosability::{
    is_f_choosable_with, list_chromatic_number, ChoosabilityError, FSpec, SolveOptions, Verdict,
};
use bklab_core::chromatic::chromatic_number;
use bklab_core::clique::{clique_number, independence_number};
use bklab_core::graph::{set_members, Graph};
use bklab_core::structure::{
    as_thickened_c5, find_claw, find_interval_two_joins, is_circular_interval, is_quasi_line,
    reduce_two_join, two_clique_cover, TwoJoinKind, DEFAULT_MAX_H,
};
use bklab_core::verifier::{
    bk_check, run_check, smoke_check_gadget, verify_counterexample, BkError, BkOutcome,
    CheckConfig, CHECK_IDS, SMOKE_GADGETS,
};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::process::ExitCode;

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "bklab", version, about = "Exact small-graph coloring laboratory")]
struct Cli {
    /// Worker threads for the parallel search (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Search-node budget for the choosability and coloring solvers.
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph: a file path, or @name[:params] from the catalog.
    graph: String,
}

#[derive(Subcommand)]
enum Command {
    /// Decide f-choosability; prints a bad-assignment witness when not.
    Choosable {
        #[command(flatten)]
        graph: GraphArg,
        /// List-size spec: "d1", "d0", "k=4", "f=3,3,2", optionally "low=0,2".
        #[arg(long, default_value = "d1")]
        f: String,
    },
    /// Run registered checks by id, or all of them.
    Verify {
        /// Check ids, or "all"; "fig1" is an alias for the Fig1 check.
        ids: Vec<String>,
        /// |B| bound for the join-classification sweeps.
        #[arg(long)]
        max_b: Option<usize>,
    },
    /// Structural profile: claw-free, quasi-line, covers, invariants.
    Recognize {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Exact chromatic number with a witness coloring.
    Chromatic {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// List catalog entries, or print a named graph.
    Catalog { name: Option<String> },
    /// For a claw-free graph with max degree >= 9: find a max-degree clique
    /// or a (max degree - 1)-coloring; also verifies small counterexamples.
    BkCheck {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Find interval 2-joins and run the reduction to termination.
    #[command(name = "reduce-2join")]
    Reduce2join {
        #[command(flatten)]
        graph: GraphArg,
        /// Largest |H| searched.
        #[arg(long, default_value_t = DEFAULT_MAX_H)]
        max_h: usize,
    },
    /// Randomized spot-check gadgets.
    Smoke {
        /// Gadget id, or "all".
        id: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes instead of panicking
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    #[cfg(feature = "parallel")]
    if let Some(n) = cli.workers {
        if rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_err() {
            eprintln!("error: could not configure worker pool");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    #[cfg(not(feature = "parallel"))]
    if cli.workers.is_some() {
        eprintln!("note: built without the parallel feature; --workers ignored");
    }
    ExitCode::from(run(&cli))
}

fn opts(cli: &Cli) -> SolveOptions {
    let mut o = SolveOptions::default();
    if let Some(b) = cli.node_budget {
        o.node_budget = b;
    }
    o
}

fn chi_budget(cli: &Cli) -> u64 {
    cli.node_budget.unwrap_or(50_000_000)
}

fn load(arg: &str) -> Result<Graph, u8> {
    resolve_graph_arg(arg).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })
}

fn set_list(s: u32) -> Vec<usize> {
    set_members(s)
}

fn run(cli: &Cli) -> u8 {
    match &cli.command {
        Command::Choosable { graph, f } => cmd_choosable(cli, &graph.graph, f),
        Command::Verify { ids, max_b } => cmd_verify(cli, ids, *max_b),
        Command::Recognize { graph } => cmd_recognize(cli, &graph.graph),
        Command::Chromatic { graph } => cmd_chromatic(cli, &graph.graph),
        Command::Catalog { name } => cmd_catalog(cli, name.as_deref()),
        Command::BkCheck { graph } => cmd_bk_check(cli, &graph.graph),
        Command::Reduce2join { graph, max_h } => cmd_reduce(cli, &graph.graph, *max_h),
        Command::Smoke { id, samples, seed } => cmd_smoke(cli, id, *samples, *seed),
    }
}

fn cmd_choosable(cli: &Cli, graph: &str, fspec: &str) -> u8 {
    let g = match load(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let f = match FSpec::parse(fspec) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let verdict: Result<Verdict, ChoosabilityError> = match is_f_choosable_with(&g, &f, &opts(cli))
    {
        Err(ChoosabilityError::FTooLarge { .. }) => {
            is_f_choosable_with(&g, &f, &SolveOptions { exhaustive: true, ..opts(cli) })
        }
        r => r,
    };
    match verdict {
        Ok(v) => {
            if cli.json {
                let witness = v
                    .witness
                    .as_ref()
                    .map(|w| w.lists.iter().map(|&l| set_list(l)).collect::<Vec<_>>());
                println!(
                    "{}",
                    json!({
                        "n": g.n(),
                        "f": fspec,
                        "choosable": v.choosable,
                        "witness": witness,
                        "nodes": v.stats.nodes,
                    })
                );
            } else if v.choosable {
                println!("choosable");
            } else {
                println!("not choosable");
                if let Some(w) = &v.witness {
                    println!("bad assignment: {}", w.to_text());
                }
            }
            if v.choosable {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(ChoosabilityError::Budget(b)) => {
            eprintln!("error: node budget of {b} exhausted");
            EXIT_BUDGET
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_verify(cli: &Cli, ids: &[String], max_b: Option<usize>) -> u8 {
    let mut cfg = CheckConfig::default();
    if let Some(b) = cli.node_budget {
        cfg.node_budget = b;
    }
    if let Some(b) = max_b {
        cfg.max_b = b;
    }
    let requested: Vec<String> = if ids.is_empty() || ids.iter().any(|i| i == "all") {
        CHECK_IDS.iter().map(|s| s.to_string()).collect()
    } else {
        ids.iter()
            .map(|i| if i == "fig1" { "Fig1".to_string() } else { i.clone() })
            .collect()
    };
    let mut all_pass = true;
    for id in &requested {
        match run_check(id, &cfg) {
            Ok(rep) => {
                if cli.json {
                    println!("{}", rep.to_json());
                } else {
                    println!("{}", rep.summary_line());
                    for f in &rep.failures {
                        println!("  failure: {} -- {}", f.item, f.detail);
                    }
                }
                all_pass &= rep.pass();
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    if all_pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_recognize(cli: &Cli, graph: &str) -> u8 {
    let g = match load(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let chi = chromatic_number(&g, chi_budget(cli)).map(|p| p.0).ok();
    // list chromatic number is exponential in pot size; only attempt tiny n
    let chi_l = if g.n() <= 6 {
        list_chromatic_number(&g, &opts(cli)).ok()
    } else {
        None
    };
    let circ = if g.n() <= 9 { Some(is_circular_interval(&g).is_ok()) } else { None };
    let profile = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
        "omega": clique_number(&g),
        "alpha": independence_number(&g),
        "chi": chi,
        "list_chi": chi_l,
        "claw_free": find_claw(&g).is_none(),
        "quasi_line": is_quasi_line(&g).is_ok(),
        "two_clique_cover": two_clique_cover(&g).map(|(a, b)| [set_list(a), set_list(b)]),
        "thickened_c5": as_thickened_c5(&g).map(|ts| ts.iter().map(|&t| set_list(t)).collect::<Vec<_>>()),
        "circular_interval": circ,
    });
    if cli.json {
        println!("{profile}");
    } else {
        println!("{}", serde_json::to_string_pretty(&profile).unwrap());
    }
    EXIT_PASS
}

fn cmd_chromatic(cli: &Cli, graph: &str) -> u8 {
    let g = match load(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match chromatic_number(&g, chi_budget(cli)) {
        Ok((chi, coloring)) => {
            if cli.json {
                println!("{}", json!({ "chi": chi, "coloring": coloring }));
            } else {
                println!("chi = {chi}");
                println!("coloring: {coloring:?}");
            }
            EXIT_PASS
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_BUDGET
        }
    }
}

fn cmd_catalog(cli: &Cli, name: Option<&str>) -> u8 {
    match name {
        None => {
            if cli.json {
                let entries: Vec<_> = catalog_list()
                    .iter()
                    .map(|e| json!({ "name": e.name, "about": e.provenance, "params": e.params }))
                    .collect();
                println!("{}", json!(entries));
            } else {
                for e in catalog_list() {
                    let p = if e.params.is_empty() {
                        String::new()
                    } else {
                        format!(":{}", e.params)
                    };
                    println!("@{}{}  {}", e.name, p, e.provenance);
                }
            }
            EXIT_PASS
        }
        Some(n) => {
            let arg = if n.starts_with('@') { n.to_string() } else { format!("@{n}") };
            match load(&arg) {
                Ok(g) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({ "n": g.n(), "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>() })
                        );
                    } else {
                        print!("{}", g.to_text());
                    }
                    EXIT_PASS
                }
                Err(code) => code,
            }
        }
    }
}

fn cmd_bk_check(cli: &Cli, graph: &str) -> u8 {
    let g = match load(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    // small graphs below the degree threshold get the counterexample test
    match bk_check(&g, chi_budget(cli)) {
        Ok(BkOutcome::Clique(k)) => {
            if cli.json {
                println!("{}", json!({ "outcome": "clique", "vertices": set_list(k) }));
            } else {
                println!("clique of size {}: {:?}", k.count_ones(), set_list(k));
            }
            EXIT_PASS
        }
        Ok(BkOutcome::Coloring(c)) => {
            let colors = c.iter().max().map(|m| m + 1).unwrap_or(0);
            if cli.json {
                println!("{}", json!({ "outcome": "coloring", "colors": colors, "coloring": c }));
            } else {
                println!("proper {colors}-coloring: {c:?}");
            }
            EXIT_PASS
        }
        Ok(BkOutcome::Refutation { delta, omega, chi }) => {
            if cli.json {
                println!(
                    "{}",
                    json!({ "outcome": "refutation", "delta": delta, "omega": omega, "chi": chi })
                );
            } else {
                println!("refutation event: delta = {delta}, omega = {omega}, chi = {chi}");
            }
            EXIT_FAIL
        }
        Err(BkError::DeltaTooSmall(d)) => {
            // fall back to counterexample verification for the small graphs
            match verify_counterexample(&g, chi_budget(cli)) {
                Ok(rep) => {
                    if cli.json {
                        println!("{}", rep.to_json());
                    } else {
                        println!("max degree {d} < 9; counterexample test: {}", rep.summary_line());
                    }
                    if rep.pass() {
                        EXIT_PASS
                    } else {
                        EXIT_FAIL
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(BkError::Budget(b)) => {
            eprintln!("error: {b}");
            EXIT_BUDGET
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_reduce(cli: &Cli, graph: &str, max_h: usize) -> u8 {
    let g = match load(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let joins = find_interval_two_joins(&g, max_h);
    let mut out = Vec::new();
    for j in &joins {
        let mut chain = vec![j.clone()];
        let mut cur = j.clone();
        while cur.kind == TwoJoinKind::Canonical && cur.reducible {
            match reduce_two_join(&g, &cur) {
                Ok(next) => {
                    chain.push(next.clone());
                    cur = next;
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_FAIL;
                }
            }
        }
        out.push(chain);
    }
    if cli.json {
        let arr: Vec<_> = out
            .iter()
            .map(|chain| {
                chain
                    .iter()
                    .map(|j| {
                        json!({
                            "h": set_list(j.h),
                            "a1": set_list(j.a1),
                            "a2": set_list(j.a2),
                            "b1": set_list(j.b1),
                            "b2": set_list(j.b2),
                            "kind": format!("{:?}", j.kind),
                            "reducible": j.reducible,
                        })
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        println!("{}", json!(arr));
    } else {
        println!("{} interval 2-join(s)", out.len());
        for chain in &out {
            for (i, j) in chain.iter().enumerate() {
                println!(
                    "{}H = {:?}, A1 = {:?}, A2 = {:?}, B1 = {:?}, B2 = {:?}, {:?}{}",
                    if i == 0 { "- " } else { "    -> " },
                    set_list(j.h),
                    set_list(j.a1),
                    set_list(j.a2),
                    set_list(j.b1),
                    set_list(j.b2),
                    j.kind,
                    if j.reducible { ", reducible" } else { "" },
                );
            }
        }
    }
    EXIT_PASS
}

fn cmd_smoke(cli: &Cli, id: &str, samples: usize, seed: u64) -> u8 {
    let ids: Vec<&str> = if id == "all" { SMOKE_GADGETS.to_vec() } else { vec![id] };
    let mut all_pass = true;
    for gid in ids {
        match smoke_check_gadget(gid, samples, seed) {
            Ok(rep) => {
                if cli.json {
                    println!("{}", rep.to_json());
                } else {
                    println!("{}", rep.summary_line());
                }
                all_pass &= rep.pass();
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    if all_pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
