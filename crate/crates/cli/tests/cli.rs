//! End-to-end tests of the binary: exit codes and JSON output schema.

use std::process::{Command, Output};

fn bklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bklab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn choosable_exit_codes() {
    let o = bklab(&["choosable", "@D8", "--f", "d1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("choosable"));

    let o = bklab(&["choosable", "@C5", "--f", "d0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not choosable"));
    assert!(stdout(&o).contains("bad assignment"));

    let o = bklab(&["choosable", "@E2n:3", "--f", "k=3"]);
    assert_eq!(o.status.code(), Some(0));

    // parse errors: bad graph, bad f-spec
    assert_eq!(bklab(&["choosable", "@nosuch"]).status.code(), Some(2));
    assert_eq!(bklab(&["choosable", "@C5", "--f", "wat"]).status.code(), Some(2));
    assert_eq!(bklab(&["choosable", "/no/such/file"]).status.code(), Some(2));
}

#[test]
fn choosable_budget_exit_code() {
    // D8 needs a few hundred thousand search nodes; a tiny budget must trip
    let o = bklab(&["choosable", "@D8", "--f", "d1", "--node-budget", "2000"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn choosable_json_schema() {
    let o = bklab(&["choosable", "@C5", "--f", "d0", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["choosable"], false);
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_streams_reports() {
    let o = bklab(&["verify", "fig1", "K3P4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.trim().lines().collect();
    assert_eq!(lines.len(), 2);
    for (line, id) in lines.iter().zip(["Fig1", "K3P4"]) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["id"], id);
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
        assert_eq!(v["exhaustive"], true);
    }
    assert_eq!(bklab(&["verify", "NoSuchCheck"]).status.code(), Some(2));
}

#[test]
fn recognize_profile() {
    let o = bklab(&["recognize", "@G_t:5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["claw_free"], true);
    assert_eq!(v["quasi_line"], false);
    assert_eq!(v["omega"], 7);
    assert_eq!(v["max_degree"], 9);
    assert_eq!(v["chi"], 8);

    let o = bklab(&["recognize", "@thickC5:1,1,1,1,1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["thickened_c5"].as_array().unwrap().len(), 5);
}

#[test]
fn chromatic_and_catalog() {
    let o = bklab(&["chromatic", "@fig1a", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["chi"], 6);

    let o = bklab(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("@fig1d"));

    let o = bklab(&["catalog", "C5"]);
    assert!(stdout(&o).starts_with('5'));
    assert_eq!(bklab(&["catalog", "nosuch"]).status.code(), Some(2));
}

#[test]
fn bk_check_outcomes() {
    let o = bklab(&["bk-check", "@G_t:5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["outcome"], "coloring");
    assert!(v["colors"].as_u64().unwrap() <= 8);

    let o = bklab(&["bk-check", "@K:10", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["outcome"], "clique");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 9);

    // below the degree threshold: falls back to counterexample verification
    let o = bklab(&["bk-check", "@fig1d", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);

    // small graphs that are not counterexamples report failure
    assert_eq!(bklab(&["bk-check", "@E2n:5"]).status.code(), Some(1));
    // a claw is a hypothesis error
    let path = std::env::temp_dir().join("bklab_cli_star.txt");
    std::fs::write(&path, "10 3\n0 1\n0 2\n0 3\n").unwrap();
    assert_eq!(bklab(&["bk-check", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn reduce_two_join_chains() {
    let o = bklab(&["reduce-2join", "@P:6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v.as_array().is_some());
    for chain in v.as_array().unwrap() {
        let last = chain.as_array().unwrap().last().unwrap();
        // chains terminate at something that is not canonical-and-reducible
        assert!(!(last["kind"] == "Canonical" && last["reducible"] == true));
    }
}

#[test]
fn smoke_gadgets() {
    let o = bklab(&["smoke", "all", "--samples", "25", "--seed", "9", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).trim().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["exhaustive"], false);
        assert_eq!(v["tested"], 25);
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    }
    assert_eq!(bklab(&["smoke", "nosuch"]).status.code(), Some(2));
}

#[test]
fn workers_flag_is_deterministic() {
    let a = bklab(&["choosable", "@N6", "--f", "d0", "--json", "--workers", "1"]);
    let b = bklab(&["choosable", "@N6", "--f", "d0", "--json", "--workers", "2"]);
    let va: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    let vb: serde_json::Value = serde_json::from_str(stdout(&b).trim()).unwrap();
    assert_eq!(va["choosable"], vb["choosable"]);
    assert_eq!(va["witness"], vb["witness"]);
}
