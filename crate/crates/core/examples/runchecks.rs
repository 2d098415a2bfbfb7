use bklab_core::verifier::{run_check, CheckConfig, CHECK_IDS};

fn main() {
    let cfg = CheckConfig::default();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ids: Vec<&str> = if args.is_empty() {
        CHECK_IDS.to_vec()
    } else {
        args.iter().map(|s| s.as_str()).collect()
    };
    for id in ids {
        let rep = run_check(id, &cfg).unwrap();
        println!("{}", rep.summary_line());
    }
}
