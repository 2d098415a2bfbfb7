//! The check registry: finite-universe sweeps for every in-scope claim,
//! structured JSON reports, counterexample verification, and randomized
//! smoke gadgets.

mod bk;
mod checks;
mod families;
mod report;
mod smoke;
pub mod universe;

pub use bk::{
    bk_check, extract_critical, verify_counterexample, BkError, BkOutcome, MAX_COUNTEREXAMPLE_N,
};
pub use checks::{run_all, run_check, CheckConfig, CheckError, CHECK_IDS};
pub use report::{Failure, Report};
pub use smoke::{smoke_check_gadget, SMOKE_GADGETS};
pub use universe::{enumerate_graphs, enumerate_trees, graphs_up_to};
