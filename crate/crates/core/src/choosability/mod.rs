//! List assignments, canonical enumeration up to color permutation, and the
//! exact f-choosability oracle.

mod assignment;
mod solve;

pub use assignment::{
    canonical_form, color_from_lists, for_each_coloring, FBase, FSpec, FSpecError, ListAssignment,
};
pub use solve::{
    enumerate_assignments, enumerate_assignments_collect, is_d0_choosable, is_d1_choosable,
    is_f_choosable, is_f_choosable_sequential, is_f_choosable_with, list_chromatic_number,
    minimal_bad_assignments,
    ChoosabilityError, SearchStats, SolveOptions, Verdict,
};
