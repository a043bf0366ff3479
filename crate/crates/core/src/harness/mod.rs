//! Corpus sweeps that check each statement exhaustively at small sizes, and their reports.

mod report;
mod sweeps;

pub use report::{
    four_ball_lower, parse_checks, Check, Corpus, Extremal, Failure, Record, Summary, SweepReport, Tally,
};
pub use sweeps::{
    bordering_check, conjecture1_scan, extremal_chain, failures_of, meets_three_quarters, meets_two_thirds,
    optimal_family_check, random_circle_bound, random_plumbing_form, random_seifert_lift, random_tree,
    spiral_circle_bound, spiral_reduction, sweep_forests, sweep_slalom, sweep_spiral, sweep_trees, DEFAULT_SEED,
    GLUE_VERTEX, RANDOM_BASES, SPIRAL_BAREISS_MAX, SPIRAL_REDUCTION_MAX,
};
