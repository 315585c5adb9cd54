//! Partial distributions of marked graphs and the closed forms built on them:
//! bar-rings, ladders, ears, cacti, and the ten-type partial Euler-genus vectors.

pub mod partial;

pub use partial::{
    bar_ring_from_partials, cactus_euler, cactus_euler_all_twists, closed_ear_gadget, ear_formula_euler,
    half_ladder_closed_form, half_ladder_partials, is_cactus, ladder_partials, open_ear_gadget, partial_pair_oracle,
    tree_like_compose, PartialPair,
};
pub mod ped;

pub use ped::{
    derive_transition_tables, derived_tables, doubled_cycle_via_ped, doubled_edge_vector, ped_close, ped_compose,
    ped_vector_oracle, Marked, PedType, PedVector, Transition, TransitionTables,
};
pub mod tables;
pub use tables::{charpoly_at_one, diff_against_printed, printed_rules, root_multiplicity, scaled_primitivity, TableDiff};
pub mod recurrences;
pub use recurrences::{cn2_computed, cn2_recurrences, Cn2Recurrence};
