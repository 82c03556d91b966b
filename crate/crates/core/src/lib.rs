//! Lattice paths over `U`, `F`, `D` and a component-preserving bijection
//! between two families of them.
//!
//! Class A holds the Grand Schröder paths all of whose flat steps lie on the
//! line `y = 2`; class B holds the Schröder paths with at most one peak per
//! component. The crate provides the bijection and its inverse
//! ([`bijection`]), exhaustive enumerators and exact counters for both
//! classes ([`families`]), a pattern-avoidance counter for the matching
//! permutation class ([`permutations`]), and OEIS b-file comparison
//! ([`oeis`]).

pub mod bijection;
pub mod cli;
pub mod families;
pub mod oeis;
pub mod path;
pub mod permutations;
pub mod render;
pub mod verify;

pub use bijection::{phi, phi_inverse, trace_stages, BijectionError, Direction, StageTrace};
pub use families::{
    count, count_class_a, count_class_b, enumerate, enumerate_class_a, enumerate_class_b,
    indec_census, Census,
};
pub use oeis::{compare_sequence, parse_bfile, ComparisonReport, SequenceTable};
pub use path::{
    classify, components, in_class_a, in_class_b, parse_path, peak_apexes, reflect, Path,
    PathClass, PathError, Step,
};
pub use permutations::{count_avoiders, Permutation};
pub use render::render_ascii;
pub use verify::{verify_size, verify_up_to, SizeReport};
