//! Fixtures shared by the benchmarks.

use kanlab::codiscrete::{codiscrete_interval, minimal_interval};
use kanlab::FiniteCubicalSet;

/// Both built-in intervals at `bound`, labelled.
pub fn intervals(bound: usize) -> Vec<(&'static str, FiniteCubicalSet)> {
    vec![
        ("codiscrete", codiscrete_interval(bound).expect("bound within limits")),
        ("minimal", minimal_interval(bound).expect("bound within limits")),
    ]
}
