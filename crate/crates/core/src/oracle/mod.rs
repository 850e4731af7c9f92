//! Independent verification: hypothesis-respecting generators, seeded fuzzing,
//! exhaustive ratio scans, proof-step checks and worked-example reproduction.

mod examples;
mod fuzz;
mod generate;
mod proof_steps;
mod scan;

pub use examples::{
    harmonic_sequence, linear_sequence, reproduce_examples, tent_sequence, ExampleReport, ExampleValue, Relation,
    Source, EXAMPLE_SIZES,
};
pub use fuzz::{draw_input, fuzz, FuzzConfig, FuzzInput, FuzzReport, Violation};
pub use generate::{generate, generate_pair};
pub use proof_steps::{holder_mean_check, product_rule_check, young_check};
pub use scan::{ratio_scan, scan_size, ScanReport, DEFAULT_SCAN_BUDGET};
