//! Deterministic procedural generators for ARC-style grid tasks, with
//! reference verifiers, golden-set validation, dataset emission and an
//! evaluation harness.

pub mod cli;
pub mod error;
pub mod framework;
pub mod geometry;
pub mod grid;
pub mod harness;
pub mod rng;
pub mod tasks;

pub use error::{Error, Result};
pub use framework::{
    apply_variation, generate_task_set, lookup, registry, GenParams, ParamSpec, ParamValue, Registry,
    TaskGenerator, Variation, VariationSpec, RETRY_BUDGET,
};
pub use geometry::overlaps;
pub use grid::{grids, named_color, parse_text, render_text, Color, Example, Grid, TaskSet};
pub use harness::{
    emit_dataset, evaluate, format_report, golden_check, load_task_file, save_task_file, EvalReport,
    GoldenOutcome, Manifest, Program, TaskTally,
};
pub use rng::{new_stream, RngStream};
