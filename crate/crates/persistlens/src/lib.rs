//! persistlens — from raw red-team operator notes to persistence-behavior statistics.
//!
//! The crate is organized as a pipeline. Each stage is usable on its own and
//! has a runnable example under `examples/`:
//!
//! | stage | module | example |
//! |-------|-------------|------------------------|
//! | technique catalog + label normalization | [`taxonomy`] | `catalog_lookup` |
//! | note / score-sheet parsing | [`ingest`] | `parse_opnotes` |
//! | two-stage model annotation | [`annotate`] | `annotate_offline` |
//! | per-participant behavior metrics | [`metrics`] | `behavior_metrics` |
//! | correlations, OLS, special functions | [`stats`] | `correlation_tables`, `regression_fit` |
//! | tables + SVG figures | [`report`] | `render_figures` |
//! | synthetic corpora with known effects | [`synth`] | `synth_corpus` |
//! | stage orchestration | [`pipeline`] | `end_to_end` |
//!
//! The `persistlens` binary is a thin CLI over [`pipeline`]; see `README.md`
//! for the subcommands and the on-disk layout of a run directory.
//!
//! Everything in the pipeline is deterministic for a fixed input, seed, and
//! worker count: map-like state lives in `BTreeMap`s, files are written
//! atomically, and SVG output carries no timestamps or generated ids.

pub mod annotate;
pub mod config;
pub mod fsutil;
pub mod ingest;
pub mod metrics;
pub mod pipeline;
pub mod report;
pub mod stats;
pub mod synth;
pub mod taxonomy;
