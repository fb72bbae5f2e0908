//! Benchmark harness, report rendering and command-line interface for the
//! `zkbench-core` proof pipelines.

pub mod bench;
pub mod cli;
pub mod report;
