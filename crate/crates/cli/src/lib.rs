//! Command-line companion to the analysis core.
//!
//! This crate carries everything the core deliberately leaves out:
//! file formats, process exit codes, terminal and JSON rendering, and
//! the `midband` binary's argument grammar. It is a thin shell — all
//! numerics live in the core crate — and it is a library as well as a
//! binary so integration tests can drive the format parsers and the
//! report builder directly.
//!
//! * [`cli`] — argument grammar and command dispatch.
//! * [`failure`] — failure classification and exit codes.
//! * [`formats`] — campaign CSV, PDP, and PAS file formats.
//! * [`report`] — the consolidated fits-and-comparisons document.

pub mod cli;
pub mod failure;
pub mod formats;
pub mod report;
