//! Command-line front end for the max-plus extremality checker: instance
//! file parsing, deterministic instance generation, quick scaling
//! benchmarks, and the subcommand implementations used by the `maxplus`
//! binary.

pub mod bench;
pub mod commands;
pub mod gen;
pub mod instance;
