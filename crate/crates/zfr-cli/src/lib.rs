//! IO companion to `zfr-core`: JSON wire formats, the `zfr` command-line
//! interface, and the deterministic desk-scale self-test suite.

pub mod commands;
pub mod formats;
pub mod selftest;

pub use commands::{CmdOutput, EvalMode, PolyRoute};
pub use formats::{parse_hypergraph, parse_rational, serialize_hypergraph};
