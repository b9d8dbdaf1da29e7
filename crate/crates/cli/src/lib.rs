//! Library surface of the command-line front end: the workspace format
//! parser and emitter, report types, DOT export, and the theorem suites.
//! The `fcat` binary is a thin dispatcher over these.

pub mod dot;
pub mod emit;
pub mod parser;
pub mod report;
pub mod suites;
pub mod workspace;
