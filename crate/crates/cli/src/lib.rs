//! Command line front end: emits the generators and runs the verification
//! suites of `semiinv-core`, reporting as text or versioned JSON.

pub mod config;
pub mod emit;
pub mod format;
pub mod modular;
pub mod report;
pub mod suites;
