#![no_std]
//! Semi-invariants of triples of 3x3 matrices, computed exactly.
//!
//! The crate builds the twelve generators `f_{i,j,k}`, `h`, `q` of the ring
//! of `SL3 x SL3` invariants of matrix triples as explicit polynomials in the
//! 27 matrix entries, derives the highest weight forms `H`, `Q` and the
//! Aronhold-type invariants, and checks the defining relations among them
//! either by exact expansion or by evaluation at random points modulo
//! large primes.
//!
//! Everything here is `no_std` + `alloc`; IO, parallel trial scheduling and
//! the command line live in the `semiinv` crate.

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod conjinv;
pub mod generators;
pub mod hwv;
pub mod identity;
pub mod poly;
pub mod relations;
pub mod sample;
