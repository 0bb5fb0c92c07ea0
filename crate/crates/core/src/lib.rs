//! Verifiable inference for a compact fixed-point CNN classifier.
//!
//! The pipeline: quantize a frame, run an integer-only forward pass
//! ([`fxtensor`]), compile the network into a layered arithmetic circuit over
//! a 64-bit prime field ([`circuit`]), prove the committed verdict with a
//! transparent sumcheck/GKR argument plus a hash-based multilinear commitment
//! ([`proof`]), and ship only the statement and proof over a byte-stream
//! protocol ([`protocol`]). No raw pixels ever cross the wire.

pub mod circuit;
pub mod field;
pub mod fxtensor;
pub mod model;
pub mod proof;
pub mod protocol;
pub mod selfcheck;
