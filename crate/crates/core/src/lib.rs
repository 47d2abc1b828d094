//! Lower bounds on the reliability of a quantum discrete memoryless channel.
//!
//! A QDMC restricted to stabilizer codes behaves like a classical additive
//! channel on X = (F_d)², described by a single distribution W. This crate
//! computes the random-coding and expurgation exponents of that channel in
//! their several equivalent forms, the closed-form exponents of the
//! depolarizing channel, and exhaustive finite-n checks on small additive
//! codes.
//!
//! ```
//! use qdmc_core::channel::ChannelDist;
//! use qdmc_core::exponent::best_exponent;
//!
//! let w = ChannelDist::depolarizing(2, 0.0005).unwrap();
//! let e = best_exponent(0.0, &w);
//! assert!(e.value > e.random_coding.value);
//! ```

pub mod channel;
pub mod code;
pub mod depolarizing;
mod error;
pub mod exponent;

pub use error::{Error, Result};
