#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod bits;
pub mod error;
pub mod graph_models;
pub mod matching;
pub mod oracles;
mod math;
pub mod rng;

pub use error::{Error, Result};
