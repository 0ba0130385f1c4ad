pub mod bench;
pub mod circuits;
pub mod cli;
pub mod error;
pub mod hamiltonians;
pub mod noise;
pub mod rng;
pub mod statevec;

pub use error::{Error, Result};
