pub mod cli;
pub mod error;
pub mod gap;
pub mod harness;
pub mod order;
pub mod relations;
pub mod skew;
pub mod stype;
pub mod support;
pub mod term;

pub use error::{Error, Result};
