pub mod arith;
pub mod cli;
pub mod error;
pub mod factorizations;
pub mod families;
pub mod matrix;
pub mod relations;
pub mod serial;
pub mod sweep;
pub mod words;

pub use error::{Error, Result};
