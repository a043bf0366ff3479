pub mod algebra;
pub mod coxeter;
pub mod error;
pub mod forms;
pub mod harness;
pub mod omega;
pub mod trees;

pub use error::{Error, Result};
