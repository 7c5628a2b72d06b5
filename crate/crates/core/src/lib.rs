pub mod equation;
pub mod cli;
pub mod dsl;
pub mod error;
pub mod exppoly;
pub mod json;
pub mod linalg;
pub mod numeric;
pub mod reduction;
pub mod separation;
pub mod special;

pub use error::{Error, Result};
