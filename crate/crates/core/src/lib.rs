pub mod cli;
pub mod convergence;
pub mod error;
pub mod graph;
pub mod halfpoly;
pub mod limits;
pub mod roots;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
