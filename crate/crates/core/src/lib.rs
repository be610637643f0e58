pub mod appendix;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod exact;
pub mod extension;
pub mod graph;
pub mod kp;
pub mod line;
pub mod reduce;
pub mod rowing;

pub use error::{Error, Result};
