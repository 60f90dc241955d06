pub mod code;
pub mod construction;
pub mod error;
pub mod frames;
pub mod glue;
pub mod invariant;
pub mod known;
pub mod lattice;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
