pub mod decoration;
pub mod error;
pub mod graph;
pub mod perm;
pub mod realizability;
pub mod verify;

pub use error::{Error, Result};
