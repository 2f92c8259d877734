pub mod autos;
pub mod bounds;
pub mod error;
pub mod goursat;
pub mod harness;
pub mod invariant;
pub mod perm;

pub use error::{Error, Result};
