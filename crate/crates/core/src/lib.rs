pub mod census;
pub mod classify;
pub mod cli;
pub mod dessin;
pub mod emit;
pub mod error;
pub mod group;
pub mod numth;
pub mod ops;
pub mod verify;

pub use error::{Error, Result};
