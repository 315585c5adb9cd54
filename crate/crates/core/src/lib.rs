pub mod asympt;
pub mod cli;
pub mod distributions;
pub mod error;
pub mod graph;
pub mod groupring;
pub mod known;
pub mod poly;
pub mod transfer;
pub mod verify;

pub use error::{Error, Result};
pub use groupring::Mode;
