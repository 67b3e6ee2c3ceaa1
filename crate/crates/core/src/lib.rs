pub mod aut;
pub mod cases;
pub mod census;
pub mod cycles;
pub mod error;
pub mod export;
pub mod families;
pub mod graph;
pub mod perm;
pub mod relations;
pub mod schema;
pub mod verify;

pub use error::{Error, Result};
