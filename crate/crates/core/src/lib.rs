pub mod bdinv;
pub mod cover;
pub mod cyclotomic;
pub mod error;
pub mod hecke;
pub mod localfield;
pub mod par;
pub mod reps;
pub mod verify;
pub mod zlattice;

pub use error::{Error, Result};
