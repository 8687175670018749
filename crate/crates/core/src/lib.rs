pub mod abelian;
pub mod arith;
pub mod cli;
pub mod error;
pub mod genus;
pub mod kuroda;
pub mod pgroup;
pub mod quadforms;
pub mod suite;
pub mod tower;

pub use abelian::AbelianType;
pub use error::{Error, Result};
