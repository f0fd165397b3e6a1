pub mod arith;
pub mod catalog;
pub mod error;
pub mod identity;
pub mod series;
pub mod special;
pub mod sums;

pub use error::{Error, Result};
