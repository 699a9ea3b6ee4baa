//! Exact arithmetic for identifying the center of the geometric
//! endomorphism algebra of an abelian variety from Frobenius data.

pub mod center;
pub mod error;
pub mod frobdata;
mod linalg;
pub mod normic;
pub mod numberfield;
pub mod pointcount;
pub mod report;
pub mod polyq;

pub use error::{Error, Result};
