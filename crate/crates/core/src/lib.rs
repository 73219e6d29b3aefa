pub mod check;
pub mod error;
pub mod kz;
pub mod linalg;
pub mod ops;
pub mod repr;
pub mod roots;
pub mod sample;

pub use error::{Error, Result};
