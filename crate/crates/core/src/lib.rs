pub mod ab_normal;
pub mod alpha_norm;
pub mod bounds;
pub mod error;
pub mod golden;
pub mod linalg;
pub mod radius;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, C64};
