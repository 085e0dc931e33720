pub mod checks;
pub mod commands;
pub mod ensembles;
pub mod error;
pub mod fuzz;
pub mod io;
pub mod reference_cases;
pub mod render;

pub use error::{CliError, Result};
