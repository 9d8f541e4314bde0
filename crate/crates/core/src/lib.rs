pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod combinat;
pub mod deformation;
pub mod error;
pub mod exactla;
pub mod fixtures;
pub mod format;
pub mod homotopy2;
mod report;

pub use error::{Error, Result};
pub use exactla::{RatMatrix, Rational};
pub use report::{CheckReport, Failure};
