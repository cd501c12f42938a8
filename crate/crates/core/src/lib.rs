pub mod axioms;
pub mod bridge;
pub mod error;
pub mod examples;
pub mod fuzz;
pub mod homology;
pub mod ideals;
pub mod ktheory;
pub mod lincat;
pub mod linalg;
pub mod oracle;

pub use error::{Error, Result};
