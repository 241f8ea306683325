//! Simplicial complexes with complete (d-1)-skeleton, their facet-path
//! metric on (d-1)-simplices, and Moore-type degree/diameter bounds checked
//! against exhaustively computed distances.

pub mod bounds;
pub mod cli;
pub mod combinatorics;
pub mod complex;
pub mod document;
pub mod error;
pub mod generators;
pub mod metric;
pub mod report;

pub use combinatorics::{Rank, Simplex};
pub use complex::{Complex, DegreeProfile};
pub use error::{Error, Result};
