//! m-Tamari lattices, labelled interval enumeration, and exact series
//! computations around the generating function of labelled intervals.

pub mod algebra;
pub mod counting;
pub mod error;
pub mod paths;
pub mod poly;
pub mod report;
pub mod ring;
pub mod series;
pub mod tamari;
pub mod upoly;
pub mod urat;
pub mod verify;

pub use error::{Error, Result};
