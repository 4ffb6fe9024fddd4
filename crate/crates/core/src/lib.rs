//! Exact rank tables, moment asymptotics and limit-law checks for unimodal
//! sequences and partitions.

pub mod analysis;
pub mod asymptotics;
pub mod bigfloat;
pub mod enumerate;
pub mod error;
pub mod series;
pub mod special;
pub mod store;
pub mod tolerances;

pub use error::{Error, Result};
