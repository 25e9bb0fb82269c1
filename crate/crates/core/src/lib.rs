//! Knot diagrams in PD notation, Menasco loop search, and non-triviality
//! certificates.

pub mod cli;
pub mod diagram;
pub mod menasco;
pub mod oracle;
pub mod pdcode;
pub mod reduce;
pub mod report;

pub use pdcode::{parse_gauss, parse_pd, PlanarDiagram};
