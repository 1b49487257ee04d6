//! Dirac, Yang and higher-dimensional monopoles as the chiral halves of the
//! Levi-Civita spin connection on `R^{2n+1} \ {0}` with the cylindrical metric
//! `ds² = dr²/r² + dΩ²`, built from explicit gamma matrices and checked
//! numerically.
//!
//! Module map:
//!
//! * [`clifford`]: gamma matrices for `Cl(2n+1)`, chirality, half-spin blocks.
//! * [`geometry`]: polar/hyperspherical charts, frames, ellipsoids.
//! * [`forms`]: matrix-valued exterior algebra.
//! * [`gauge`]: sections, potentials, field strengths, transitions.
//! * [`chern`]: the charge `∫ (1/n!) Tr(−F/2π)ⁿ` by several methods.
//! * [`report`] and [`cli`]: structured check reports and the command front end.

pub mod chern;
pub mod cli;
pub mod clifford;
pub mod error;
pub mod forms;
pub mod gauge;
pub mod geometry;
pub mod quadrature;
pub mod report;

pub use chern::{charge_closed_form, charge_montecarlo, charge_quadrature, ChargeReport, Method};
pub use clifford::{build_rep, CMatrix, Chirality, CliffordRep};
pub use error::{Error, Result};
pub use forms::MatrixForm;
pub use gauge::{GaugeChart, Side};
pub use geometry::{ChartPoint, Surface};
