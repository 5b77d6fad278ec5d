//! Exact coefficients in ℚ(q) and windowed nested Laurent series.

pub mod laurent;
pub mod rational;
pub mod series;

pub use laurent::QPoly;
pub use rational::QRational;
pub use series::{depth, expand_rational, exponent_from_depth, var_names, Coefficient, ExponentBox, ExponentWindow, NestedSeries};
