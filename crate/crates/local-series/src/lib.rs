//! Truncated valued-series arithmetic for the completions of k = F_q(T):
//! the place at infinity K = F_q((1/T)) and finite places k_v. Provides
//! 1-unit decomposition, p-adic-exponent powering, Newton polygons, and
//! Hensel extraction of base-rational zeros, with explicit precision
//! bookkeeping throughout (add: min absolute precision; mul: valuations
//! add, relative precisions min).

pub mod error;
pub mod hensel;
pub mod newton;
pub mod padic;
pub mod serial;
pub mod series;

pub use error::{Result, SeriesError};
pub use hensel::{hensel_zero_lift, normalized_residual_valuation, polygon_of};
pub use newton::{newton_polygon, NewtonPolygon, Ratio, Segment};
pub use padic::PadicInt;
pub use series::{
    one_unit_part, one_unit_part_wrt, series_ops, unit_pow_padic, Completion, PlaceKind,
    SeriesOp, ValSeries,
};
