//! The Carlitz module and its tensor powers as twisted-polynomial matrix
//! operators: module actions, exponential and logarithm series from the
//! functional equation, Carlitz factorials and Bernoulli-Carlitz numbers,
//! and v-adic reduction of operator coefficients.

pub mod action;
pub mod error;
pub mod explog;
pub mod numbers;
pub mod scalars;
pub mod tau;
pub mod vreduce;

pub use action::{carlitz_action, t_image, tensor_power_action, tensor_power_action_generic, theta};
pub use error::{CarlitzError, Result};
pub use explog::{compositional_inverse, tensor_exp_log_frac, tensor_exp_log_generic};
pub use numbers::{bernoulli_carlitz, bracket, carlitz_factorial, d_sequence, l_sequence};
pub use scalars::PolyFrac;
pub use tau::{Matrix, TauMatSeries, TauScalar};
pub use vreduce::vadic_reduce_action;
