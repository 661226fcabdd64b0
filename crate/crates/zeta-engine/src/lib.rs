//! Characteristic-p zeta/L computations over A = F_q[T]: power sums over
//! monic polynomials, the special polynomials z(x, -j) and their trivial
//! zeros, two-variable series rows, values at positive integers, the
//! v-adic interpolation polynomials and Wan's degree-one identity, the two
//! rank-2 CM examples, zero-field analysis via Newton polygons, and the
//! uniformizer-covariance check.

pub mod cm;
pub mod error;
pub mod powersum;
pub mod row;
pub mod special;
pub mod values;
pub mod wan;
pub mod zerofield;

pub use cm::{cm_hecke_coeffs, CmClass, CmExample, CmReport};
pub use error::{Result, ZetaError};
pub use powersum::{digit_sum, power_sum};
pub use row::{pi_covariance_check, zeta_series_row, PiCovarianceReport, ZetaSeriesRow};
pub use special::{remove_trivial_zero, vadic_zeta_poly, zeta_special_poly, ZetaPoly};
pub use values::zeta_at_positive;
pub use wan::{wan_identity_check, WanReport};
pub use zerofield::{
    analyze_zeta_poly, zero_field_analysis, zero_valuations, zeta_poly_series, ZeroFieldReport,
    ZeroRecord,
};
