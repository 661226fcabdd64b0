//! Galois analysis over k = F_q(T) of low-degree polynomials in x with
//! A = F_q[T] coefficients: Eisenstein's criterion and witness scans,
//! exact discriminant square testing, resolvent cubics, reduction-mod-prime
//! irreducibility certificates, complete factorization of monic quartics,
//! and the quartic/cubic Galois-group tables.

pub mod classify;
pub mod eisenstein;
pub mod error;
pub mod factorx;
pub mod modp;
pub mod square;
pub mod xpoly;

pub use classify::{
    cubic_galois_group, irreducibility_witness, quartic_galois_group, resolvent_irreducible_mod,
    CubicGroup, QuarticGroup, QuarticReport,
};
pub use eisenstein::{eisenstein_check, eisenstein_scan, EisensteinOutcome};
pub use error::{GaloisError, Result};
pub use factorx::factor_monic_squarefree;
pub use modp::{irreducible_mod_prime, ResidueCtx};
pub use square::disc_is_square;
pub use xpoly::{
    cubic_discriminant, depress_quartic, quartic_discriminant, resolvent_cubic, XPolyOverA,
};
