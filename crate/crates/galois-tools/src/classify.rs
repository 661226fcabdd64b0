//! Galois-group classification of monic quartics and cubics over F_q(T),
//! odd characteristic.
//!
//! Quartic table (f irreducible): resolvent cubic irreducible and
//! discriminant a non-square gives S4; resolvent irreducible and
//! discriminant square gives A4; resolvent split with square discriminant
//! gives V4; otherwise D4-or-C4 (not separated). Irreducibility is
//! certified by a mod-v witness when one exists and decided by the
//! complete A[x] factorization otherwise.

use crate::error::{GaloisError, Result};
use crate::factorx::factor_monic_squarefree;
use crate::modp::{irreducible_mod_prime, ResidueCtx};
use crate::square::disc_is_square;
use crate::xpoly::{cubic_discriminant, quartic_discriminant, resolvent_cubic, XPolyOverA};
use algebra_core::{DetRng, FqPoly, MonicIter, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticGroup {
    S4,
    A4,
    V4,
    D4OrC4,
    Reducible,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicGroup {
    S3,
    C3,
    Reducible,
}

/// Evidence gathered during classification, for reporting.
#[derive(Clone, Debug)]
pub struct QuarticReport {
    pub group: QuarticGroup,
    pub irreducibility_witness: Option<FqPoly>,
    pub resolvent: Option<XPolyOverA>,
    pub resolvent_irreducible: Option<bool>,
    pub resolvent_root_count: Option<usize>,
    pub disc_degree: Option<usize>,
    pub disc_square: Option<bool>,
}

/// Scan monic primes of degree <= bound for one modulo which f stays
/// irreducible of full degree.
pub fn irreducibility_witness(f: &XPolyOverA, degree_bound: usize) -> Result<Option<FqPoly>> {
    let field = f.field().clone();
    for d in 1..=degree_bound {
        for v in MonicIter::new(&field, Var::T, d) {
            if d > 1 && !algebra_core::irreducible_test(&v)? {
                continue;
            }
            match irreducible_mod_prime(f, &v) {
                Ok(true) => return Ok(Some(v)),
                Ok(false) => continue,
                Err(GaloisError::LeadingCoeffVanishes) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

/// Decide irreducibility over k: witness scan first, complete
/// factorization as the fallback.
fn decide_irreducible(
    f: &XPolyOverA,
    scan_bound: usize,
    rng: &mut DetRng,
) -> Result<(bool, Option<FqPoly>)> {
    if let Some(v) = irreducibility_witness(f, scan_bound)? {
        return Ok((true, Some(v)));
    }
    let factors = factor_monic_squarefree(f, rng)?;
    Ok((factors.len() == 1, None))
}

pub fn quartic_galois_group(
    f: &XPolyOverA,
    scan_bound: usize,
    rng: &mut DetRng,
) -> Result<QuarticReport> {
    if f.field().p() == 2 {
        return Ok(QuarticReport {
            group: QuarticGroup::Undecided,
            irreducibility_witness: None,
            resolvent: None,
            resolvent_irreducible: None,
            resolvent_root_count: None,
            disc_degree: None,
            disc_square: None,
        });
    }
    if f.degree() != Some(4) || !f.is_monic() {
        return Err(GaloisError::NotMonicQuartic);
    }
    let disc = quartic_discriminant(f)?;
    if disc.is_zero() {
        // Repeated factor (quartics are separable in odd characteristic
        // when irreducible), hence reducible.
        return Ok(QuarticReport {
            group: QuarticGroup::Reducible,
            irreducibility_witness: None,
            resolvent: None,
            resolvent_irreducible: None,
            resolvent_root_count: None,
            disc_degree: None,
            disc_square: None,
        });
    }
    let (irred, witness) = decide_irreducible(f, scan_bound, rng)?;
    if !irred {
        return Ok(QuarticReport {
            group: QuarticGroup::Reducible,
            irreducibility_witness: None,
            resolvent: None,
            resolvent_irreducible: None,
            resolvent_root_count: None,
            disc_degree: disc.degree(),
            disc_square: Some(disc_is_square(&disc)?),
        });
    }
    let resolvent = resolvent_cubic(f)?;
    let square = disc_is_square(&disc)?;
    let (res_irred, root_count) = cubic_split_type(&resolvent, scan_bound, rng)?;
    let group = if res_irred {
        if square {
            QuarticGroup::A4
        } else {
            QuarticGroup::S4
        }
    } else if root_count == 3 && square {
        QuarticGroup::V4
    } else {
        QuarticGroup::D4OrC4
    };
    Ok(QuarticReport {
        group,
        irreducibility_witness: witness,
        resolvent: Some(resolvent),
        resolvent_irreducible: Some(res_irred),
        resolvent_root_count: Some(root_count),
        disc_degree: disc.degree(),
        disc_square: Some(square),
    })
}

/// (irreducible?, number of roots in k counted with multiplicity via the
/// linear factors of the complete factorization).
fn cubic_split_type(
    f: &XPolyOverA,
    scan_bound: usize,
    rng: &mut DetRng,
) -> Result<(bool, usize)> {
    if let Some(_v) = irreducibility_witness(f, scan_bound)? {
        return Ok((true, 0));
    }
    let factors = factor_monic_squarefree(f, rng)?;
    if factors.len() == 1 {
        return Ok((true, 0));
    }
    let roots = factors.iter().filter(|g| g.degree() == Some(1)).count();
    Ok((false, roots))
}

pub fn cubic_galois_group(
    f: &XPolyOverA,
    scan_bound: usize,
    rng: &mut DetRng,
) -> Result<CubicGroup> {
    if f.field().p() == 2 {
        return Err(GaloisError::EvenCharacteristic);
    }
    if f.degree() != Some(3) || !f.is_monic() {
        return Err(GaloisError::NotMonicCubic);
    }
    let (irred, _) = decide_irreducible(f, scan_bound, rng)?;
    if !irred {
        return Ok(CubicGroup::Reducible);
    }
    let disc = cubic_discriminant(f)?;
    Ok(if disc_is_square(&disc)? {
        CubicGroup::C3
    } else {
        CubicGroup::S3
    })
}

/// True iff the residue reduction of the cubic modulo the given prime is
/// irreducible (the certification used for the quartic computation).
pub fn resolvent_irreducible_mod(f: &XPolyOverA, v: &FqPoly) -> Result<bool> {
    let _ = ResidueCtx::new(v)?;
    irreducible_mod_prime(f, v)
}
