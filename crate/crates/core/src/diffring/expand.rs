//! Expansion of ring elements into concrete `z`/`q` series.
//!
//! Expansion fixes one twist for the whole element: kernel symbols use it
//! directly, and every `GHat` key must match it.  Product windows are kept
//! sound by widening the inner `z`-order by the worst-case pole order before
//! truncating back.

use std::collections::BTreeMap;

use crate::qseries::{PuiseuxSeries, ZLaurentSeries};
use crate::special::{
    eisenstein, twisted_eisenstein, twisted_weierstrass_z, weierstrass_wp, TwistParameters,
};

use super::element::{DiffRingElement, Gen, TwistKey};
use super::DiffringError;

fn gen_series(
    g: &Gen,
    key: &TwistKey,
    tw: &TwistParameters,
    zord: i64,
    qord: i64,
) -> Result<ZLaurentSeries, DiffringError> {
    if let Some((i, j)) = g.pair() {
        if (i, j) != (1, 2) {
            return Err(DiffringError::BadGenerator(format!(
                "expansion supports the single point pair (1,2); {g} uses ({i},{j})"
            )));
        }
    }
    Ok(match g {
        Gen::EHat(w) => ZLaurentSeries::constant(eisenstein(*w, qord)?),
        Gen::GHat(k, gkey) => {
            if gkey != key {
                return Err(DiffringError::TwistMismatch {
                    expected: key.to_string(),
                    found: gkey.to_string(),
                });
            }
            ZLaurentSeries::constant(twisted_eisenstein(*k, tw, qord)?)
        }
        Gen::P1(..) => twisted_weierstrass_z(1, tw, zord, qord)?,
        Gen::P2(..) => twisted_weierstrass_z(2, tw, zord, qord)?,
        Gen::WP1(..) => weierstrass_wp(1, zord, qord)?,
        Gen::WP2(..) => weierstrass_wp(2, zord, qord)?,
        Gen::WP3(..) => weierstrass_wp(3, zord, qord)?,
    })
}

/// Expands an element at the given twist into `Σ_k f_k(q) ẑ^k`, truncated
/// before `ẑ^zord` with each coefficient known below `q^qord`.
pub fn expand(
    elem: &DiffRingElement,
    key: &TwistKey,
    zord: i64,
    qord: i64,
) -> Result<ZLaurentSeries, DiffringError> {
    let tw = key.to_parameters()?;
    // Poles eat into the z-window of a product, so expand generators wider
    // and clip at the end.
    let inner_zord = zord + elem.pole_budget();
    let mut cache: BTreeMap<Gen, ZLaurentSeries> = BTreeMap::new();
    let mut out = ZLaurentSeries::zero();
    for (mono, coeff) in elem.terms() {
        let mut prod = ZLaurentSeries::constant(PuiseuxSeries::constant(1, coeff.clone()));
        for (g, e) in mono {
            if !cache.contains_key(g) {
                let s = gen_series(g, key, &tw, inner_zord, qord)?;
                cache.insert(*g, s);
            }
            prod = prod.mul(&cache[g].pow(*e));
        }
        out = out.add(&prod);
    }
    Ok(out.truncate_z(zord))
}

/// Expands a `z`-independent element into its `q`-series.
pub fn expand_q(
    elem: &DiffRingElement,
    key: &TwistKey,
    qord: i64,
) -> Result<PuiseuxSeries, DiffringError> {
    if !elem.is_z_independent() {
        return Err(DiffringError::ZDependent(elem.to_string()));
    }
    let tw = key.to_parameters()?;
    let mut cache: BTreeMap<Gen, PuiseuxSeries> = BTreeMap::new();
    let mut out = PuiseuxSeries::zero(1);
    for (mono, coeff) in elem.terms() {
        let mut prod = PuiseuxSeries::constant(1, coeff.clone());
        for (g, e) in mono {
            if !cache.contains_key(g) {
                let s = match g {
                    Gen::EHat(w) => eisenstein(*w, qord)?,
                    Gen::GHat(k, gkey) => {
                        if gkey != key {
                            return Err(DiffringError::TwistMismatch {
                                expected: key.to_string(),
                                found: gkey.to_string(),
                            });
                        }
                        twisted_eisenstein(*k, &tw, qord)?
                    }
                    _ => unreachable!("z-independence was checked"),
                };
                cache.insert(*g, s);
            }
            prod = prod.mul(&cache[g].pow(*e));
        }
        out = out.add(&prod);
    }
    Ok(out)
}
