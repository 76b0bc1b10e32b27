//! The Serre derivation `∂_k f = q df/dq + k·Ê₂·f` and its weight ladder.

use crate::exactnum::Rational;
use crate::qseries::PuiseuxSeries;
use crate::special::eisenstein;

/// Truncation used for the internal `Ê₂` factor when the input series is
/// exact (a Puiseux polynomial), for which no finite window is implied.
const EXACT_INPUT_QORDER: i64 = 40;

fn e2_order_for(f: &PuiseuxSeries) -> i64 {
    if f.is_exact() {
        return EXACT_INPUT_QORDER;
    }
    let d = f.denom() as i64;
    let min = f.support_min().unwrap_or(0);
    ((f.trunc() - min) + d - 1).div_euclid(d).max(1) + 1
}

/// The weight-`k` Serre derivation.  The result carries the input's
/// truncation; exact inputs are truncated at a fixed default order since
/// `Ê₂` has no exact closed form.
pub fn serre_derive(f: &PuiseuxSeries, k: i64) -> PuiseuxSeries {
    let df = f.qdq();
    if k == 0 || f.is_zero() {
        return df;
    }
    let e2 = eisenstein(2, e2_order_for(f)).expect("weight 2 is valid");
    df.add(&e2.mul(f).scale_rational(&Rational::from_int(k)))
}

/// The `i`-fold ladder `∂^i f = ∂_{k+2i−2}(∂^{i−1} f)` starting at base
/// weight `k`; `i = 0` is the identity.
pub fn iterated_serre(f: &PuiseuxSeries, k: i64, i: u32) -> PuiseuxSeries {
    let mut out = f.clone();
    let mut w = k;
    for _ in 0..i {
        out = serre_derive(&out, w);
        w += 2;
    }
    out
}
