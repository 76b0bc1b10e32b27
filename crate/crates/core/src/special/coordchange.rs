//! Coordinate-change data for the cylinder map `y ↦ (e^{2πiy} − 1)/(2πi)`.
//!
//! The coefficients `A_j` are fixed order-by-order by matching
//! `exp(−Σ_j A_j y^{j+1} ∂_y)·y` against the Taylor expansion of the cylinder
//! map; each `A_j` is an exact Gaussian-rational multiple of `π^j`.

use crate::exactnum::{factorial, GaussianRational, PiPolynomial, Rational};

/// A polynomial in `y` with [`PiPolynomial`] coefficients, indexed by degree.
type YPoly = Vec<PiPolynomial>;

/// Applies `D = −Σ_j A_j y^{j+1} ∂_y` once, keeping degrees `< deg_bound`.
fn apply_d(p: &YPoly, a: &[PiPolynomial], deg_bound: usize) -> YPoly {
    let mut out = vec![PiPolynomial::zero(); deg_bound];
    for (k, pk) in p.iter().enumerate() {
        if pk.is_zero() || k == 0 {
            continue;
        }
        for (idx, aj) in a.iter().enumerate() {
            let j = idx + 1;
            if k + j >= deg_bound {
                break;
            }
            // y^{j+1}∂_y maps y^k to k·y^{k+j}.
            let c = aj.scale_rational(&Rational::from_int(-(k as i64))).mul(pk);
            out[k + j] = out[k + j].add(&c);
        }
    }
    out
}

/// Expands `exp(−Σ_j A_j y^{j+1} ∂_y)·y` through degree `deg_bound − 1`.
fn exp_on_y(a: &[PiPolynomial], deg_bound: usize) -> YPoly {
    let mut result = vec![PiPolynomial::zero(); deg_bound];
    if deg_bound < 2 {
        return result;
    }
    result[1] = PiPolynomial::one();
    let mut term = result.clone();
    for n in 1..deg_bound {
        term = apply_d(&term, a, deg_bound);
        let inv_n = Rational::new(1, n as i64);
        let mut all_zero = true;
        for k in 0..deg_bound {
            term[k] = term[k].scale_rational(&inv_n);
            if !term[k].is_zero() {
                all_zero = false;
                result[k] = result[k].add(&term[k]);
            }
        }
        if all_zero {
            break;
        }
    }
    result
}

/// Taylor coefficient of `(e^{2πiy} − 1)/(2πi)` at `y^k`: `(2πi)^{k−1}/k!`.
fn cylinder_taylor(k: usize) -> PiPolynomial {
    let mut two_i_pow = GaussianRational::one();
    let two_i = GaussianRational::new(Rational::zero(), Rational::from_int(2));
    for _ in 1..k {
        two_i_pow = &two_i_pow * &two_i;
    }
    let c = two_i_pow.scale(&factorial(k as u64).inverse().expect("k! nonzero"));
    PiPolynomial::term(k as u32 - 1, c)
}

/// The unique `A₁ … A_J` with
/// `(e^{2πiy} − 1)/(2πi) = exp(−Σ_{j≤J} A_j y^{j+1} ∂_y)·y + O(y^{J+2})`.
///
/// The first three values are `A₁ = −iπ`, `A₂ = −π²/3`, `A₃ = iπ³/6`.
pub fn coord_change_coeffs(jmax: usize) -> Vec<PiPolynomial> {
    let mut a: Vec<PiPolynomial> = Vec::with_capacity(jmax);
    for j in 1..=jmax {
        // At order y^{j+1} the only new contribution of A_j is the linear one,
        // so A_j = [y^{j+1}]exp(D_{<j})y − [y^{j+1}]cylinder.
        let e = exp_on_y(&a, j + 2);
        a.push(e[j + 1].sub(&cylinder_taylor(j + 1)));
    }
    a
}

/// The structure constants of `[L_m, L_n] = (m−n)L_{m+n} + ((m³−m)/12)δ_{m+n,0}·c`:
/// returns the pair (coefficient of `L_{m+n}`, coefficient of the central `c`).
pub fn virasoro_commutator(m: i64, n: i64) -> (Rational, Rational) {
    let linear = Rational::from_int(m - n);
    let central = if m + n == 0 {
        Rational::new(m * m * m - m, 12)
    } else {
        Rational::zero()
    };
    (linear, central)
}

/// The image of `ω = L₋₂𝟏` under the geometrically modified operator at
/// nome one, expanded over `span{𝟏, ω}`.
#[derive(Debug, Clone, PartialEq)]
pub struct UOneOmega {
    /// Coefficient of `ω` in the final image: `(2πi)² = −4π²`.
    pub omega_coeff: PiPolynomial,
    /// Coefficient of `𝟏` in the final image: `π²c/6 = −(2πi)²c/24`.
    pub vacuum_coeff: PiPolynomial,
    /// Coefficient of `𝟏` after the `exp` factor alone, before the
    /// `(2πi)^{L₀}` scaling: also `π²c/6`.
    pub intermediate_vacuum: PiPolynomial,
}

/// Applies `(2πi)^{L₀} exp(−Σ_j A_j L_j)` to `ω = L₋₂𝟏` at central charge `c`.
///
/// Only `L₂` reaches the vacuum from `ω`; the commutator gives
/// `L₂ω = (c/2)𝟏`, so the `exp` factor sends `ω ↦ ω − A₂(c/2)𝟏` and the
/// grading operator then scales `ω` by `(2πi)²`.
pub fn u_one_on_omega(c: &Rational) -> UOneOmega {
    let a = coord_change_coeffs(2);
    let (_, central) = virasoro_commutator(2, -2);
    let l2_omega_vacuum = &central * c; // c/2, the coefficient of 𝟏 in L₂ω
    let intermediate = a[1].scale_rational(&l2_omega_vacuum).neg();
    let omega_coeff = PiPolynomial::term(
        2,
        GaussianRational::new(Rational::from_int(-4), Rational::zero()),
    );
    UOneOmega {
        omega_coeff,
        vacuum_coeff: intermediate.clone(),
        intermediate_vacuum: intermediate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    #[test]
    fn first_three_coefficients() {
        let a = coord_change_coeffs(3);
        assert_eq!(
            a[0],
            PiPolynomial::term(1, gauss(Rational::zero(), Rational::from_int(-1)))
        );
        assert_eq!(
            a[1],
            PiPolynomial::term(2, gauss(Rational::new(-1, 3), Rational::zero()))
        );
        assert_eq!(
            a[2],
            PiPolynomial::term(3, gauss(Rational::zero(), Rational::new(1, 6)))
        );
    }

    #[test]
    fn matching_holds_through_degree_eight() {
        let jmax = 7usize;
        let a = coord_change_coeffs(jmax);
        let e = exp_on_y(&a, jmax + 2);
        for k in 2..=jmax + 1 {
            assert_eq!(e[k], cylinder_taylor(k), "degree {k}");
        }
        // Degree 1 matches by construction, degree 0 is empty.
        assert_eq!(e[1], PiPolynomial::one());
        assert!(e[0].is_zero());
    }

    #[test]
    fn each_coefficient_is_homogeneous_of_weight_j() {
        let a = coord_change_coeffs(6);
        for (idx, aj) in a.iter().enumerate() {
            assert_eq!(aj.weight(), Some(idx as u32 + 1), "A_{}", idx + 1);
        }
    }

    #[test]
    fn commutator_structure_constants() {
        assert_eq!(
            virasoro_commutator(2, -2),
            (Rational::from_int(4), Rational::new(1, 2))
        );
        assert_eq!(
            virasoro_commutator(3, -3),
            (Rational::from_int(6), Rational::from_int(2))
        );
        assert_eq!(
            virasoro_commutator(2, 1),
            (Rational::from_int(1), Rational::zero())
        );
        assert_eq!(
            virasoro_commutator(1, 1),
            (Rational::zero(), Rational::zero())
        );
    }

    #[test]
    fn omega_image() {
        let out = u_one_on_omega(&Rational::from_int(1));
        assert_eq!(
            out.omega_coeff,
            PiPolynomial::term(2, gauss(Rational::from_int(-4), Rational::zero()))
        );
        // π²c/6 at c = 1.
        assert_eq!(
            out.vacuum_coeff,
            PiPolynomial::term(2, gauss(Rational::new(1, 6), Rational::zero()))
        );
        assert_eq!(out.intermediate_vacuum, out.vacuum_coeff);
        // −(2πi)²/24 agrees with π²/6.
        let alt = out.omega_coeff.scale_rational(&Rational::new(-1, 24));
        assert_eq!(alt, out.vacuum_coeff);

        let trivial = u_one_on_omega(&Rational::zero());
        assert!(trivial.vacuum_coeff.is_zero());
    }
}
