//! Recovering an MLDE from known solutions and a weighted generator set.

use num_integer::Integer;

use crate::exactnum::CyclotomicNumber;
use crate::qseries::PuiseuxSeries;

use super::equation::MLDE;
use super::linalg::{solve_augmented, LinearOutcome};
use super::serre::iterated_serre;
use super::MldeError;

/// Result of [`fit_mlde`].
#[derive(Debug, Clone, PartialEq)]
pub enum FitOutcome {
    /// The linear system had full column rank.
    Unique(MLDE),
    /// Consistent but rank-deficient; the witness pins free coefficients to 0.
    Underdetermined { mlde: MLDE, nullity: usize },
    /// No coefficient choice annihilates all solutions.
    Infeasible,
}

/// All multisets of generator indices whose weights sum to `target`.
fn weighted_multisets(weights: &[i64], target: i64) -> Vec<Vec<usize>> {
    fn rec(
        weights: &[i64],
        start: usize,
        rem: i64,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..weights.len() {
            if weights[i] <= rem {
                cur.push(i);
                rec(weights, i, rem - weights[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, target, &mut Vec::new(), &mut out);
    out
}

/// Searches for `g_1..g_m` such that every given solution satisfies
/// `∂^m f + Σ_p g_p ∂^{m−p} f = 0`, with each `g_p` a cyclotomic-rational
/// combination of weight-`2p` monomials in `gens` (series, declared weight);
/// weights above `maxweight` are not searched, forcing those `g_p` to zero.
pub fn fit_mlde(
    solutions: &[PuiseuxSeries],
    order: usize,
    weight: i64,
    gens: &[(PuiseuxSeries, i64)],
    maxweight: i64,
) -> Result<FitOutcome, MldeError> {
    if order == 0 {
        return Err(MldeError::BadInput("order must be positive".into()));
    }
    if solutions.is_empty() {
        return Err(MldeError::BadInput("need at least one solution".into()));
    }
    for (_, w) in gens {
        if *w <= 0 {
            return Err(MldeError::BadInput(
                "generator weights must be positive".into(),
            ));
        }
    }
    let weights: Vec<i64> = gens.iter().map(|(_, w)| *w).collect();

    // Column layout: for each p, one column per weight-2p monomial.
    let mut columns: Vec<(usize, PuiseuxSeries)> = Vec::new();
    for p in 1..=order {
        let target = 2 * p as i64;
        if target > maxweight {
            continue;
        }
        for multiset in weighted_multisets(&weights, target) {
            let mut mono = PuiseuxSeries::one(1);
            for i in multiset {
                mono = mono.mul(&gens[i].0);
            }
            columns.push((p, mono));
        }
    }

    let mut rows: Vec<Vec<CyclotomicNumber>> = Vec::new();
    for f in solutions {
        let derivs: Vec<PuiseuxSeries> = (0..=order)
            .map(|i| iterated_serre(f, weight, i as u32))
            .collect();
        let col_series: Vec<PuiseuxSeries> = columns
            .iter()
            .map(|(p, mono)| mono.mul(&derivs[order - p]))
            .collect();
        let rhs = &derivs[order];
        // Common lattice and sound window for this solution's equations.
        let lattice = col_series
            .iter()
            .chain(std::iter::once(rhs))
            .map(|s| s.denom())
            .fold(1u32, |a, b| a.lcm(&b));
        let col_series: Vec<PuiseuxSeries> =
            col_series.iter().map(|s| s.with_denom(lattice)).collect();
        let rhs = rhs.with_denom(lattice);
        let window = col_series
            .iter()
            .chain(std::iter::once(&rhs))
            .map(|s| s.trunc())
            .min()
            .unwrap();
        let mut exps: Vec<i64> = col_series
            .iter()
            .chain(std::iter::once(&rhs))
            .flat_map(|s| s.terms().map(|(e, _)| e).collect::<Vec<_>>())
            .filter(|e| *e < window)
            .collect();
        exps.sort_unstable();
        exps.dedup();
        for e in exps {
            let mut row: Vec<CyclotomicNumber> = col_series
                .iter()
                .map(|s| s.coefficient(e).expect("inside the window"))
                .collect();
            row.push(rhs.coefficient(e).expect("inside the window").neg());
            rows.push(row);
        }
    }

    let (particular, nullity) = match solve_augmented(rows, columns.len()) {
        LinearOutcome::Inconsistent => return Ok(FitOutcome::Infeasible),
        LinearOutcome::Solved {
            particular,
            nullity,
        } => (particular, nullity),
    };

    let mut gs = vec![PuiseuxSeries::zero(1); order];
    for ((p, mono), x) in columns.iter().zip(&particular) {
        if !x.is_zero() {
            gs[p - 1] = gs[p - 1].add(&mono.scale(x));
        }
    }
    let lattice = gs.iter().map(|g| g.denom()).fold(1u32, |a, b| a.lcm(&b));
    let mlde = MLDE::new(order, weight, gs, lattice)?;
    Ok(if nullity == 0 {
        FitOutcome::Unique(mlde)
    } else {
        FitOutcome::Underdetermined { mlde, nullity }
    })
}

#[cfg(test)]
mod tests {
    use super::super::equation::theta_mlde;
    use super::super::frobenius::frobenius_solve;
    use super::*;
    use crate::exactnum::Rational;
    use crate::special::{eisenstein, theta_series, ThetaKind};

    #[test]
    fn constant_solution_gives_trivial_equation() {
        let out = fit_mlde(&[PuiseuxSeries::one(1)], 1, 0, &[], 4).unwrap();
        match out {
            FitOutcome::Unique(mlde) => {
                assert_eq!(mlde.order(), 1);
                assert!(mlde.coeffs()[0].is_zero());
            }
            other => panic!("expected unique, got {other:?}"),
        }
    }

    #[test]
    fn theta_round_trip() {
        let mlde = theta_mlde(12).unwrap();
        let sols: Vec<PuiseuxSeries> = [Rational::zero(), Rational::new(1, 6)]
            .into_iter()
            .map(|a| frobenius_solve(&mlde, &a, 10).unwrap().series())
            .collect();
        let theta = theta_series(ThetaKind::Theta11, 12).unwrap();
        let out = fit_mlde(&sols, 2, 0, &[(theta.clone(), 4)], 4).unwrap();
        match out {
            FitOutcome::Unique(fitted) => {
                assert!(fitted.coeffs()[0].is_zero());
                assert!(
                    fitted.coeffs()[1].agrees_with(&theta.scale_rational(&Rational::new(-1, 96)))
                );
            }
            other => panic!("expected unique, got {other:?}"),
        }
    }

    #[test]
    fn generate_then_fit_with_e4() {
        let qord = 12;
        let e4 = eisenstein(4, qord).unwrap();
        let g2 = e4.scale_rational(&Rational::from_int(-120));
        let mlde = MLDE::new(2, 0, vec![PuiseuxSeries::zero(1), g2.clone()], 1).unwrap();
        // Indicial α² − α/6 − 1/6, roots 1/2 and −1/3.
        let sols: Vec<PuiseuxSeries> = [Rational::new(1, 2), Rational::new(-1, 3)]
            .into_iter()
            .map(|a| frobenius_solve(&mlde, &a, 9).unwrap().series())
            .collect();
        match fit_mlde(&sols, 2, 0, &[(e4.clone(), 4)], 4).unwrap() {
            FitOutcome::Unique(fitted) => {
                assert!(fitted.coeffs()[0].is_zero());
                assert!(fitted.coeffs()[1].agrees_with(&g2));
            }
            other => panic!("expected unique, got {other:?}"),
        }
        // A duplicated generator direction is flagged with its nullity.
        let doubled = e4.scale_rational(&Rational::from_int(2));
        match fit_mlde(&sols, 2, 0, &[(e4, 4), (doubled, 4)], 4).unwrap() {
            FitOutcome::Underdetermined {
                mlde: fitted,
                nullity,
            } => {
                assert_eq!(nullity, 1);
                assert!(fitted.coeffs()[1].agrees_with(&g2));
            }
            other => panic!("expected a family, got {other:?}"),
        }
    }

    #[test]
    fn impossible_solution_is_infeasible() {
        let f = PuiseuxSeries::from_terms(
            1,
            [(0, CyclotomicNumber::one()), (1, CyclotomicNumber::one())],
            8,
        );
        assert_eq!(
            fit_mlde(&[f], 1, 0, &[], 4).unwrap(),
            FitOutcome::Infeasible
        );
    }
}
