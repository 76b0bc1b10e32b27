//! Exact Gauss–Jordan elimination over the cyclotomic rationals.

use crate::exactnum::CyclotomicNumber;

pub(super) enum LinearOutcome {
    /// A solution with free variables pinned to zero.
    Solved {
        particular: Vec<CyclotomicNumber>,
        nullity: usize,
    },
    Inconsistent,
}

/// Solves the augmented system `[A | b]` (each row has `ncols + 1` entries).
pub(super) fn solve_augmented(mut rows: Vec<Vec<CyclotomicNumber>>, ncols: usize) -> LinearOutcome {
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        for v in rows[rank].iter_mut() {
            *v = v.mul(&inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=ncols {
                    let delta = rows[rank][c].mul(&factor);
                    rows[r][c] = rows[r][c].sub(&delta);
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    // Rows that never produced a pivot have an all-zero coefficient part.
    if rows.iter().skip(rank).any(|r| !r[ncols].is_zero()) {
        return LinearOutcome::Inconsistent;
    }
    let particular = pivot_of_col
        .iter()
        .map(|p| match p {
            Some(r) => rows[*r][ncols].clone(),
            None => CyclotomicNumber::zero(),
        })
        .collect();
    LinearOutcome::Solved {
        particular,
        nullity: ncols - rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn row(vals: &[i64]) -> Vec<CyclotomicNumber> {
        vals.iter()
            .map(|v| CyclotomicNumber::from_int(*v))
            .collect()
    }

    #[test]
    fn unique_system() {
        // x + y = 3, x − y = 1 → (2, 1).
        let rows = vec![row(&[1, 1, 3]), row(&[1, -1, 1])];
        match solve_augmented(rows, 2) {
            LinearOutcome::Solved {
                particular,
                nullity,
            } => {
                assert_eq!(nullity, 0);
                assert_eq!(particular[0].as_rational().unwrap(), Rational::from_int(2));
                assert_eq!(particular[1].as_rational().unwrap(), Rational::one());
            }
            _ => panic!("expected a solution"),
        }
    }

    #[test]
    fn underdetermined_and_inconsistent() {
        let rows = vec![row(&[1, 2, 4]), row(&[2, 4, 8])];
        match solve_augmented(rows, 2) {
            LinearOutcome::Solved {
                particular,
                nullity,
            } => {
                assert_eq!(nullity, 1);
                assert_eq!(particular[0].as_rational().unwrap(), Rational::from_int(4));
                assert!(particular[1].is_zero());
            }
            _ => panic!("expected a family"),
        }
        let rows = vec![row(&[1, 2, 4]), row(&[2, 4, 9])];
        assert!(matches!(
            solve_augmented(rows, 2),
            LinearOutcome::Inconsistent
        ));
    }

    #[test]
    fn cyclotomic_pivots() {
        // ζ₄·x = 1 → x = −ζ₄.
        let z4 = CyclotomicNumber::root_of_unity(4, 1).unwrap();
        let rows = vec![vec![z4.clone(), CyclotomicNumber::one()]];
        match solve_augmented(rows, 1) {
            LinearOutcome::Solved { particular, .. } => {
                assert_eq!(particular[0], z4.neg());
            }
            _ => panic!("expected a solution"),
        }
    }
}
