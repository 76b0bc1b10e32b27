//! Bernoulli numbers and polynomials.
//!
//! Convention: `B₁ = −1/2`, i.e. the sequence defined by `B₀ = 1` and
//! `Σ_{k=0}^{n} C(n+1, k) B_k = 0` for `n ≥ 1`.  The constant terms of the
//! (twisted) Eisenstein series are `−B_n(λ)/n!` in this convention.

use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact factorial `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_bigint(acc)
}

/// The Bernoulli numbers `B₀ … B_n`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        // B_m = −1/(m+1) · Σ_{k<m} C(m+1, k) B_k
        let mut sum = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            let c = Rational::from_bigint(binomial(m as u64 + 1, k as u64));
            sum += &(c * bk);
        }
        let coeff = Rational::new(-1, m as i64 + 1);
        b.push(coeff * sum);
    }
    b
}

/// The single Bernoulli number `B_n`.
pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_numbers(n).pop().expect("nonempty")
}

/// The Bernoulli polynomial `B_n(λ) = Σ_k C(n, k) B_k λ^{n−k}`.
pub fn bernoulli_poly(n: usize, lambda: &Rational) -> Rational {
    let numbers = bernoulli_numbers(n);
    let mut acc = Rational::zero();
    let mut lam_pow = Rational::one(); // λ^{n−k} built from k = n downwards
    for k in (0..=n).rev() {
        let c = Rational::from_bigint(binomial(n as u64, k as u64));
        acc += &(c * &numbers[k] * &lam_pow);
        lam_pow *= lambda;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_bernoulli_numbers() {
        let b = bernoulli_numbers(12);
        let expect = [
            "1",
            "-1/2",
            "1/6",
            "0",
            "-1/30",
            "0",
            "1/42",
            "0",
            "-1/30",
            "0",
            "5/66",
            "0",
            "-691/2730",
        ];
        for (n, s) in expect.iter().enumerate() {
            assert_eq!(b[n], s.parse().unwrap(), "B_{n}");
        }
    }

    #[test]
    fn recurrence_holds_to_thirty() {
        // Independent restatement of the defining identity: for n ≥ 1,
        // Σ_{k=0}^{n} C(n+1, k) B_k = 0.
        let b = bernoulli_numbers(30);
        for n in 1..=30usize {
            let mut sum = Rational::zero();
            for k in 0..=n {
                let c = Rational::from_bigint(binomial(n as u64 + 1, k as u64));
                sum += &(c * &b[k]);
            }
            assert!(sum.is_zero(), "n = {n}: {sum}");
        }
    }

    #[test]
    fn bernoulli_poly_values() {
        // B_n(0) = B_n; B_n(1) = B_n for n ≠ 1; B₁(1) = 1/2.
        for n in 0..=8usize {
            assert_eq!(bernoulli_poly(n, &Rational::zero()), bernoulli_number(n));
        }
        assert_eq!(bernoulli_poly(1, &Rational::one()), Rational::new(1, 2));
        assert_eq!(bernoulli_poly(4, &Rational::one()), Rational::new(-1, 30));
        // B₂(λ) = λ² − λ + 1/6 at λ = 1/3 gives −1/18·… = 1/9 − 1/3 + 1/6.
        assert_eq!(
            bernoulli_poly(2, &Rational::new(1, 3)),
            Rational::new(-1, 18)
        );
    }
}
