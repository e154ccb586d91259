//! Exact arithmetic in Q(q) and the q-combinatorics built on it: balanced
//! q-numbers, q-factorials and q-binomial coefficients.
//!
//! The balanced convention is used throughout:
//! `[z]_q = (q^z - q^-z)/(q - q^-1)`.

mod laurent;
mod qrat;

pub use laurent::Laurent;
pub use qrat::QRat;

use num_complex::Complex64;
use thiserror::Error;

use crate::qdilog::BContext;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QFieldError {
    #[error("q-factorial is undefined for negative n = {0}")]
    NegativeFactorial(i64),
}

/// The q-number `[z]_q = (q^z - q^-z)/(q - q^-1)` as an exact element of
/// Q(q). For z >= 0 this is the Laurent polynomial
/// `q^{z-1} + q^{z-3} + ... + q^{1-z}`.
pub fn qnumber(z: i64) -> QRat {
    if z == 0 {
        return QRat::zero();
    }
    if z < 0 {
        return -qnumber(-z);
    }
    let mut acc = Laurent::zero();
    let mut k = z - 1;
    loop {
        acc += &Laurent::q_pow(k);
        if k <= 1 - z {
            break;
        }
        k -= 2;
    }
    QRat::from_laurent(acc)
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn qfactorial(n: i64) -> Result<QRat, QFieldError> {
    if n < 0 {
        return Err(QFieldError::NegativeFactorial(n));
    }
    let mut acc = QRat::one();
    for k in 1..=n {
        acc = &acc * &qnumber(k);
    }
    Ok(acc)
}

/// Balanced q-binomial coefficient: `[n]!/([k]![n-k]!)` when
/// `0 <= k <= n`, and exactly 0 otherwise.
pub fn qbinomial(n: i64, k: i64) -> QRat {
    if k < 0 || n < 0 || k > n {
        return QRat::zero();
    }
    // [n]!/([k]![n-k]!) computed as a product of exact quotients
    let mut acc = QRat::one();
    let k = k.min(n - k);
    for j in 1..=k {
        acc = &(&acc * &qnumber(n - k + j)) / &qnumber(j);
    }
    acc
}

/// `[z]_q` evaluated numerically at `q = e^{i pi b^2}` for a complex
/// argument z. Well-defined since b^2 is irrational, so `q != q^-1`.
pub fn qnumber_numeric(z: Complex64, ctx: &BContext) -> Complex64 {
    let ipib2 = Complex64::new(0.0, std::f64::consts::PI * ctx.b_squared());
    let qz = (ipib2 * z).exp();
    let qmz = (-ipib2 * z).exp();
    (qz - qmz) / (ctx.q() - ctx.q_inv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    /// Independent oracle: direct rational-function arithmetic on
    /// (q^z - q^-z)/(q - q^-1) without the closed-form expansion.
    fn qnumber_oracle(z: i64) -> QRat {
        let num = Laurent::q_pow(z) - Laurent::q_pow(-z);
        let den = Laurent::q_pow(1) - Laurent::q_pow(-1);
        if num.is_zero() {
            return QRat::zero();
        }
        QRat::new(num, den)
    }

    #[test]
    fn qnumber_examples() {
        assert_eq!(qnumber(0), QRat::zero());
        assert_eq!(qnumber(2), QRat::from_laurent(Laurent::q_pow(1) + Laurent::q_pow(-1)));
        // z = -3 -> -(q^2 + 1 + q^-2), frozen from the oracle
        let expected = -QRat::from_laurent(
            Laurent::q_pow(2) + Laurent::one() + Laurent::q_pow(-2),
        );
        assert_eq!(qnumber(-3), expected);
        assert_eq!(qnumber(-3), qnumber_oracle(-3));
    }

    #[test]
    fn qnumber_matches_oracle_range() {
        for z in -12..=12 {
            assert_eq!(qnumber(z), qnumber_oracle(z), "z = {}", z);
        }
    }

    #[test]
    fn qfactorial_examples() {
        assert_eq!(qfactorial(0).unwrap(), QRat::one());
        assert_eq!(
            qfactorial(2).unwrap(),
            QRat::from_laurent(Laurent::q_pow(1) + Laurent::q_pow(-1))
        );
        // [3]! = (q+q^-1)(q^2+1+q^-2) = q^3 + 2q + 2q^-1 + q^-3, frozen from
        // the expand-the-product oracle
        let expected = QRat::from_laurent(
            Laurent::q_pow(3)
                + Laurent::monomial(1, num_rational::BigRational::from_integer(2.into()))
                + Laurent::monomial(-1, num_rational::BigRational::from_integer(2.into()))
                + Laurent::q_pow(-3),
        );
        assert_eq!(qfactorial(3).unwrap(), expected);
        let oracle = &qnumber(1) * &(&qnumber(2) * &qnumber(3));
        assert_eq!(qfactorial(3).unwrap(), oracle);
        assert_eq!(qfactorial(-1), Err(QFieldError::NegativeFactorial(-1)));
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(5, -1), QRat::zero());
        assert_eq!(qbinomial(3, 7), QRat::zero());
        // (4,2) -> q^4 + q^2 + 2 + q^-2 + q^-4, frozen from the
        // factorial-quotient oracle
        let expected = QRat::from_laurent(
            Laurent::q_pow(4)
                + Laurent::q_pow(2)
                + Laurent::from_int(2)
                + Laurent::q_pow(-2)
                + Laurent::q_pow(-4),
        );
        assert_eq!(qbinomial(4, 2), expected);
        for n in 0..=8 {
            assert_eq!(qbinomial(n, 0), QRat::one());
        }
    }

    #[test]
    fn qbinomial_factorial_quotient_oracle() {
        for n in 0..=10i64 {
            for k in 0..=n {
                let oracle = &qfactorial(n).unwrap()
                    / &(&qfactorial(k).unwrap() * &qfactorial(n - k).unwrap());
                assert_eq!(qbinomial(n, k), oracle, "({}, {})", n, k);
            }
        }
    }

    #[test]
    fn qbinomial_symmetry() {
        for n in 0..=12i64 {
            for k in 0..=n {
                assert_eq!(qbinomial(n, k), qbinomial(n, n - k));
            }
        }
    }

    #[test]
    fn pascal_identity() {
        // q^{t-r} [t r] + q^{-r-1} [t r+1] = [t+1 r+1], exactly
        for t in 0..=12i64 {
            for r in 0..=t {
                let lhs = &(&QRat::q_pow(t - r) * &qbinomial(t, r))
                    + &(&QRat::q_pow(-r - 1) * &qbinomial(t, r + 1));
                assert_eq!(lhs, qbinomial(t + 1, r + 1), "t={} r={}", t, r);
            }
        }
    }

    #[test]
    fn generalized_pascal_identity() {
        // [S-r+1] [k r-1] + [S-k-r] [k r] = [S-k] [k+1 r]
        for s in 0..=12i64 {
            for k in 0..=9i64 {
                for r in 0..=k + 1 {
                    let lhs = &(&qnumber(s - r + 1) * &qbinomial(k, r - 1))
                        + &(&qnumber(s - k - r) * &qbinomial(k, r));
                    let rhs = &qnumber(s - k) * &qbinomial(k + 1, r);
                    assert_eq!(lhs, rhs, "S={} k={} r={}", s, k, r);
                }
            }
        }
    }

    #[test]
    fn numeric_matches_exact() {
        let ctx = BContext::default();
        let q = ctx.q();
        for n in -20..=20i64 {
            let exact = qnumber(n).eval_complex(q);
            let numeric = qnumber_numeric(Complex64::new(n as f64, 0.0), &ctx);
            assert!(
                close(exact, numeric, 1e-12),
                "n={} exact={} numeric={}",
                n,
                exact,
                numeric
            );
        }
    }

    #[test]
    fn numeric_examples() {
        let ctx = BContext::default();
        let one = qnumber_numeric(Complex64::new(1.0, 0.0), &ctx);
        assert!(close(one, Complex64::new(1.0, 0.0), 1e-13));

        // [1/b^2 + w] = -[w]
        let w = Complex64::new(0.37, -0.21);
        let shifted = qnumber_numeric(w + 1.0 / ctx.b_squared(), &ctx);
        assert!(close(shifted, -qnumber_numeric(w, &ctx), 1e-11));

        // [2] = 2 cos(pi b^2)
        let two = qnumber_numeric(Complex64::new(2.0, 0.0), &ctx);
        let expected = 2.0 * (std::f64::consts::PI * ctx.b_squared()).cos();
        assert!(close(two, Complex64::new(expected, 0.0), 1e-12));
    }
}
