use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Monic polynomial with rational coefficients, stored lowest degree first.
///
/// Minimal polynomials in a cubic field have degree 3, except for rational
/// elements `c`, whose minimal polynomial is the linear `x - c`. The
/// characteristic polynomial is always cubic (`(x - c)^3` in that case).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicPolynomial {
    coeffs: Vec<BigRational>,
}

impl CubicPolynomial {
    /// `x^3 + a2 x^2 + a1 x + a0`.
    pub fn monic_cubic(a2: BigRational, a1: BigRational, a0: BigRational) -> Self {
        Self { coeffs: vec![a0, a1, a2, BigRational::one()] }
    }

    /// `x - root`.
    pub fn linear(root: BigRational) -> Self {
        Self { coeffs: vec![-root, BigRational::one()] }
    }

    pub fn from_integers(a2: i64, a1: i64, a0: i64) -> Self {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        Self::monic_cubic(q(a2), q(a1), q(a0))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients from the constant term up.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero above the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, lowest degree first, when they are all integral.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Discriminant. For a monic cubic `x^3 + b x^2 + c x + d` this is
    /// `b^2 c^2 - 4 c^3 - 4 b^3 d - 27 d^2 + 18 b c d`; a linear polynomial
    /// has discriminant 1.
    pub fn discriminant(&self) -> BigRational {
        match self.degree() {
            1 => BigRational::one(),
            3 => {
                let (b, c, d) = (&self.coeffs[2], &self.coeffs[1], &self.coeffs[0]);
                let r = |n: i64| BigRational::from_integer(BigInt::from(n));
                b * b * c * c - r(4) * c * c * c - r(4) * b * b * b * d - r(27) * d * d
                    + r(18) * b * c * d
            }
            _ => unreachable!("only linear and cubic polynomials are constructed"),
        }
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for CubicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show = k == 0 || !mag.is_one();
            if show {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
