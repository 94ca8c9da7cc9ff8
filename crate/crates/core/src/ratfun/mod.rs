//! Exact univariate arithmetic in `t`: integer polynomials, reduced rational
//! functions, the linear system `(Id - t A) H = C`, and growth classification.

mod growth;
mod linalg;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use growth::{classify_growth, GrowthClass};
pub use linalg::{det_i_minus_ta, first_cofactor_column, i_minus_ta, solve_first_component};
pub use poly::IntPolynomial;

/// Quotient `num / den` of integer polynomials in lowest terms.
///
/// Normal form: `gcd(num, den) = 1` over `Q`, the pair has no common integer
/// content, and the denominator has positive constant term (positive
/// leading coefficient if `t | den`). Every Hilbert series computed here
/// ends up with denominator constant term exactly `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        let sign_ref = if den.coeff(0).is_zero() {
            den.leading().unwrap().clone()
        } else {
            den.coeff(0)
        };
        if sign_ref.is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_polynomial(IntPolynomial::one())
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one())
    }

    /// `1 / (1 - n t)`, the Hilbert series of the free algebra on `n` letters.
    pub fn free_algebra(n: usize) -> Self {
        Self::new(
            IntPolynomial::one(),
            IntPolynomial::new(vec![BigInt::one(), -BigInt::from(n)]),
        )
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Coefficients `h_0, ..., h_degree` of the power series expansion,
    /// from `h_d = f_d - sum_{k >= 1} g_k h_{d-k}`.
    pub fn expand(&self, degree: usize) -> Result<Vec<BigInt>> {
        if !self.den.coeff(0).is_one() {
            return Err(Error::NonUnitConstantTerm(self.den.coeff(0).to_string()));
        }
        let g = self.den.coeffs();
        let mut h: Vec<BigInt> = Vec::with_capacity(degree + 1);
        for d in 0..=degree {
            let mut v = self.num.coeff(d);
            for (k, gk) in g.iter().enumerate().skip(1).take(d) {
                if !gk.is_zero() {
                    v -= gk * &h[d - k];
                }
            }
            h.push(v);
        }
        Ok(h)
    }

    /// Generating function of the partial sums: `self / (1 - t)`.
    pub fn affine(&self) -> Self {
        Self::new(self.num.clone(), &self.den * &IntPolynomial::one_minus_t())
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs.clone())
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::format_rational(self))
    }
}
