//! Laurent polynomials in q with arbitrary-precision integer coefficients.
//!
//! Dense storage between the lowest and highest exponent: the coefficient
//! polynomials occurring in Schur expansions are short and dense.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial Σ `coeffs[i]` · q^(lo+i). Canonical form: the first and
/// last stored coefficients are nonzero, or `coeffs` is empty (the zero
/// polynomial, with `lo == 0`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        QLaurent::monomial(0, BigInt::one())
    }

    /// The monomial coeff · q^exp.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return QLaurent::zero();
        }
        QLaurent {
            lo: exp,
            coeffs: vec![coeff],
        }
    }

    /// q^exp.
    pub fn q_power(exp: i64) -> Self {
        QLaurent::monomial(exp, 1)
    }

    /// (−q^e)^k, handling negative k by parity (the inverse of a signed
    /// monomial is a signed monomial).
    pub fn signed_q_power(exp: i64, k: i64) -> Self {
        let sign: i64 = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        QLaurent::monomial(exp * k, sign)
    }

    /// Canonicalize raw dense storage.
    pub fn from_coeffs(mut lo: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let leading_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros > 0 {
            coeffs.drain(..leading_zeros);
            lo += leading_zeros as i64;
        }
        if coeffs.is_empty() {
            return QLaurent::zero();
        }
        QLaurent { lo, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn hi(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.lo + self.coeffs.len() as i64 - 1
        }
    }

    /// Coefficient of q^k.
    pub fn coeff(&self, k: i64) -> BigInt {
        if k < self.lo {
            return BigInt::zero();
        }
        self.coeffs
            .get((k - self.lo) as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Iterate (exponent, coefficient) pairs with nonzero coefficient,
    /// ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Number of nonzero monomials.
    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// q ↦ 1/q: the coefficient of q^k becomes the coefficient of q^(−k).
    pub fn subst_q_inverse(&self) -> QLaurent {
        if self.is_zero() {
            return QLaurent::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        QLaurent::from_coeffs(-self.hi(), coeffs)
    }

    /// Evaluate at a rational point. Evaluating at 0 with a negative lowest
    /// exponent is a pole.
    pub fn evaluate(&self, q0: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if q0.is_zero() {
            if self.lo < 0 {
                return Err(Error::PoleAtZero { lo: self.lo });
            }
            return Ok(BigRational::from(self.coeff(0)));
        }
        // Horner on the polynomial part, then the q^lo prefactor.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from(c.clone());
        }
        Ok(acc * q0.pow(self.lo as i32))
    }

    /// True when the polynomial has no negative exponents and no negative
    /// coefficients (q-nonnegativity, as for Kostka–Foulkes polynomials).
    pub fn is_nonneg_poly(&self) -> bool {
        self.is_zero() || (self.lo >= 0 && self.coeffs.iter().all(|c| !c.is_negative()))
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;

    fn add(self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.hi().max(rhs.hi());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        QLaurent::from_coeffs(lo, coeffs)
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;

    fn sub(self, rhs: &QLaurent) -> QLaurent {
        self + &(-rhs)
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;

    fn neg(self) -> QLaurent {
        QLaurent {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;

    fn mul(self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return QLaurent::zero();
        }
        let lo = self.lo + rhs.lo;
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QLaurent::from_coeffs(lo, coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QLaurent {
            type Output = QLaurent;
            fn $method(self, rhs: QLaurent) -> QLaurent {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending exponents: q^6+q^5+q^4-q^3
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if !mag.is_one() || e == 0 {
                write!(f, "{}", mag)?;
            }
            if e == 1 {
                write!(f, "q")?;
            } else if e != 0 {
                write!(f, "q^{}", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({})", self)
    }
}
