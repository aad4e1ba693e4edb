//! Rational functions in `q` and `t` with lazy normalization.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{ExactAlgError, QtzPoly, Scalar};

/// `num / den` with `den != 0`.
///
/// Canonical form only fixes the sign (leading coefficient of `den` is
/// positive) and divides out the common scalar content; no polynomial gcd is
/// taken. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct QtRationalFunction<T> {
    num: QtzPoly<T>,
    den: QtzPoly<T>,
}

impl<T: Scalar> QtRationalFunction<T> {
    pub fn new(num: QtzPoly<T>, den: QtzPoly<T>) -> Result<Self, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: QtzPoly<T>) -> Self {
        Self::normalized(p, QtzPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(QtzPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QtzPoly::one())
    }

    fn normalized(num: QtzPoly<T>, den: QtzPoly<T>) -> Self {
        if num.is_zero() {
            return QtRationalFunction {
                num,
                den: QtzPoly::one(),
            };
        }
        let mut g = num.content().content_gcd(&den.content());
        let lead_negative = den.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false);
        if lead_negative {
            g = -g;
        }
        if g.is_one() {
            return QtRationalFunction { num, den };
        }
        let inv = T::one() / g;
        QtRationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn numerator(&self) -> &QtzPoly<T> {
        &self.num
    }

    pub fn denominator(&self) -> &QtzPoly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Result<Self, ExactAlgError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Certifies that the function is a polynomial and returns it.
    pub fn to_polynomial(&self) -> Result<QtzPoly<T>, ExactAlgError> {
        self.num.divide_exact(&self.den)
    }
}

impl<T: Scalar> PartialEq for QtRationalFunction<T> {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<T: Scalar> Add for &QtRationalFunction<T> {
    type Output = QtRationalFunction<T>;

    fn add(self, rhs: &QtRationalFunction<T>) -> QtRationalFunction<T> {
        if self.den == rhs.den {
            return QtRationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        QtRationalFunction::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<T: Scalar> Add for QtRationalFunction<T> {
    type Output = QtRationalFunction<T>;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Neg for QtRationalFunction<T> {
    type Output = QtRationalFunction<T>;

    fn neg(self) -> Self {
        QtRationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<T: Scalar> Sub for &QtRationalFunction<T> {
    type Output = QtRationalFunction<T>;

    fn sub(self, rhs: &QtRationalFunction<T>) -> QtRationalFunction<T> {
        self + &(-rhs.clone())
    }
}

impl<T: Scalar> Mul for &QtRationalFunction<T> {
    type Output = QtRationalFunction<T>;

    fn mul(self, rhs: &QtRationalFunction<T>) -> QtRationalFunction<T> {
        QtRationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<T: Scalar> Mul for QtRationalFunction<T> {
    type Output = QtRationalFunction<T>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Div for &QtRationalFunction<T> {
    type Output = Result<QtRationalFunction<T>, ExactAlgError>;

    fn div(self, rhs: &QtRationalFunction<T>) -> Self::Output {
        Ok(self * &rhs.inverse()?)
    }
}

impl<T: Scalar> fmt::Display for QtRationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<T: Scalar> fmt::Debug for QtRationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtRationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = QtzPoly<BigRational>;
    type R = QtRationalFunction<BigRational>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    fn r(n: &str, d: &str) -> R {
        R::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn field_examples() {
        assert!((&r("1", "q - t") + &r("1", "t - q")).is_zero());
        assert_eq!(&r("1", "q - t") * &R::from_poly(p("q - t")), R::one());
        assert_eq!(&r("q", "1 - t") + &r("t", "1 - t"), r("q + t", "1 - t"));
        let x = &r("1", "q - t") * &R::from_poly(p("q - t"));
        assert_eq!(x.to_polynomial().unwrap(), P::one());
    }

    #[test]
    fn canonical_sign_and_content() {
        let x = r("2*q", "-4 + 4*t");
        assert_eq!(x.numerator(), &p("q"));
        assert_eq!(x.denominator(), &p("-2 + 2*t"));
        let y = r("-q", "-1/2*t");
        assert_eq!(y.denominator(), &p("t"));
        assert_eq!(y.numerator(), &p("2*q"));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(R::new(p("q"), P::zero()).unwrap_err(), ExactAlgError::DivisionByZero);
        assert!((&R::one() / &R::zero()).is_err());
        assert_eq!(r("q", "t").to_polynomial(), Err(ExactAlgError::NotDivisible));
    }
}
