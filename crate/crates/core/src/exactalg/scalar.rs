use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, NumAssign, Signed, ToPrimitive, Zero};

/// Exact coefficient field used throughout the engine.
///
/// Implemented for `Ratio<I>` over the standard integer types; the crate
/// root fixes `Ratio<BigInt>` as the default.
pub trait Scalar:
    Num + NumAssign + Signed + Clone + Debug + Display + Hash + Eq + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn is_integer(&self) -> bool;

    /// Exact integer value, if integral.
    fn to_bigint(&self) -> Option<BigInt>;

    /// Positive generator of the ideal (Z-module) spanned by `self` and
    /// `other`: the gcd for integers, `gcd(nums)/lcm(dens)` for fractions.
    fn content_gcd(&self, other: &Self) -> Self;

    fn parse_scalar(s: &str) -> Option<Self>;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Into<BigInt>
        + NumAssign
        + Send
        + Sync
        + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(I::from_i64(v).expect("scalar out of range"))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(
            I::from_i64(num).expect("scalar out of range"),
            I::from_i64(den).expect("scalar out of range"),
        )
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Ratio::is_integer(self).then(|| self.numer().clone().into())
    }

    fn content_gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.abs();
        }
        if other.is_zero() {
            return self.abs();
        }
        let n = self.numer().gcd(other.numer());
        let d = self.denom().lcm(other.denom());
        Ratio::new(n, d)
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = I::from_str_radix(n.trim(), 10).ok()?;
                let d = I::from_str_radix(d.trim(), 10).ok()?;
                (!d.is_zero()).then(|| Ratio::new(n, d))
            }
            None => I::from_str_radix(s, 10).ok().map(Ratio::from_integer),
        }
    }
}
