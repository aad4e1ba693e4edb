//! Schur expansions with coefficients in `Q[q, t, z]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{syt_count, Partition};
use crate::exactalg::{QtzPoly, Scalar};

/// A graded Frobenius image in the Schur basis: `λ ↦ coefficient of s_λ`.
/// Zero coefficients are not stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FrobeniusSeries<T> {
    n: usize,
    coeffs: BTreeMap<Partition, QtzPoly<T>>,
}

/// Which variables to set before comparing or summarizing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    ZEqualsZero,
    TEqualsZero,
    QEqualsTEqualsOne,
}

impl std::str::FromStr for Specialization {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.replace(' ', "").as_str() {
            "z=0" => Ok(Specialization::ZEqualsZero),
            "t=0" => Ok(Specialization::TEqualsZero),
            "q=t=1" => Ok(Specialization::QEqualsTEqualsOne),
            other => Err(format!("unknown specialization {other:?}")),
        }
    }
}

impl<T: Scalar> FrobeniusSeries<T> {
    pub fn new(n: usize) -> Self {
        FrobeniusSeries {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, lambda: &Partition, p: &QtzPoly<T>) {
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        *entry += p;
        if entry.is_zero() {
            self.coeffs.remove(lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> QtzPoly<T> {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, QtzPoly<T>> {
        &self.coeffs
    }

    pub fn map(&self, f: impl Fn(&QtzPoly<T>) -> QtzPoly<T>) -> Self {
        let mut out = Self::new(self.n);
        for (l, p) in &self.coeffs {
            out.add(l, &f(p));
        }
        out
    }

    pub fn specialize(&self, spec: Specialization) -> Self {
        let zero = T::zero();
        let one = T::one();
        match spec {
            Specialization::ZEqualsZero => self.map(|p| p.specialize(None, None, Some(&zero))),
            Specialization::TEqualsZero => self.map(|p| p.specialize(None, Some(&zero), None)),
            Specialization::QEqualsTEqualsOne => self.map(|p| p.specialize(Some(&one), Some(&one), None)),
        }
    }

    /// The part of z-degree `c`, as a series in `q, t`.
    pub fn z_slice(&self, c: u32) -> Self {
        self.map(|p| p.z_slice(c))
    }

    /// `Σ_λ f^λ · coeff_λ`: the graded dimension (Hilbert series).
    pub fn hilbert_series(&self) -> QtzPoly<T> {
        let mut out = QtzPoly::zero();
        for (l, p) in &self.coeffs {
            out += &p.scale(&T::from_int(syt_count(l) as i64));
        }
        out
    }

    /// Hilbert series evaluated at `q = t = z = 1`.
    pub fn total_dimension(&self) -> T {
        let one = T::one();
        self.hilbert_series().evaluate(&one, &one, &one)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(QtzPoly::has_integer_coeffs)
    }

    pub fn is_schur_positive(&self) -> bool {
        self.coeffs.values().all(QtzPoly::has_nonnegative_coeffs)
    }
}

impl<T: Scalar> fmt::Display for FrobeniusSeries<T> {
    /// One line per nonzero coefficient: `s(2,1): q + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return writeln!(f, "0");
        }
        for (l, p) in &self.coeffs {
            writeln!(f, "s({l}): {p}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for FrobeniusSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FrobeniusSeries(n={}, {:?})", self.n, self.coeffs)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    n: usize,
    coeffs: BTreeMap<Partition, String>,
}

impl<T: Scalar> Serialize for FrobeniusSeries<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, p)| (l.clone(), p.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for FrobeniusSeries<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        let mut out = FrobeniusSeries::new(repr.n);
        for (l, p) in repr.coeffs {
            let p: QtzPoly<T> = p.parse().map_err(serde::de::Error::custom)?;
            out.add(&l, &p);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = QtzPoly<BigRational>;

    #[test]
    fn summaries() {
        let mut f = FrobeniusSeries::<BigRational>::new(2);
        f.add(&"2".parse().unwrap(), &P::one());
        f.add(&"1,1".parse().unwrap(), &"q + t + z".parse().unwrap());
        assert_eq!(f.total_dimension(), BigRational::from_int(4));
        assert_eq!(
            f.specialize(Specialization::ZEqualsZero).total_dimension(),
            BigRational::from_int(3)
        );
        assert_eq!(f.z_slice(1).coeff(&"1,1".parse().unwrap()), P::one());
        assert!(f.is_schur_positive());
        assert_eq!(f.to_string(), "s(2): 1\ns(1,1): t + q + z\n");
        let json = serde_json::to_string(&f).unwrap();
        let back: FrobeniusSeries<BigRational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn cancelling_coefficient_is_dropped() {
        let mut f = FrobeniusSeries::<BigRational>::new(1);
        let l: Partition = "1".parse().unwrap();
        f.add(&l, &P::q());
        f.add(&l, &-P::q());
        assert!(f.coeffs().is_empty());
    }
}
