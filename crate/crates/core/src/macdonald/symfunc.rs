//! Homogeneous symmetric functions with `Q[q, t, z]` coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{partitions_of, KostkaMatrix, Partition};
use crate::exactalg::{QtzPoly, Scalar};
use crate::frobenius::FrobeniusSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "p")]
    Power,
    #[serde(rename = "e")]
    Elementary,
}

impl Basis {
    pub fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
            Basis::Power => 'p',
            Basis::Elementary => 'e',
        }
    }
}

/// `Σ_λ coeff_λ · b_λ` for a basis `b` of degree-`n` symmetric functions.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc<T> {
    basis: Basis,
    n: usize,
    coeffs: BTreeMap<Partition, QtzPoly<T>>,
}

impl<T: Scalar> SymFunc<T> {
    pub fn zero(basis: Basis, n: usize) -> Self {
        SymFunc {
            basis,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::zero(basis, lambda.size());
        f.add_term(lambda, &QtzPoly::one());
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, QtzPoly<T>> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> QtzPoly<T> {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Panics when `|λ| ≠ n`.
    pub fn add_term(&mut self, lambda: &Partition, c: &QtzPoly<T>) {
        assert_eq!(lambda.size(), self.n, "partition {lambda} has the wrong size");
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(lambda);
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QtzPoly<T>) -> QtzPoly<T>) -> Self {
        let mut out = Self::zero(self.basis, self.n);
        for (l, c) in &self.coeffs {
            out.add_term(l, &f(c));
        }
        out
    }

    pub fn scale(&self, c: &QtzPoly<T>) -> Self {
        self.map_coeffs(|p| p * c)
    }

    /// Sum of two expansions in the same basis.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "adding across bases");
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l, c);
        }
        out
    }

    pub fn swap_qt(&self) -> Self {
        self.map_coeffs(QtzPoly::swap_qt)
    }

    /// Re-expands in the monomial basis.
    pub fn to_monomial(&self) -> Self {
        if self.basis == Basis::Monomial {
            return self.clone();
        }
        let mut out = Self::zero(Basis::Monomial, self.n);
        let nus = partitions_of(self.n);
        for (l, c) in &self.coeffs {
            for nu in &nus {
                let k = match self.basis {
                    Basis::Schur => {
                        let km = KostkaMatrix::for_n(self.n);
                        km.value_at(km.index_of(l).expect("size"), km.index_of(nu).expect("size")) as i64
                    }
                    Basis::Power => power_in_monomial(l, nu),
                    Basis::Elementary => elementary_in_monomial(l, nu),
                    Basis::Monomial => unreachable!(),
                };
                if k != 0 {
                    out.add_term(nu, &c.scale(&T::from_int(k)));
                }
            }
        }
        out
    }

    /// Re-expands in the Schur basis.
    pub fn to_schur(&self) -> Self {
        match self.basis {
            Basis::Schur => self.clone(),
            Basis::Monomial => mono_to_schur(self),
            _ => mono_to_schur(&self.to_monomial()),
        }
    }

    /// The Schur expansion as a graded Frobenius series.
    pub fn to_frobenius_series(&self) -> FrobeniusSeries<T> {
        let mut f = FrobeniusSeries::new(self.n);
        for (l, c) in self.to_schur().coeffs() {
            f.add(l, c);
        }
        f
    }
}

/// Coefficient of `m_ν` in `p_μ`: ways to put the parts of `μ` into rows of sizes `ν`.
fn power_in_monomial(mu: &Partition, nu: &Partition) -> i64 {
    fn go(parts: &[usize], rows: &mut [usize]) -> i64 {
        let Some((&p, rest)) = parts.split_first() else {
            return i64::from(rows.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for i in 0..rows.len() {
            if rows[i] >= p {
                rows[i] -= p;
                total += go(rest, rows);
                rows[i] += p;
            }
        }
        total
    }
    go(mu.parts(), &mut nu.parts().to_vec())
}

/// Coefficient of `m_ν` in `e_μ`: 0-1 matrices with row sums `μ`, column sums `ν`.
fn elementary_in_monomial(mu: &Partition, nu: &Partition) -> i64 {
    fn go(rows: &[usize], cols: &mut [usize]) -> i64 {
        let Some((&r, rest)) = rows.split_first() else {
            return i64::from(cols.iter().all(|&c| c == 0));
        };
        choose(r, 0, rest, cols)
    }
    fn choose(left: usize, from: usize, rest: &[usize], cols: &mut [usize]) -> i64 {
        if left == 0 {
            return go(rest, cols);
        }
        let mut total = 0;
        for j in from..cols.len() {
            if cols[j] > 0 {
                cols[j] -= 1;
                total += choose(left - 1, j + 1, rest, cols);
                cols[j] += 1;
            }
        }
        total
    }
    go(mu.parts(), &mut nu.parts().to_vec())
}

/// Solves `Σ_λ d_λ K_{λν} = c_ν`. `K` is unitriangular in reverse lexicographic
/// order, so `d_ν = c_ν − Σ_{λ before ν} d_λ K_{λν}`.
pub fn mono_to_schur<T: Scalar>(f: &SymFunc<T>) -> SymFunc<T> {
    assert_eq!(f.basis, Basis::Monomial, "expected a monomial expansion");
    let km = KostkaMatrix::for_n(f.n);
    let parts = km.partitions();
    let mut d: Vec<QtzPoly<T>> = Vec::with_capacity(parts.len());
    let mut out = SymFunc::zero(Basis::Schur, f.n);
    for (j, nu) in parts.iter().enumerate() {
        let mut c = f.coeff(nu);
        for (i, di) in d.iter().enumerate() {
            let k = km.value_at(i, j);
            if k != 0 && !di.is_zero() {
                c -= &di.scale(&T::from_int(k as i64));
            }
        }
        out.add_term(nu, &c);
        d.push(c);
    }
    out
}

pub fn schur_to_mono<T: Scalar>(f: &SymFunc<T>) -> SymFunc<T> {
    assert_eq!(f.basis, Basis::Schur, "expected a Schur expansion");
    f.to_monomial()
}

impl<T: Scalar> fmt::Display for SymFunc<T> {
    /// One line per nonzero coefficient: `s(2,1): q + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return writeln!(f, "0");
        }
        for (l, c) in &self.coeffs {
            writeln!(f, "{}({l}): {c}", self.basis.symbol())?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for SymFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({:?}, n={}, {:?})", self.basis, self.n, self.coeffs)
    }
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    basis: Basis,
    n: usize,
    coeffs: BTreeMap<Partition, String>,
}

impl<T: Scalar> Serialize for SymFunc<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymFuncRepr {
            basis: self.basis,
            n: self.n,
            coeffs: self.coeffs.iter().map(|(l, c)| (l.clone(), c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for SymFunc<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SymFuncRepr::deserialize(d)?;
        let mut out = SymFunc::zero(repr.basis, repr.n);
        for (l, c) in repr.coeffs {
            if l.size() != repr.n {
                return Err(serde::de::Error::custom(format!("partition {l} is not of size {}", repr.n)));
            }
            let c: QtzPoly<T> = c.parse().map_err(serde::de::Error::custom)?;
            out.add_term(&l, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn mono(terms: &[(&str, i64)]) -> SymFunc<Q> {
        let mut f = SymFunc::zero(Basis::Monomial, p(terms[0].0).size());
        for (l, c) in terms {
            f.add_term(&p(l), &QtzPoly::from_i64(*c));
        }
        f
    }

    #[test]
    fn mono_to_schur_examples() {
        assert_eq!(mono_to_schur(&mono(&[("2", 1)])).to_string(), "s(2): 1\ns(1,1): -1\n");
        assert_eq!(mono_to_schur(&mono(&[("2", 1), ("1,1", 2)])).to_string(), "s(2): 1\ns(1,1): 1\n");
    }

    #[test]
    fn other_bases_reach_schur() {
        // p_1^n = Σ f^λ s_λ and e_n = s_{1^n}
        let p111 = SymFunc::<Q>::basis_element(Basis::Power, &p("1,1,1")).to_schur();
        assert_eq!(p111.to_string(), "s(3): 1\ns(2,1): 2\ns(1,1,1): 1\n");
        let e3 = SymFunc::<Q>::basis_element(Basis::Elementary, &p("3")).to_schur();
        assert_eq!(e3.to_string(), "s(1,1,1): 1\n");
        let p3 = SymFunc::<Q>::basis_element(Basis::Power, &p("3")).to_schur();
        assert_eq!(p3.to_string(), "s(3): 1\ns(2,1): -1\ns(1,1,1): 1\n");
    }

    #[test]
    fn json_shape() {
        let f = mono_to_schur(&mono(&[("2", 1), ("1,1", 2)]));
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json, serde_json::json!({"basis": "s", "n": 2, "coeffs": {"2": "1", "1,1": "1"}}));
        let back: SymFunc<Q> = serde_json::from_value(json).unwrap();
        assert_eq!(back, f);
    }

    proptest! {
        #[test]
        fn schur_round_trip(n in 1usize..=5, seed in proptest::collection::vec(-5i64..=5, 7)) {
            let mut f = SymFunc::<Q>::zero(Basis::Monomial, n);
            for (l, c) in partitions_of(n).iter().zip(seed.iter().cycle()) {
                f.add_term(l, &(QtzPoly::q().scale(&Q::from_int(*c)) + QtzPoly::from_i64(1)));
            }
            prop_assert_eq!(schur_to_mono(&mono_to_schur(&f)), f);
        }
    }
}
