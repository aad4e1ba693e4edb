//! Direct construction of ideal components from the spanning set
//! `{generator · monomial}`. Slower than the normal-form engine; kept as an
//! independent route for cross-checking.

use std::collections::HashMap;

use crate::combinatorics::Permutation;
use crate::exactalg::{restricted_trace, EchelonBuilder, ExactAlgError, ReducedEchelon, Scalar, SparseMatrix, SparseVec};
use crate::superring::{enumerate_monomials, generators, SuperMonomial, SuperPolynomial, TriDegree};

/// A basis of `I_n^{(a,b,c)}` in monomial coordinates.
pub struct IdealComponentBasis<T> {
    pub n: usize,
    pub degree: TriDegree,
    pub monomials: Vec<SuperMonomial>,
    index: HashMap<SuperMonomial, usize>,
    echelon: ReducedEchelon<T>,
}

impl<T: Scalar> IdealComponentBasis<T> {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ring_dim(&self) -> usize {
        self.monomials.len()
    }

    /// Column matrix whose columns span the component.
    pub fn basis(&self) -> SparseMatrix<T> {
        SparseMatrix::from_columns(self.monomials.len(), self.echelon.rows()).expect("row length")
    }

    pub fn coordinates(&self, f: &SuperPolynomial<T>) -> Option<SparseVec<T>> {
        let pairs: Option<Vec<(usize, T)>> = f
            .terms()
            .map(|(m, c)| self.index.get(m).map(|&i| (i, c.clone())))
            .collect();
        pairs.map(SparseVec::from_pairs)
    }

    pub fn contains(&self, f: &SuperPolynomial<T>) -> bool {
        f.is_zero() || self.coordinates(f).is_some_and(|v| self.echelon.contains(&v))
    }

    /// The signed action of `σ` in monomial coordinates.
    pub fn act(&self, sigma: &Permutation, v: &SparseVec<T>) -> SparseVec<T> {
        SparseVec::from_pairs(v.entries().iter().map(|(i, c)| {
            let (s, image) = self.monomials[*i].permute(sigma);
            let c = if s < 0 { -c.clone() } else { c.clone() };
            (self.index[&image], c)
        }))
    }

    /// Trace of `σ` on the ideal component.
    pub fn trace(&self, sigma: &Permutation) -> Result<T, ExactAlgError> {
        if self.rank() == 0 {
            return Ok(T::zero());
        }
        restricted_trace(&self.basis(), |v| self.act(sigma, v))
    }
}

/// Row-reduces the products of every generator with every monomial of the
/// complementary degree.
pub fn ideal_component<T: Scalar>(n: usize, d: TriDegree) -> IdealComponentBasis<T> {
    let monomials = enumerate_monomials(n, d);
    let index: HashMap<SuperMonomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let mut eb = EchelonBuilder::new(monomials.len());
    'span: for g in generators::<T>(n) {
        let Some(rest) = d.checked_sub(&g.degree) else { continue };
        for m in enumerate_monomials(n, rest) {
            let prod = g.poly.mul_monomial_left(&m);
            let v = SparseVec::from_pairs(prod.terms().map(|(m, c)| (index[m], c.clone())));
            eb.push(v);
            if eb.is_full() {
                break 'span;
            }
        }
    }
    IdealComponentBasis {
        n,
        degree: d,
        monomials,
        index,
        echelon: eb.into_rref(),
    }
}
