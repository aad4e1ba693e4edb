//! Modified Macdonald polynomials and the operators `Δ'_{e_k}` applied to `e_n`.

mod hhl;
mod symfunc;

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::combinatorics::{partitions_of, Partition};
use crate::exactalg::{ExactAlgError, Exponent, QtzPoly, Scalar};
use crate::frobenius::FrobeniusSeries;

pub use hhl::{filling_sum, hhl_htilde_monomial};
pub use symfunc::{mono_to_schur, schur_to_mono, Basis, SymFunc};

/// Largest `|μ|` accepted by [`hhl_htilde`].
pub const HHL_SIZE_LIMIT: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MacdonaldError {
    #[error("the empty partition has no Macdonald scalars")]
    EmptyPartition,
    #[error("e_{k} of an alphabet of {len} letters")]
    DegreeOutOfRange { k: usize, len: usize },
    #[error("partition size {0} exceeds the limit {HHL_SIZE_LIMIT}")]
    TooLarge(usize),
    #[error("coefficient of s({0}) is not an integer polynomial")]
    NonIntegral(Partition),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

/// The monomials `q^{a'(c)} t^{l'(c)}` of the cells of `μ`, cell `(0,0)` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellAlphabet(Vec<Exponent>);

impl CellAlphabet {
    pub fn new(mu: &Partition) -> Self {
        CellAlphabet(
            mu.cells()
                .map(|c| Exponent::qt(mu.coarm(c) as u32, mu.coleg(c) as u32))
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Exponent] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `B_μ`.
    pub fn sum<T: Scalar>(&self) -> QtzPoly<T> {
        QtzPoly::from_terms(self.0.iter().map(|e| (*e, T::one())))
    }

    /// `e_k[B_μ − 1]`: elementary symmetric function of the letters other than 1.
    pub fn ek_minus_one<T: Scalar>(&self, k: usize) -> Result<QtzPoly<T>, MacdonaldError> {
        let rest = &self.0[1.min(self.0.len())..];
        if k > rest.len() {
            return Err(MacdonaldError::DegreeOutOfRange { k, len: rest.len() });
        }
        // e[j] after each letter: e_j(x_1..x_i)
        let mut e = vec![QtzPoly::<T>::zero(); k + 1];
        e[0] = QtzPoly::one();
        for letter in rest {
            for j in (1..=k).rev() {
                let add = e[j - 1].mul_monomial(*letter, &T::one());
                e[j] += &add;
            }
        }
        Ok(e.swap_remove(k))
    }
}

/// `B_μ`, `Π_μ`, `w_μ` and `M = (1−q)(1−t)`.
#[derive(Clone, PartialEq, Eq)]
pub struct MacdonaldScalars<T> {
    pub b: QtzPoly<T>,
    pub pi: QtzPoly<T>,
    pub w: QtzPoly<T>,
    pub m: QtzPoly<T>,
}

impl<T: Scalar> std::fmt::Debug for MacdonaldScalars<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "B = {}, Pi = {}, w = {}, M = {}", self.b, self.pi, self.w, self.m)
    }
}

fn one_minus<T: Scalar>(e: Exponent) -> QtzPoly<T> {
    QtzPoly::one() - QtzPoly::monomial(e, T::one())
}

fn binomial<T: Scalar>(plus: Exponent, minus: Exponent) -> QtzPoly<T> {
    QtzPoly::monomial(plus, T::one()) - QtzPoly::monomial(minus, T::one())
}

/// The factors of `Π_μ` and of `w_μ`, each a binomial.
fn scalar_factors<T: Scalar>(mu: &Partition) -> (Vec<QtzPoly<T>>, Vec<QtzPoly<T>>) {
    let pi = mu
        .cells()
        .filter(|c| c.row != 0 || c.col != 0)
        .map(|c| one_minus(Exponent::qt(mu.coarm(c) as u32, mu.coleg(c) as u32)))
        .collect();
    let w = mu
        .cells()
        .flat_map(|c| {
            let (a, l) = (mu.arm(c) as u32, mu.leg(c) as u32);
            [
                binomial(Exponent::qt(a, 0), Exponent::qt(0, l + 1)),
                binomial(Exponent::qt(0, l), Exponent::qt(a + 1, 0)),
            ]
        })
        .collect();
    (pi, w)
}

fn m_factors<T: Scalar>() -> [QtzPoly<T>; 2] {
    [one_minus(Exponent::qt(1, 0)), one_minus(Exponent::qt(0, 1))]
}

fn product<T: Scalar>(fs: &[QtzPoly<T>]) -> QtzPoly<T> {
    fs.iter().fold(QtzPoly::one(), |acc, f| &acc * f)
}

pub fn macdonald_scalars<T: Scalar>(mu: &Partition) -> Result<MacdonaldScalars<T>, MacdonaldError> {
    if mu.is_empty() {
        return Err(MacdonaldError::EmptyPartition);
    }
    let (pi, w) = scalar_factors::<T>(mu);
    Ok(MacdonaldScalars {
        b: CellAlphabet::new(mu).sum(),
        pi: product(&pi),
        w: product(&w),
        m: product(&m_factors()),
    })
}

/// `e_k[B_μ − 1]`.
pub fn ek_pleth<T: Scalar>(mu: &Partition, k: usize) -> Result<QtzPoly<T>, MacdonaldError> {
    if mu.is_empty() {
        return Err(MacdonaldError::EmptyPartition);
    }
    CellAlphabet::new(mu).ek_minus_one(k)
}

/// `H̃_μ[X; q, t]` in the Schur basis.
pub fn hhl_htilde<T: Scalar>(mu: &Partition) -> Result<SymFunc<T>, MacdonaldError> {
    if mu.size() > HHL_SIZE_LIMIT {
        return Err(MacdonaldError::TooLarge(mu.size()));
    }
    Ok(mono_to_schur(&hhl_htilde_monomial(mu)))
}

/// A binomial factor up to sign: the representative has a positive leading coefficient.
fn canonical<T: Scalar>(f: &QtzPoly<T>) -> (bool, QtzPoly<T>) {
    let negative = f.leading_term().is_some_and(|(_, c)| c.is_negative());
    if negative {
        (true, -f.clone())
    } else {
        (false, f.clone())
    }
}

type FactorCounts<T> = BTreeMap<String, (QtzPoly<T>, usize)>;

/// One term `(M B_μ Π_μ / w_μ) H̃_μ` of the expansion of `e_n`, over a shared
/// denominator.
struct ExpansionTerm<T> {
    mu: Partition,
    alphabet: CellAlphabet,
    htilde: SymFunc<T>,
    /// Numerator after cancellation, multiplied up to the common denominator.
    numerator: QtzPoly<T>,
}

/// `e_n = Σ_μ (M B_μ Π_μ / w_μ) H̃_μ`, prepared for applying `Δ'_{e_k}`.
///
/// Binomial factors shared by numerator and denominator cancel first; the
/// remaining denominators are brought to a common multiple, so each Schur
/// coefficient of `Δ'_{e_k}(e_n)` is one polynomial divided exactly by the
/// common denominator.
pub struct DeltaExpansion<T> {
    n: usize,
    terms: Vec<ExpansionTerm<T>>,
    denominator: Vec<QtzPoly<T>>,
}

impl<T: Scalar> DeltaExpansion<T> {
    pub fn new(n: usize) -> Result<Self, MacdonaldError> {
        if n == 0 {
            return Err(MacdonaldError::EmptyPartition);
        }
        let reduced: Vec<(Partition, SymFunc<T>, QtzPoly<T>, FactorCounts<T>)> = partitions_of(n)
            .into_par_iter()
            .map(|mu| {
                let htilde = hhl_htilde::<T>(&mu)?;
                let (num_factors, den_factors) = {
                    let (mut pi, w) = scalar_factors::<T>(&mu);
                    pi.extend(m_factors());
                    (pi, w)
                };
                let mut sign_negative = false;
                let mut den: FactorCounts<T> = BTreeMap::new();
                for f in den_factors {
                    let (neg, c) = canonical(&f);
                    sign_negative ^= neg;
                    den.entry(c.to_string()).or_insert((c, 0)).1 += 1;
                }
                let mut num = CellAlphabet::new(&mu).sum::<T>();
                for f in num_factors {
                    let (neg, c) = canonical(&f);
                    sign_negative ^= neg;
                    match den.get_mut(&c.to_string()) {
                        Some(entry) if entry.1 > 0 => entry.1 -= 1,
                        _ => num = &num * &c,
                    }
                }
                den.retain(|_, (_, k)| *k > 0);
                if sign_negative {
                    num = -num;
                }
                Ok((mu, htilde, num, den))
            })
            .collect::<Result<_, MacdonaldError>>()?;

        let mut common: FactorCounts<T> = BTreeMap::new();
        for (_, _, _, den) in &reduced {
            for (key, (f, k)) in den {
                let entry = common.entry(key.clone()).or_insert((f.clone(), 0));
                entry.1 = entry.1.max(*k);
            }
        }
        let terms = reduced
            .into_iter()
            .map(|(mu, htilde, mut numerator, den)| {
                for (key, (f, k)) in &common {
                    let own = den.get(key).map_or(0, |e| e.1);
                    for _ in own..*k {
                        numerator = &numerator * f;
                    }
                }
                ExpansionTerm {
                    alphabet: CellAlphabet::new(&mu),
                    mu,
                    htilde,
                    numerator,
                }
            })
            .collect();
        let denominator = common
            .into_values()
            .flat_map(|(f, k)| std::iter::repeat_n(f, k))
            .collect();
        Ok(DeltaExpansion { n, terms, denominator })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `H̃_μ` for every `μ ⊢ n`, in reverse lexicographic order.
    pub fn htildes(&self) -> impl Iterator<Item = (&Partition, &SymFunc<T>)> {
        self.terms.iter().map(|t| (&t.mu, &t.htilde))
    }

    /// `Δ'_{e_k}(e_n)` in the Schur basis, certified to have integer coefficients.
    pub fn apply_ek(&self, k: usize) -> Result<SymFunc<T>, MacdonaldError> {
        if k >= self.n {
            return Err(MacdonaldError::DegreeOutOfRange { k, len: self.n - 1 });
        }
        let weights: Vec<QtzPoly<T>> = self
            .terms
            .iter()
            .map(|t| Ok(&t.alphabet.ek_minus_one::<T>(k)? * &t.numerator))
            .collect::<Result<_, MacdonaldError>>()?;
        let coeffs: Vec<(Partition, QtzPoly<T>)> = partitions_of(self.n)
            .into_par_iter()
            .map(|lambda| {
                let mut total = QtzPoly::zero();
                for (t, w) in self.terms.iter().zip(&weights) {
                    let h = t.htilde.coeff(&lambda);
                    if !h.is_zero() {
                        total += &(w * &h);
                    }
                }
                for f in &self.denominator {
                    total = total.divide_exact(f)?;
                }
                if !total.has_integer_coeffs() {
                    return Err(MacdonaldError::NonIntegral(lambda));
                }
                Ok((lambda, total))
            })
            .collect::<Result<_, MacdonaldError>>()?;
        let mut out = SymFunc::zero(Basis::Schur, self.n);
        for (l, c) in coeffs {
            out.add_term(&l, &c);
        }
        Ok(out)
    }

    /// `Σ_{k=1}^{n} z^{k−1} Δ'_{e_{n−k}}(e_n)`.
    pub fn rhs_series(&self) -> Result<FrobeniusSeries<T>, MacdonaldError> {
        let mut out = FrobeniusSeries::new(self.n);
        for k in 1..=self.n {
            let shift = Exponent::new(0, 0, (k - 1) as u32);
            for (l, c) in self.apply_ek(self.n - k)?.coeffs() {
                out.add(l, &c.mul_monomial(shift, &T::one()));
            }
        }
        Ok(out)
    }
}

/// `Δ'_{e_k}(e_n)` in the Schur basis.
pub fn delta_prime_ek_en<T: Scalar>(n: usize, k: usize) -> Result<SymFunc<T>, MacdonaldError> {
    DeltaExpansion::new(n)?.apply_ek(k)
}

/// `Δ'_{e_{n−1} + z e_{n−2} + ⋯ + z^{n−1}}(e_n)` as a Schur expansion.
pub fn rhs_series<T: Scalar>(n: usize) -> Result<FrobeniusSeries<T>, MacdonaldError> {
    DeltaExpansion::new(n)?.rhs_series()
}
