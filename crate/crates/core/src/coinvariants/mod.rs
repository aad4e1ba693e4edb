//! The super-diagonal coinvariant module `M_n = R_n / I_n` and its graded
//! `S_n`-characters.

mod engine;
mod reference;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{z_mu, CharacterTable, Partition, Permutation};
use crate::exactalg::{ExactAlgError, QtzPoly, Scalar};
use crate::frobenius::FrobeniusSeries;
use crate::superring::{component_dim, TriDegree};

pub use engine::{ComponentNf, ModuleEngine};
pub use reference::{ideal_component, IdealComponentBasis};

#[derive(Debug, Error)]
pub enum CoinvariantError {
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
    #[error("character value {value} at degree {degree} is not an integer")]
    NonIntegralCharacter { degree: TriDegree, value: String },
    #[error("coefficient of s({lambda}) at degree {degree} is not an integer: {value}")]
    NonIntegralFrobenius {
        lambda: Partition,
        degree: TriDegree,
        value: String,
    },
    #[error("support exploration for n = {0} did not close")]
    Incomplete(usize),
}

/// The character of `S_n` on one component of the quotient, by cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientCharacter {
    pub n: usize,
    pub degree: TriDegree,
    pub ring_dim: usize,
    pub dim: usize,
    pub values: BTreeMap<Partition, i64>,
}

impl QuotientCharacter {
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
}

fn to_i64<T: Scalar>(v: &T, degree: TriDegree) -> Result<i64, CoinvariantError> {
    v.to_bigint()
        .and_then(|b| i64::try_from(b).ok())
        .ok_or_else(|| CoinvariantError::NonIntegralCharacter {
            degree,
            value: v.to_string(),
        })
}

/// Number of `e ∈ ℕ^k` with `Σ lens_i e_i = a`.
fn weighted_compositions(lens: &[usize], a: usize) -> i64 {
    let mut ways = vec![0i64; a + 1];
    ways[0] = 1;
    for &l in lens {
        for s in l..=a {
            ways[s] += ways[s - l];
        }
    }
    ways[a]
}

/// Trace of `σ` on `R_n^{(a,b,c)}`, from the cycle type of `σ`.
///
/// Fixed monomials are constant on cycles; the θ-part of a cycle of length
/// `ℓ` contributes `(-1)^{ℓ-1}` when included.
pub fn trace_regular(sigma: &Permutation, d: TriDegree) -> i64 {
    let lens: Vec<usize> = sigma.cycle_type().parts().to_vec();
    let mut theta = vec![0i64; d.c + 1];
    theta[0] = 1;
    for &l in &lens {
        let sign = if l % 2 == 1 { 1 } else { -1 };
        for s in (l..=d.c).rev() {
            theta[s] += sign * theta[s - l];
        }
    }
    weighted_compositions(&lens, d.a) * weighted_compositions(&lens, d.b) * theta[d.c]
}

/// `tr_{M_n^{(a,b,c)}}(σ)` by the reference route: regular trace minus the
/// restricted trace on the ideal component.
pub fn character_quotient<T: Scalar>(sigma: &Permutation, d: TriDegree) -> Result<i64, CoinvariantError> {
    let ideal = ideal_component::<T>(sigma.degree(), d);
    let t = ideal.trace(sigma)?;
    Ok(trace_regular(sigma, d) - to_i64(&t, d)?)
}

/// Quotient character from a normal-form component.
pub fn component_character<T: Scalar>(n: usize, comp: &ComponentNf<T>) -> Result<QuotientCharacter, CoinvariantError> {
    let table = CharacterTable::for_n(n);
    let mut values = BTreeMap::new();
    for mu in table.partitions() {
        let v = if comp.dim() == 0 {
            0
        } else {
            to_i64(&comp.trace(&Permutation::of_cycle_type(mu)), comp.degree())?
        };
        values.insert(mu.clone(), v);
    }
    Ok(QuotientCharacter {
        n,
        degree: comp.degree(),
        ring_dim: comp.ring_dim(),
        dim: comp.dim(),
        values,
    })
}

/// Persistent storage for computed characters.
pub trait CharacterStore: Sync {
    fn load(&self, n: usize, d: TriDegree) -> Option<QuotientCharacter>;
    fn store(&self, ch: &QuotientCharacter);
}

#[derive(Debug, Clone)]
pub struct ExploreOptions {
    /// Bands past the first all-zero band that are also computed and must vanish.
    pub extra_band: usize,
    /// Largest band `a + b` examined in any row.
    pub max_band: usize,
    pub deadline: Option<Instant>,
}

impl ExploreOptions {
    pub fn for_n(n: usize) -> Self {
        ExploreOptions {
            extra_band: 1,
            max_band: default_max_band(n),
            deadline: None,
        }
    }
}

/// `binom(n, 2) + n`.
pub fn default_max_band(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2 + n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Closed,
    BandLimit,
    Deadline,
}

/// Outcome of scanning one row `c` of the support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSummary {
    pub c: usize,
    pub status: RowStatus,
    /// First band `k` with `M^{(a, k-a, c)} = 0` for all `a`.
    pub zero_band: Option<usize>,
    /// Nonzero components found in bands after a zero band.
    pub violations: Vec<TriDegree>,
}

/// Every computed component, plus how each row ended.
#[derive(Debug, Clone)]
pub struct ModuleExploration {
    pub n: usize,
    pub components: BTreeMap<TriDegree, QuotientCharacter>,
    pub rows: Vec<RowSummary>,
}

impl ModuleExploration {
    /// All rows closed and no component vanished before a nonzero one.
    pub fn is_complete(&self) -> bool {
        self.rows.len() == self.n + 1
            && self
                .rows
                .iter()
                .all(|r| r.status == RowStatus::Closed && r.violations.is_empty())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &QuotientCharacter> {
        self.components.values().filter(|c| !c.is_zero())
    }

    /// `Σ dim M^{(a,b,c)} q^a t^b z^c`.
    pub fn hilbert_series<T: Scalar>(&self) -> QtzPoly<T> {
        let mut h = QtzPoly::zero();
        for ch in self.nonzero() {
            let d = ch.degree;
            h.add_term(mono(d), T::from_int(ch.dim as i64));
        }
        h
    }

    /// `Σ_d q^a t^b z^c Σ_λ ⟨χ_d, χ^λ⟩ s_λ`; every multiplicity must be an integer.
    pub fn frobenius<T: Scalar>(&self) -> Result<FrobeniusSeries<T>, CoinvariantError> {
        let table = CharacterTable::for_n(self.n);
        let mut out = FrobeniusSeries::new(self.n);
        for ch in self.nonzero() {
            for lambda in table.partitions() {
                let mut m = T::zero();
                for (mu, v) in &ch.values {
                    let num = *v * table.value(lambda, mu);
                    m += T::from_ratio(num, z_mu(mu) as i64);
                }
                if !m.is_integer() {
                    return Err(CoinvariantError::NonIntegralFrobenius {
                        lambda: lambda.clone(),
                        degree: ch.degree,
                        value: m.to_string(),
                    });
                }
                if !m.is_zero() {
                    let mut p = QtzPoly::zero();
                    p.add_term(mono(ch.degree), m);
                    out.add(lambda, &p);
                }
            }
        }
        Ok(out)
    }
}

fn mono(d: TriDegree) -> crate::exactalg::Exponent {
    crate::exactalg::Exponent::new(d.a as u32, d.b as u32, d.c as u32)
}

/// Fetches a character from the store or computes it with the engine.
fn obtain<T: Scalar>(
    engine: &ModuleEngine<T>,
    store: Option<&dyn CharacterStore>,
    d: TriDegree,
) -> Result<QuotientCharacter, CoinvariantError> {
    let n = engine.n();
    if let Some(ch) = store.and_then(|s| s.load(n, d)) {
        if ch.n == n && ch.degree == d && ch.ring_dim == component_dim(n, d) {
            return Ok(ch);
        }
    }
    let ch = component_character(n, &engine.component(d))?;
    if let Some(s) = store {
        s.store(&ch);
    }
    Ok(ch)
}

/// Scans rows `c = 0..=n`; within a row, bands `k = a + b` increase until a
/// band vanishes, then `extra_band` further bands are checked.
///
/// Components of one band are computed in parallel on the current rayon pool.
pub fn explore_module<T: Scalar>(
    engine: &ModuleEngine<T>,
    opts: &ExploreOptions,
    store: Option<&dyn CharacterStore>,
) -> Result<ModuleExploration, CoinvariantError> {
    let n = engine.n();
    let mut components = BTreeMap::new();
    let mut rows = Vec::new();
    for c in 0..=n {
        let mut summary = RowSummary {
            c,
            status: RowStatus::BandLimit,
            zero_band: None,
            violations: Vec::new(),
        };
        let mut k = 0;
        let mut confirm_until: Option<usize> = None;
        while k <= opts.max_band || confirm_until.is_some() {
            if opts.deadline.is_some_and(|t| Instant::now() >= t) {
                summary.status = RowStatus::Deadline;
                break;
            }
            let band: Vec<QuotientCharacter> = (0..=k)
                .into_par_iter()
                .map(|a| obtain(engine, store, TriDegree::new(a, k - a, c)))
                .collect::<Result<_, _>>()?;
            let band_zero = band.iter().all(QuotientCharacter::is_zero);
            for ch in band {
                components.insert(ch.degree, ch);
            }
            match (confirm_until, band_zero) {
                (None, true) => {
                    summary.zero_band = Some(k);
                    confirm_until = Some(k + opts.extra_band);
                }
                (Some(_), false) => {
                    summary.violations.extend(
                        (0..=k)
                            .map(|a| TriDegree::new(a, k - a, c))
                            .filter(|d| !components[d].is_zero()),
                    );
                    summary.zero_band = None;
                    confirm_until = None;
                }
                _ => {}
            }
            if confirm_until == Some(k) {
                summary.status = RowStatus::Closed;
                break;
            }
            k += 1;
        }
        rows.push(summary);
        // only rows c and c + 1 are consulted from here on
        engine.retain(|d| d.c >= c);
        if rows.last().is_some_and(|r| r.status == RowStatus::Deadline) {
            break;
        }
    }
    Ok(ModuleExploration { n, components, rows })
}

/// The graded Frobenius series of `M_n`, by exhaustive exploration.
pub fn frobenius_module<T: Scalar>(n: usize) -> Result<FrobeniusSeries<T>, CoinvariantError> {
    let engine = ModuleEngine::<T>::new(n);
    let explored = explore_module(&engine, &ExploreOptions::for_n(n), None)?;
    if !explored.is_complete() {
        return Err(CoinvariantError::Incomplete(n));
    }
    explored.frobenius()
}

/// Whether every permutation in `perms` maps the ideal component at `d` into itself.
pub fn ideal_is_stable<T: Scalar>(engine: &ModuleEngine<T>, d: TriDegree, perms: &[Permutation]) -> bool {
    let comp = engine.component(d);
    perms.iter().all(|s| comp.is_stable_under(s))
}

#[cfg(test)]
mod tests;
