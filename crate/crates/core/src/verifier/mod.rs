//! Computes both sides of the conjecture for one `n`, compares them and
//! reports.

mod cache;
mod render;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coinvariants::{
    default_max_band, explore_module, CharacterStore, CoinvariantError, ExploreOptions, ModuleEngine,
    ModuleExploration, RowSummary,
};
use crate::combinatorics::Partition;
use crate::exactalg::Scalar;
use crate::frobenius::{FrobeniusSeries, Specialization};
use crate::macdonald::{Basis, DeltaExpansion, MacdonaldError, SymFunc};
use crate::superring::TriDegree;
use crate::{QtzPolynomial, Rational};

pub use cache::{CacheEntry, CharacterCache, CACHE_SCHEMA_VERSION, ENGINE_VERSION};
pub use render::{render_report, ReportFormat};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("series for n = {0} and n = {1} cannot be compared")]
    MismatchedN(usize, usize),
    #[error("n must be at least 1")]
    InvalidN,
    #[error(transparent)]
    Module(#[from] CoinvariantError),
    #[error(transparent)]
    Macdonald(#[from] MacdonaldError),
    #[error("cannot build worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "EQUAL")]
    Equal,
    #[serde(rename = "DIFFER")]
    Differ,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Equal => 0,
            Verdict::Differ => 1,
            Verdict::Inconclusive => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "EQUAL",
            Verdict::Differ => "DIFFER",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

mod poly_text {
    use super::QtzPolynomial;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &QtzPolynomial, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(p)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<QtzPolynomial, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// One Schur coefficient on which the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub lambda: Partition,
    #[serde(with = "poly_text")]
    pub lhs: QtzPolynomial,
    #[serde(with = "poly_text")]
    pub rhs: QtzPolynomial,
    /// `lhs − rhs`.
    #[serde(with = "poly_text")]
    pub difference: QtzPolynomial,
}

/// Per-λ differences, including λ present on one side only.
pub fn compare_series<T: Scalar>(
    lhs: &FrobeniusSeries<T>,
    rhs: &FrobeniusSeries<T>,
) -> Result<Vec<(Partition, crate::exactalg::QtzPoly<T>, crate::exactalg::QtzPoly<T>)>, VerifyError> {
    if lhs.n() != rhs.n() {
        return Err(VerifyError::MismatchedN(lhs.n(), rhs.n()));
    }
    let keys: BTreeSet<&Partition> = lhs.coeffs().keys().chain(rhs.coeffs().keys()).collect();
    Ok(keys
        .into_iter()
        .filter_map(|l| {
            let (a, b) = (lhs.coeff(l), rhs.coeff(l));
            (a != b).then(|| (l.clone(), a, b))
        })
        .collect())
}

fn diff_entries(lhs: &FrobeniusSeries<Rational>, rhs: &FrobeniusSeries<Rational>) -> Result<Vec<DiffEntry>, VerifyError> {
    Ok(compare_series(lhs, rhs)?
        .into_iter()
        .map(|(lambda, a, b)| DiffEntry {
            difference: &a - &b,
            lambda,
            lhs: a,
            rhs: b,
        })
        .collect())
}

/// A pass/fail property evaluated during verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl NamedCheck {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        NamedCheck {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Both sides under the standard specializations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationSummary {
    /// `z = 0, q = t = 1`.
    pub module_z0_dimension: String,
    pub rhs_z0_dimension: String,
    /// `q = t = z = 1`.
    pub module_total_dimension: String,
    pub rhs_total_dimension: String,
    pub module_t0: FrobeniusSeries<Rational>,
    pub rhs_t0: FrobeniusSeries<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentStatistics {
    pub components_examined: usize,
    pub nonzero_components: usize,
    pub largest_ring_component: usize,
    pub rows: Vec<RowSummary>,
}

/// Wall-clock timings; present only when requested, since they vary by run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub rhs_seconds: f64,
    pub module_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub engine_version: String,
    pub extra_band: usize,
    pub max_band: usize,
    pub verdict: Verdict,
    /// Why the verdict is not EQUAL.
    pub reasons: Vec<String>,
    pub diffs: Vec<DiffEntry>,
    pub checks: Vec<NamedCheck>,
    pub module: FrobeniusSeries<Rational>,
    pub rhs: FrobeniusSeries<Rational>,
    pub summary: SpecializationSummary,
    pub statistics: ComponentStatistics,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub extra_band: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub budget: Option<Duration>,
    /// Defaults to [`default_max_band`].
    pub max_band: Option<usize>,
    pub record_timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            extra_band: 1,
            threads: None,
            cache_dir: None,
            budget: None,
            max_band: None,
            record_timings: false,
        }
    }
}

/// Runs `f` on a pool of `threads` workers, or on the global pool.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, VerifyError> {
    match threads {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| VerifyError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn specialized_dimension(f: &FrobeniusSeries<Rational>, spec: Option<Specialization>) -> String {
    match spec {
        Some(s) => f.specialize(s).total_dimension().to_string(),
        None => f.total_dimension().to_string(),
    }
}

fn z0_dimension(f: &FrobeniusSeries<Rational>) -> String {
    f.specialize(Specialization::ZEqualsZero)
        .specialize(Specialization::QEqualsTEqualsOne)
        .total_dimension()
        .to_string()
}

/// Tri-degrees `(a, b, c)` with a nonzero `q^a t^b z^c` term in some coefficient.
pub fn support(f: &FrobeniusSeries<Rational>) -> BTreeSet<TriDegree> {
    f.coeffs()
        .values()
        .flat_map(|p| p.terms().map(|(e, _)| TriDegree::new(e.q as usize, e.t as usize, e.z as usize)))
        .collect()
}

fn top_z_is_column(f: &FrobeniusSeries<Rational>) -> bool {
    let n = f.n();
    let top = f.z_slice(n as u32 - 1);
    top.coeffs().len() == 1 && top.coeff(&Partition::column(n)).is_one()
}

fn module_checks(n: usize, explored: &ModuleExploration, module: &FrobeniusSeries<Rational>) -> Vec<NamedCheck> {
    let dims_consistent = explored.components.values().all(|ch| {
        ch.dim <= ch.ring_dim && ch.values.get(&Partition::column(n)) == Some(&(ch.dim as i64))
    });
    let c_n_zero = explored
        .components
        .values()
        .filter(|ch| ch.degree.c == n)
        .all(|ch| ch.dim == 0);
    let violations: Vec<String> = explored
        .rows
        .iter()
        .flat_map(|r| r.violations.iter().map(|d| d.to_string()))
        .collect();
    vec![
        NamedCheck::new(
            "frontier_closed",
            explored.is_complete(),
            explored
                .rows
                .iter()
                .map(|r| format!("c={}:{}", r.c, r.zero_band.map_or("open".to_string(), |k| k.to_string())))
                .collect::<Vec<_>>()
                .join(" "),
        ),
        NamedCheck::new("extra_band_zero", violations.is_empty(), violations.join(" ")),
        NamedCheck::new("character_dimension", dims_consistent, "chi(1^n) = dim R - rank I"),
        NamedCheck::new("top_theta_degree_zero", c_n_zero, format!("c = {n}")),
        NamedCheck::new("module_integral", module.has_integer_coeffs(), ""),
        NamedCheck::new("module_schur_positive", module.is_schur_positive(), ""),
        NamedCheck::new("module_top_z_is_e_n", top_z_is_column(module), format!("z^{}", n - 1)),
    ]
}

/// Computes the right-hand side, explores the module, and compares.
pub fn verify_conjecture(n: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    if n == 0 {
        return Err(VerifyError::InvalidN);
    }
    with_threads(opts.threads, || verify_in_pool(n, opts))?
}

fn verify_in_pool(n: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let deadline = opts.budget.map(|b| started + b);
    let expansion = DeltaExpansion::<Rational>::new(n)?;
    let forced = expansion.apply_ek(0)?;
    let rhs = expansion.rhs_series()?;
    let rhs_seconds = started.elapsed().as_secs_f64();

    let module_started = Instant::now();
    let max_band = opts.max_band.unwrap_or_else(|| default_max_band(n));
    let engine = ModuleEngine::<Rational>::new(n);
    let explore_opts = ExploreOptions {
        extra_band: opts.extra_band,
        max_band,
        deadline,
    };
    let cache = opts.cache_dir.as_ref().map(CharacterCache::new);
    let explored = explore_module(&engine, &explore_opts, cache.as_ref().map(|c| c as &dyn CharacterStore))?;
    let module = explored.frobenius::<Rational>()?;
    let module_seconds = module_started.elapsed().as_secs_f64();

    let diffs = diff_entries(&module, &rhs)?;
    let missing: Vec<TriDegree> = support(&rhs)
        .into_iter()
        .filter(|d| !explored.components.contains_key(d))
        .collect();

    let mut reasons = Vec::new();
    for r in &explored.rows {
        match r.status {
            crate::coinvariants::RowStatus::Closed => {}
            crate::coinvariants::RowStatus::BandLimit => {
                reasons.push(format!("row c={} did not close by band {max_band}", r.c))
            }
            crate::coinvariants::RowStatus::Deadline => reasons.push(format!("budget exhausted in row c={}", r.c)),
        }
        if !r.violations.is_empty() {
            reasons.push(format!("row c={} has nonzero components past a zero band", r.c));
        }
    }
    if explored.rows.len() < n + 1 {
        reasons.push(format!("rows c={}..={n} not examined", explored.rows.len()));
    }
    if !missing.is_empty() {
        reasons.push(format!(
            "right-hand side degrees not examined on the module side: {}",
            missing.iter().map(|d| format!("({d})")).collect::<Vec<_>>().join(" ")
        ));
    }
    let verdict = if !reasons.is_empty() {
        Verdict::Inconclusive
    } else if diffs.is_empty() {
        Verdict::Equal
    } else {
        reasons.push(format!("{} Schur coefficients differ", diffs.len()));
        Verdict::Differ
    };

    let mut checks = vec![
        NamedCheck::new("rhs_support_examined", missing.is_empty(), format!("{} degrees", support(&rhs).len())),
        NamedCheck::new(
            "forced_identity",
            forced == SymFunc::basis_element(Basis::Schur, &Partition::column(n)),
            "Delta'_{e_0}(e_n) = s_{1^n}",
        ),
        NamedCheck::new("rhs_integral", rhs.has_integer_coeffs(), ""),
        NamedCheck::new("rhs_schur_positive", rhs.is_schur_positive(), ""),
        NamedCheck::new("rhs_top_z_is_e_n", top_z_is_column(&rhs), format!("z^{}", n - 1)),
    ];
    checks.extend(module_checks(n, &explored, &module));
    let expected_z0 = Rational::from_int((n as i64 + 1).pow(n as u32 - 1));
    for (name, side) in [("module_z0_dimension", &module), ("rhs_z0_dimension", &rhs)] {
        let got = z0_dimension(side);
        checks.push(NamedCheck::new(
            name,
            got == expected_z0.to_string(),
            format!("{got} vs (n+1)^(n-1) = {expected_z0}"),
        ));
    }

    let summary = SpecializationSummary {
        module_z0_dimension: z0_dimension(&module),
        rhs_z0_dimension: z0_dimension(&rhs),
        module_total_dimension: specialized_dimension(&module, None),
        rhs_total_dimension: specialized_dimension(&rhs, None),
        module_t0: module.specialize(Specialization::TEqualsZero),
        rhs_t0: rhs.specialize(Specialization::TEqualsZero),
    };
    let statistics = ComponentStatistics {
        components_examined: explored.components.len(),
        nonzero_components: explored.nonzero().count(),
        largest_ring_component: explored.components.values().map(|c| c.ring_dim).max().unwrap_or(0),
        rows: explored.rows.clone(),
    };
    debug_assert!(verdict != Verdict::Equal || diffs.iter().all(|d| d.difference.is_zero()));
    Ok(VerificationReport {
        n,
        engine_version: ENGINE_VERSION.to_string(),
        extra_band: opts.extra_band,
        max_band,
        verdict,
        reasons,
        diffs,
        checks,
        module,
        rhs,
        summary,
        statistics,
        timings: opts.record_timings.then_some(Timings {
            rhs_seconds,
            module_seconds,
        }),
    })
}

#[cfg(test)]
mod tests;
