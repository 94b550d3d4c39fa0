//! Reconciled bounds for `TC_k(L^{2n+1}_m)`.
//!
//! The lower bound comes from the certificate search, the upper bound is
//! `k(2n+1)`. The exactness rules are evaluated separately from the search
//! (through `α_p` digits rather than carry counts) and any rule that fires
//! must agree with the search; disagreement marks the report inconsistent.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{lens_upper, BoundFact};
use crate::certificates::{lower_bound, Certificate, Verification, VerifyMode};
use crate::error::{Error, Result};
use crate::graded_ring::{RingSpec, DEFAULT_MONOMIAL_LIMIT};
use crate::modarith::{alpha_p, alpha_p_crosscheck, divides_binomial_power, factorize, is_prime};

/// Default cap on the number of rows in a table.
pub const DEFAULT_MAX_ROWS: u64 = 100_000;

/// Criteria under which `TC_k(L^{2n+1}_m) = k(2n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactnessRule {
    /// `m ∤ C(2n, n)^{⌊k/2⌋}`.
    CentralBinomial,
    /// `p^{α_p(n)⌊k/2⌋ + 1} | m` for some prime `p`.
    PrimePower,
    /// `m = p` an odd prime and every base-p digit of `n` is at most `(p−1)/2`.
    SmallDigits,
    /// `m = 2^r` and `α_2(n)⌊k/2⌋ ≤ r − 1`.
    TwoPower,
    /// `n = 1` and `m ≥ 3`.
    ThreeDimensional,
}

impl ExactnessRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExactnessRule::CentralBinomial => "central_binomial",
            ExactnessRule::PrimePower => "prime_power",
            ExactnessRule::SmallDigits => "small_digits",
            ExactnessRule::TwoPower => "two_power",
            ExactnessRule::ThreeDimensional => "three_dimensional",
        }
    }
}

pub fn exact_by_binomial(n: u32, m: u64, k: u32) -> bool {
    !divides_binomial_power(m, u64::from(n), u64::from(n), u64::from(k / 2))
}

pub fn exact_by_prime_power(n: u32, m: u64, k: u32) -> Result<bool> {
    let t = u64::from(k / 2);
    for (p, e) in factorize(m)?.iter() {
        let needed = u64::from(alpha_p(u64::from(n), p)?) * t + 1;
        if needed <= u64::from(e) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every base-p digit of `n` is at most `(p−1)/2`. `p` must be an odd prime.
pub fn exact_small_digits(n: u32, p: u64, _k: u32) -> Result<bool> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not an odd prime")));
    }
    let half = (p - 1) / 2;
    let mut rest = u64::from(n);
    while rest > 0 {
        if rest % p > half {
            return Ok(false);
        }
        rest /= p;
    }
    Ok(true)
}

/// `α_2(n)·⌊k/2⌋ ≤ r − 1` for `m = 2^r`.
pub fn exact_two_power(n: u32, r: u32, k: u32) -> bool {
    let alpha = u64::from(alpha_p(u64::from(n), 2).expect("2 is prime"));
    r >= 1 && alpha * u64::from(k / 2) < u64::from(r)
}

/// Rules whose hypotheses hold for `(n, m, k)`.
pub fn exactness_rules(n: u32, m: u64, k: u32) -> Result<Vec<ExactnessRule>> {
    let factorization = factorize(m)?;
    let mut fired = Vec::new();
    if exact_by_binomial(n, m, k) {
        fired.push(ExactnessRule::CentralBinomial);
    }
    if exact_by_prime_power(n, m, k)? {
        fired.push(ExactnessRule::PrimePower);
    }
    if let Some(p) = factorization.as_prime().filter(|&p| p >= 3) {
        if exact_small_digits(n, p, k)? {
            fired.push(ExactnessRule::SmallDigits);
        }
    }
    if let Some((2, r)) = factorization.as_prime_power() {
        if exact_two_power(n, r, k) {
            fired.push(ExactnessRule::TwoPower);
        }
    }
    if n == 1 && m >= 3 {
        fired.push(ExactnessRule::ThreeDimensional);
    }
    Ok(fired)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub verify: VerifyMode,
    pub monomial_limit: u64,
    pub max_rows: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            verify: VerifyMode::Auto,
            monomial_limit: DEFAULT_MONOMIAL_LIMIT,
            max_rows: DEFAULT_MAX_ROWS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerSide {
    pub value: u64,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperSide {
    pub value: u64,
    pub source: BoundFact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u32,
    pub m: u64,
    pub k: u32,
    pub lower: LowerSide,
    pub upper: UpperSide,
    pub exact: Option<u64>,
    pub theorems_fired: Vec<ExactnessRule>,
    pub regime: Option<String>,
    pub consistent: bool,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// `Err` when the report was marked inconsistent.
    pub fn ensure_consistent(&self) -> Result<()> {
        if self.consistent {
            Ok(())
        } else {
            Err(Error::Inconsistent(format!(
                "n={}, m={}, k={}: {}",
                self.n,
                self.m,
                self.k,
                self.notes.join("; ")
            )))
        }
    }
}

/// Bounds and exactness for `TC_k(L^{2n+1}_m)`.
pub fn report(n: u32, m: u64, k: u32, opts: &ReportOptions) -> Result<BoundReport> {
    if k < 2 {
        return Err(Error::Domain("k must be >= 2".into()));
    }
    let spec = RingSpec::new(n, m, k)?.with_limit(opts.monomial_limit);
    let lb = lower_bound(&spec, opts.verify)?;
    let upper = BoundFact::lens_free_circle(n, k)?;
    debug_assert_eq!(upper.value, lens_upper(n, k));
    let fired = exactness_rules(n, m, k)?;

    let mut notes = Vec::new();
    let mut consistent = true;
    if lb.bound > upper.value {
        consistent = false;
        notes.push(format!(
            "lower bound {} exceeds upper bound {}",
            lb.bound, upper.value
        ));
    }
    if lb.best.verification == Verification::Failed {
        consistent = false;
        notes.push(format!(
            "certificate product for (l, l') = ({}, {}) expanded to zero",
            lb.best.l, lb.best.l_prime
        ));
    }
    for rule in &fired {
        if lb.bound != upper.value {
            consistent = false;
            notes.push(format!(
                "rule {} predicts {} but the best certificate reaches {}",
                rule.as_str(),
                upper.value,
                lb.bound
            ));
        }
    }
    for (p, _) in factorize(m)?.iter() {
        if let Err(mismatch) = alpha_p_crosscheck(u64::from(n), p)? {
            notes.push(format!(
                "alpha_{p}({n}): digit formula {} vs carry count {}",
                mismatch.digit_formula, mismatch.carry_count
            ));
        }
    }
    if lb.best.verification == Verification::Skipped {
        notes.push("certificate rests on divisibility evidence only".into());
    }

    let exact = (lb.bound == upper.value).then_some(lb.bound);
    Ok(BoundReport {
        n,
        m,
        k,
        lower: LowerSide {
            value: lb.bound,
            certificate: lb.best,
        },
        upper: UpperSide {
            value: upper.value,
            source: upper,
        },
        exact,
        theorems_fired: fired,
        regime: (k == 2).then(|| "Farber–Grant regime (k = 2)".to_owned()),
        consistent,
        notes,
    })
}

/// One report per `(n, m, k)` in lexicographic order. Rows are computed in
/// parallel; empty ranges give an empty table.
pub fn table(
    n_range: RangeInclusive<u32>,
    m_range: RangeInclusive<u64>,
    k_range: RangeInclusive<u32>,
    opts: &ReportOptions,
) -> Result<Vec<BoundReport>> {
    let count = |lo: u64, hi: u64| {
        if hi < lo {
            0u128
        } else {
            u128::from(hi - lo) + 1
        }
    };
    let rows = count(u64::from(*n_range.start()), u64::from(*n_range.end()))
        * count(*m_range.start(), *m_range.end())
        * count(u64::from(*k_range.start()), u64::from(*k_range.end()));
    if rows > u128::from(opts.max_rows) {
        return Err(Error::RangeTooLarge {
            rows,
            limit: opts.max_rows,
        });
    }
    let triples: Vec<(u32, u64, u32)> = n_range
        .flat_map(|n| {
            let k_range = k_range.clone();
            m_range
                .clone()
                .flat_map(move |m| k_range.clone().map(move |k| (n, m, k)))
        })
        .collect();
    triples
        .into_par_iter()
        .map(|(n, m, k)| report(n, m, k, opts))
        .collect()
}

pub const CSV_HEADER: &str = "n,m,k,lower,upper,exact,l,l_prime,verified,theorems";

pub fn csv_row(r: &BoundReport) -> String {
    let theorems: Vec<&str> = r.theorems_fired.iter().map(ExactnessRule::as_str).collect();
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        r.n,
        r.m,
        r.k,
        r.lower.value,
        r.upper.value,
        r.exact.map(|e| e.to_string()).unwrap_or_default(),
        r.lower.certificate.l,
        r.lower.certificate.l_prime,
        r.lower.certificate.verification.as_str(),
        theorems.join(";")
    )
}

/// Header plus one line per report, newline-terminated.
pub fn to_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.lower.certificate;
        write!(
            f,
            "TC_{}(L^{}_{}): lower {}, upper {}",
            self.k,
            2 * self.n + 1,
            self.m,
            self.lower.value,
            self.upper.value
        )?;
        match self.exact {
            Some(e) => writeln!(f, ", exact {e}")?,
            None => writeln!(f, ", open")?,
        }
        writeln!(
            f,
            "  certificate: (l, l') = ({}, {}), weight {}, {:?} branch, {}",
            c.l,
            c.l_prime,
            c.weight_total,
            c.branch,
            c.verification.as_str()
        )?;
        if let Some(w) = &c.witness {
            writeln!(f, "  witness: {}·({})", w.coefficient, w.monomial)?;
        }
        writeln!(f, "  upper bound source: {:?}", self.upper.source.kind)?;
        if !self.theorems_fired.is_empty() {
            let names: Vec<&str> = self
                .theorems_fired
                .iter()
                .map(ExactnessRule::as_str)
                .collect();
            writeln!(f, "  exactness rules: {}", names.join(", "))?;
        }
        if let Some(regime) = &self.regime {
            writeln!(f, "  {regime}")?;
        }
        if !self.consistent {
            writeln!(f, "  INCONSISTENT")?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}
