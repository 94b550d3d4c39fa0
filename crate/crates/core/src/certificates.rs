//! Zero-divisor certificates for lower bounds on `TC_k(L^{2n+1}_m)`.
//!
//! For `2 ≤ i ≤ k` the classes
//!
//! * `X̄_i = p_i^*(x) − p_1^*(x)` (degree 1, weight 1),
//! * `ȳ_i = p_i^*(y) − p_{i−1}^*(y)` (degree 2, weight 2),
//! * `z̄ = p_k^*(y) − p_1^*(y)` (degree 2, weight 2)
//!
//! all restrict to zero on the diagonal. With `k' = ⌊k/2⌋` and `s = l + l'`,
//! the certificate product is `∏_{i=2}^{k} X̄_i · ∏_{i=1}^{k'} ȳ_{2i}^s`,
//! times `z̄^n` when `k` is odd. Whenever `m ∤ C(s, l')^{k'}` this product is
//! nonzero, and its weight plus one bounds `TC_k` from below.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded_ring::{Factor, Generator, Monomial, RingSpec, TensorElement};
use crate::modarith::{divides_with, divisibility_evidence, factorize, DivisibilityEvidence};

/// Predicted dense size up to which `VerifyMode::Auto` expands the product.
pub const AUTO_VERIFY_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Even,
    Odd,
}

impl Branch {
    pub fn of(k: u32) -> Self {
        if k.is_multiple_of(2) {
            Branch::Even
        } else {
            Branch::Odd
        }
    }
}

/// Outcome of expanding the certificate product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verification {
    /// The expanded product is nonzero.
    Verified,
    /// Not expanded; the certificate rests on the divisibility evidence alone.
    Skipped,
    /// The expanded product is zero.
    Failed,
}

impl Verification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verification::Verified => "verified",
            Verification::Skipped => "skipped",
            Verification::Failed => "failed",
        }
    }
}

/// When to expand certificate products symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VerifyMode {
    /// Expand when the dense monomial count is at most [`AUTO_VERIFY_LIMIT`].
    #[default]
    Auto,
    /// Always expand; sizing errors propagate.
    Always,
    Never,
}

impl VerifyMode {
    fn should_verify(self, spec: &RingSpec) -> bool {
        match self {
            VerifyMode::Always => true,
            VerifyMode::Never => false,
            VerifyMode::Auto => {
                spec.dense_monomial_count() <= AUTO_VERIFY_LIMIT && spec.check_guard().is_ok()
            }
        }
    }
}

fn require_index(spec: &RingSpec, i: u32) -> Result<()> {
    if (2..=spec.k()).contains(&i) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "class index {i} outside 2..={}",
            spec.k()
        )))
    }
}

fn require_pair(spec: &RingSpec, l: u32, l_prime: u32) -> Result<()> {
    if spec.k() < 2 {
        return Err(Error::domain("certificates need k >= 2"));
    }
    if l > spec.n() || l_prime > spec.n() {
        return Err(Error::domain(format!(
            "(l, l') = ({l}, {l_prime}) outside [0, {}]^2",
            spec.n()
        )));
    }
    Ok(())
}

/// `X̄_i = p_i^*(x) − p_1^*(x)`.
pub fn xbar(spec: &RingSpec, i: u32) -> Result<TensorElement> {
    require_index(spec, i)?;
    TensorElement::pullback(*spec, i, Generator::X)?.sub(&TensorElement::pullback(
        *spec,
        1,
        Generator::X,
    )?)
}

/// `ȳ_i = p_i^*(y) − p_{i−1}^*(y)`.
pub fn ybar(spec: &RingSpec, i: u32) -> Result<TensorElement> {
    require_index(spec, i)?;
    TensorElement::pullback(*spec, i, Generator::Y)?.sub(&TensorElement::pullback(
        *spec,
        i - 1,
        Generator::Y,
    )?)
}

/// `z̄ = p_k^*(y) − p_1^*(y)`.
pub fn zbar(spec: &RingSpec) -> Result<TensorElement> {
    if spec.k() < 2 {
        return Err(Error::domain("zbar needs k >= 2"));
    }
    TensorElement::pullback(*spec, spec.k(), Generator::Y)?.sub(&TensorElement::pullback(
        *spec,
        1,
        Generator::Y,
    )?)
}

/// Fully expanded certificate product for the pair `(l, l')`.
pub fn certificate_product(spec: &RingSpec, l: u32, l_prime: u32) -> Result<TensorElement> {
    require_pair(spec, l, l_prime)?;
    spec.check_guard()?;
    let k = spec.k();
    let s = u64::from(l + l_prime);
    let mut acc = TensorElement::one(*spec)?;
    for i in 2..=k {
        acc = acc.mul(&xbar(spec, i)?)?;
    }
    for i in 1..=k / 2 {
        if acc.is_zero() {
            return Ok(acc);
        }
        acc = acc.mul(&ybar(spec, 2 * i)?.pow(s)?)?;
    }
    if k % 2 == 1 && !acc.is_zero() {
        acc = acc.mul(&zbar(spec)?.pow(u64::from(spec.n()))?)?;
    }
    Ok(acc)
}

/// The term whose coefficient is `±C(l+l', l')^{k'}`:
/// `y^l ⊗ x·y^{l'} ⊗ x·y^l ⊗ … ⊗ x·y^{l'}`, ending in `x·y^n` when `k` is odd.
pub fn leading_term(spec: &RingSpec, l: u32, l_prime: u32) -> Result<Monomial> {
    require_pair(spec, l, l_prime)?;
    let k = spec.k();
    let factors: Vec<Factor> = (1..=k)
        .map(|pos| {
            if pos == 1 {
                Factor::new(false, l)
            } else if k % 2 == 1 && pos == k {
                Factor::new(true, spec.n())
            } else if pos % 2 == 0 {
                Factor::new(true, l_prime)
            } else {
                Factor::new(true, l)
            }
        })
        .collect();
    spec.encode(&factors)
}

/// Degree of a nonzero certificate product.
pub fn certificate_degree(k: u32, n: u32, l: u32, l_prime: u32) -> u64 {
    let (k, n, s) = (u64::from(k), u64::from(n), u64::from(l + l_prime));
    let odd = if k % 2 == 1 { 2 * n } else { 0 };
    (k - 1) + 2 * (k / 2) * s + odd
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Xbar,
    Ybar,
    Zbar,
}

impl ClassKind {
    /// Weight attached to one occurrence of the class.
    pub fn weight(self) -> u64 {
        match self {
            ClassKind::Xbar => 1,
            ClassKind::Ybar | ClassKind::Zbar => 2,
        }
    }
}

/// How often each class occurs in a certificate product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightLedger {
    pub entries: Vec<(ClassKind, u64)>,
}

impl WeightLedger {
    pub fn total(&self) -> u64 {
        self.entries
            .iter()
            .map(|&(c, count)| c.weight() * count)
            .sum()
    }
}

pub fn certificate_weights(k: u32, n: u32, l: u32, l_prime: u32) -> WeightLedger {
    let (k, n, s) = (u64::from(k), u64::from(n), u64::from(l + l_prime));
    let mut entries = vec![(ClassKind::Xbar, k - 1), (ClassKind::Ybar, (k / 2) * s)];
    if k % 2 == 1 {
        entries.push((ClassKind::Zbar, n));
    }
    WeightLedger { entries }
}

/// Closed form of the certificate weight:
/// `k(l+l'+1) − 1` for even `k`, `(k−1)(l+l') + k + 2n − 1` for odd `k`.
pub fn weight_total(k: u32, n: u32, l: u32, l_prime: u32) -> u64 {
    let (k, n, s) = (u64::from(k), u64::from(n), u64::from(l + l_prime));
    match Branch::of(k as u32) {
        Branch::Even => k * (s + 1) - 1,
        Branch::Odd => (k - 1) * s + k + 2 * n - 1,
    }
}

/// A nonvanishing term of the expanded product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: String,
    pub coefficient: u64,
}

/// Lower-bound witness for one pair `(l, l')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub k: u32,
    pub branch: Branch,
    pub l: u32,
    pub l_prime: u32,
    pub weight_total: u64,
    pub bound: u64,
    pub divisibility_ok: bool,
    pub divisibility: DivisibilityEvidence,
    pub verification: Verification,
    pub witness: Option<Witness>,
}

/// Builds the certificate for `(l, l')`, expanding the product when `mode`
/// asks for it.
pub fn build_certificate(
    spec: &RingSpec,
    l: u32,
    l_prime: u32,
    mode: VerifyMode,
) -> Result<Certificate> {
    require_pair(spec, l, l_prime)?;
    let k = spec.k();
    let factorization = factorize(spec.m())?;
    let divisibility = divisibility_evidence(
        &factorization,
        u64::from(l),
        u64::from(l_prime),
        u64::from(k / 2),
    );
    let weight = weight_total(k, spec.n(), l, l_prime);
    let (verification, witness) = if mode.should_verify(spec) {
        verify(spec, l, l_prime)?
    } else {
        (Verification::Skipped, None)
    };
    Ok(Certificate {
        k,
        branch: Branch::of(k),
        l,
        l_prime,
        weight_total: weight,
        bound: weight + 1,
        divisibility_ok: !divisibility.divides(),
        divisibility,
        verification,
        witness,
    })
}

fn verify(spec: &RingSpec, l: u32, l_prime: u32) -> Result<(Verification, Option<Witness>)> {
    let product = certificate_product(spec, l, l_prime)?;
    if product.is_zero() {
        return Ok((Verification::Failed, None));
    }
    let lead = leading_term(spec, l, l_prime)?;
    let (mono, coefficient) = match product.coefficient(lead) {
        0 => product.terms().next().expect("nonzero product"),
        c => (lead, c),
    };
    let witness = Witness {
        monomial: spec.render_monomial(mono),
        coefficient,
    };
    Ok((Verification::Verified, Some(witness)))
}

/// `m ∤ C(l+l', l')^{⌊k/2⌋}`.
pub fn admissible(spec: &RingSpec, l: u32, l_prime: u32) -> bool {
    let f = factorize(spec.m()).expect("RingSpec has m >= 2");
    !divides_with(
        &f,
        u64::from(l),
        u64::from(l_prime),
        u64::from(spec.k() / 2),
    )
}

/// All admissible pairs of `[0, n]^2`, in row-major grid order.
pub fn admissible_pairs(spec: &RingSpec) -> Vec<(u32, u32)> {
    let f = factorize(spec.m()).expect("RingSpec has m >= 2");
    let t = u64::from(spec.k() / 2);
    let n = spec.n();
    (0..=n)
        .flat_map(|l| (0..=n).map(move |lp| (l, lp)))
        .filter(|&(l, lp)| !divides_with(&f, u64::from(l), u64::from(lp), t))
        .collect()
}

/// Certificates for every admissible pair, in grid order. Pairs are
/// expanded in parallel.
pub fn certify_all(spec: &RingSpec, mode: VerifyMode) -> Result<Vec<Certificate>> {
    admissible_pairs(spec)
        .into_par_iter()
        .map(|(l, lp)| build_certificate(spec, l, lp, mode))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub bound: u64,
    pub best: Certificate,
}

/// Best certificate over `[0, n]^2`.
///
/// The bound depends on `(l, l')` only through `s = l + l'` and grows with
/// `s`, so sums are scanned from `2n` down. Among maximizers the pair with
/// the largest `l` (smallest `l'`) is chosen. `(0, 0)` is always admissible.
pub fn lower_bound(spec: &RingSpec, mode: VerifyMode) -> Result<LowerBound> {
    if spec.k() < 2 {
        return Err(Error::domain("lower bound needs k >= 2"));
    }
    let f = factorize(spec.m())?;
    let t = u64::from(spec.k() / 2);
    let n = spec.n();
    for s in (0..=2 * n).rev() {
        for lp in s.saturating_sub(n)..=s.min(n) {
            let l = s - lp;
            if !divides_with(&f, u64::from(l), u64::from(lp), t) {
                let best = build_certificate(spec, l, lp, mode)?;
                return Ok(LowerBound {
                    bound: best.bound,
                    best,
                });
            }
        }
    }
    unreachable!("(0, 0) is always admissible")
}
