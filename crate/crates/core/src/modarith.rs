//! Integer arithmetic behind the binomial divisibility conditions: prime
//! factorization, base-p digits, and p-adic valuations of binomial
//! coefficients.
//!
//! `vp_binomial` counts carries (Kummer). `alpha_p` evaluates the digit-run
//! formula for the valuation of the central binomial coefficient. The two are
//! kept as separate routes so callers can reconcile them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `m = ∏ p^e` with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().copied()
    }

    /// Exponent of `p` in the factorization (0 when absent).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// `Some(p)` when the factored number is a prime.
    pub fn as_prime(&self) -> Option<u64> {
        match self.factors.as_slice() {
            [(p, 1)] => Some(*p),
            _ => None,
        }
    }

    /// `Some((p, e))` when the factored number is a prime power.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [pe] => Some(*pe),
            _ => None,
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} is not prime")))
    }
}

/// Trial-division factorization.
pub fn factorize(m: u64) -> Result<PrimeFactorization> {
    if m < 2 {
        return Err(Error::domain(format!("cannot factorize {m}: need m >= 2")));
    }
    let mut factors = Vec::new();
    let mut rest = m;
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(PrimeFactorization { factors })
}

/// Base-p expansion, least significant digit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicDigits {
    base: u64,
    digits: Vec<u64>,
}

impl PadicDigits {
    pub fn new(n: u64, base: u64) -> Result<Self> {
        if base < 2 {
            return Err(Error::domain(format!("digit base {base} < 2")));
        }
        let mut digits = Vec::new();
        let mut rest = n;
        while rest > 0 {
            digits.push(rest % base);
            rest /= base;
        }
        Ok(PadicDigits { base, digits })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// Digits `n_0, n_1, ...`; empty for `n = 0`.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Digit at position `i`, zero above the top.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.base + d)
    }
}

/// `v_p(C(a+b, b))`, the number of carries when adding `a` and `b` in base `p`.
pub fn vp_binomial(a: u64, b: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    Ok(carries(a, b, p))
}

fn carries(mut a: u64, mut b: u64, p: u64) -> u32 {
    let mut carry = 0u64;
    let mut count = 0u32;
    while a > 0 || b > 0 || carry > 0 {
        let s = a % p + b % p + carry;
        carry = u64::from(s >= p);
        count += carry as u32;
        a /= p;
        b /= p;
    }
    count
}

/// Run-length term `r_i(n)` of the digit formula.
///
/// Zero when `2 n_i < p`. Otherwise one plus the length of the run of digits
/// equal to `(p-1)/2` directly above position `i`. For `p = 2` the half digit
/// is not an integer, so the run is always empty.
pub fn digit_run(digits: &PadicDigits, i: usize) -> u32 {
    let p = digits.base();
    if 2 * digits.digit(i) < p {
        return 0;
    }
    if p.is_multiple_of(2) {
        return 1;
    }
    let half = (p - 1) / 2;
    let mut r = 1u32;
    while digits.digit(i + r as usize) == half {
        r += 1;
    }
    r
}

/// `α_p(n) = Σ r_i(n)`, evaluated from the base-p digits of `n`.
///
/// Equals `v_p(C(2n, n))`; see [`alpha_p_crosscheck`] for the reconciliation
/// against the carry count.
pub fn alpha_p(n: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    let digits = PadicDigits::new(n, p)?;
    Ok((0..digits.digits().len())
        .map(|i| digit_run(&digits, i))
        .sum())
}

/// Digit formula and carry count disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaMismatch {
    pub n: u64,
    pub p: u64,
    pub digit_formula: u32,
    pub carry_count: u32,
}

/// Evaluates `α_p(n)` by both routes. A disagreement is returned as a
/// diagnostic instead of being resolved.
pub fn alpha_p_crosscheck(n: u64, p: u64) -> Result<std::result::Result<u32, AlphaMismatch>> {
    let digit_formula = alpha_p(n, p)?;
    let carry_count = vp_binomial(n, n, p)?;
    Ok(if digit_formula == carry_count {
        Ok(digit_formula)
    } else {
        Err(AlphaMismatch {
            n,
            p,
            digit_formula,
            carry_count,
        })
    })
}

/// One prime's contribution to the test `m | C(l+l', l')^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEvidence {
    pub p: u64,
    /// Exponent of `p` in `m`.
    pub exponent: u32,
    /// `v_p(C(l+l', l'))`.
    pub valuation: u32,
    /// `t · valuation`, compared against `exponent`.
    pub scaled_valuation: u64,
}

impl PrimeEvidence {
    /// This prime alone prevents `m` from dividing the power.
    pub fn blocks(&self) -> bool {
        self.scaled_valuation < u64::from(self.exponent)
    }
}

/// Per-prime record for `m | C(l+l', l')^t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityEvidence {
    pub m: u64,
    pub l: u64,
    pub l_prime: u64,
    pub power: u64,
    pub primes: Vec<PrimeEvidence>,
}

impl DivisibilityEvidence {
    pub fn divides(&self) -> bool {
        !self.primes.iter().any(PrimeEvidence::blocks)
    }
}

/// Evidence for whether `m` divides `C(l+l', l')^t`, one entry per prime of `m`.
pub fn divisibility_evidence(
    factorization: &PrimeFactorization,
    l: u64,
    l_prime: u64,
    t: u64,
) -> DivisibilityEvidence {
    let primes = factorization
        .iter()
        .map(|(p, e)| {
            let valuation = carries(l, l_prime, p);
            PrimeEvidence {
                p,
                exponent: e,
                valuation,
                scaled_valuation: t.saturating_mul(u64::from(valuation)),
            }
        })
        .collect();
    DivisibilityEvidence {
        m: factorization.value(),
        l,
        l_prime,
        power: t,
        primes,
    }
}

/// Whether `m | C(l+l2, l2)^t`, decided prime by prime.
pub fn divides_binomial_power(m: u64, l: u64, l2: u64, t: u64) -> bool {
    match m {
        0 => false,
        1 => true,
        _ => {
            let f = factorize(m).expect("m >= 2");
            divides_with(&f, l, l2, t)
        }
    }
}

/// As [`divides_binomial_power`] with `m` already factored.
pub fn divides_with(factorization: &PrimeFactorization, l: u64, l2: u64, t: u64) -> bool {
    factorization
        .iter()
        .all(|(p, e)| t.saturating_mul(u64::from(carries(l, l2, p))) >= u64::from(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(2).unwrap().factors(), &[(2, 1)]);
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(9).unwrap().factors(), &[(3, 2)]);
        assert_eq!(factorize(97).unwrap().as_prime(), Some(97));
        assert_eq!(factorize(1024).unwrap().as_prime_power(), Some((2, 10)));
        assert!(factorize(1).is_err());
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_reconstructs() {
        for m in 2..2000u64 {
            let f = factorize(m).unwrap();
            assert_eq!(f.value(), m);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.iter().all(|(p, e)| is_prime(p) && e >= 1));
        }
    }

    #[test]
    fn vp_binomial_examples() {
        assert_eq!(vp_binomial(1, 1, 2).unwrap(), 1);
        assert_eq!(vp_binomial(2, 2, 3).unwrap(), 1);
        assert_eq!(vp_binomial(2, 2, 2).unwrap(), 1);
        assert_eq!(vp_binomial(0, 0, 5).unwrap(), 0);
        assert!(matches!(vp_binomial(1, 1, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn alpha_p_examples() {
        for p in [2, 3, 5, 7, 11] {
            assert_eq!(alpha_p(0, p).unwrap(), 0);
        }
        assert_eq!(alpha_p(1, 2).unwrap(), 1);
        assert_eq!(alpha_p(2, 3).unwrap(), 1);
        assert!(alpha_p(3, 9).is_err());
    }

    #[test]
    fn alpha_p_run_through_half_digits() {
        // Digit 4 carries, and the carry runs through both 3s above it.
        let n = 4 + 3 * 7 + 3 * 49;
        let digits = PadicDigits::new(n, 7).unwrap();
        assert_eq!(digits.digits(), &[4, 3, 3]);
        assert_eq!(digit_run(&digits, 0), 3);
        assert_eq!(alpha_p(n, 7).unwrap(), vp_binomial(n, n, 7).unwrap());
    }

    #[test]
    fn alpha_two_is_popcount() {
        for n in 0..512u64 {
            assert_eq!(alpha_p(n, 2).unwrap(), n.count_ones());
        }
    }

    #[test]
    fn crosscheck_agrees() {
        for p in [2, 3, 5, 7, 13] {
            for n in 0..400 {
                assert!(alpha_p_crosscheck(n, p).unwrap().is_ok());
            }
        }
    }

    #[test]
    fn padic_digits_reconstruct() {
        for base in 2..12 {
            for n in 0..500 {
                let d = PadicDigits::new(n, base).unwrap();
                assert_eq!(d.value(), n);
                assert!(d.digits().iter().all(|&x| x < base));
                assert!(d.digits().last().map_or(n == 0, |&top| top != 0));
            }
        }
    }

    #[test]
    fn divides_binomial_power_examples() {
        assert!(!divides_binomial_power(3, 1, 1, 1));
        assert!(divides_binomial_power(2, 1, 1, 1));
        assert!(divides_binomial_power(4, 1, 1, 2));
        assert!(!divides_binomial_power(4, 1, 1, 1));
        for m in 2..100 {
            assert!(!divides_binomial_power(m, 0, 0, 3));
        }
    }

    #[test]
    fn evidence_matches_predicate() {
        let f = factorize(12).unwrap();
        let ev = divisibility_evidence(&f, 2, 2, 1);
        // C(4,2) = 6: v_2 = 1 < 2 blocks, v_3 = 1 ≥ 1 does not.
        assert_eq!(ev.primes.len(), 2);
        assert!(ev.primes[0].blocks());
        assert!(!ev.primes[1].blocks());
        assert!(!ev.divides());
        assert_eq!(ev.divides(), divides_binomial_power(12, 2, 2, 1));
    }
}
