//! Sparse arithmetic in `A^{⊗k}` where `A = ℤ/m[x, y] / (y^{n+1}, x² − a·y)`,
//! `|x| = 1`, `|y| = 2`, and `a = m/2` for even `m`, `0` for odd `m`.
//!
//! Every factor is kept in the normal form `x^ε y^j` with `ε ∈ {0, 1}` and
//! `0 ≤ j ≤ n`. A monomial of the tensor power packs its `k` factors into a
//! single `u64`, factor 1 in the most significant position, so integer order
//! on keys is lexicographic order on factors (`ε` before `j` inside a factor).
//!
//! Products of tensors use the Koszul sign
//! `(a_1⊗…⊗a_k)(b_1⊗…⊗b_k) = (−1)^{Σ_{i<j} |a_j||b_i|} (a_1 b_1 ⊗ … ⊗ a_k b_k)`.
//!
//! # Rendering
//!
//! Elements render as `0` or as `c·(f_1⊗…⊗f_k)` terms joined by ` + `, in
//! increasing key order. Coefficients are residues in `[1, m)`. A factor is
//! one of `1`, `x`, `y`, `y^j`, `x·y`, `x·y^j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the dense monomial count `2^k (n+1)^k`.
pub const DEFAULT_MONOMIAL_LIMIT: u64 = 10_000_000;

/// Parameters of the ring `H*(L^{2n+1}_m; ℤ/m)^{⊗k}`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RingSpec {
    n: u32,
    m: u64,
    a: u64,
    k: u32,
    #[serde(skip, default = "default_limit")]
    limit: u64,
}

fn default_limit() -> u64 {
    DEFAULT_MONOMIAL_LIMIT
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.m == other.m && self.k == other.k
    }
}

impl Eq for RingSpec {}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, k={})", self.n, self.m, self.k)
    }
}

impl RingSpec {
    pub fn new(n: u32, m: u64, k: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("truncation index n must be >= 1"));
        }
        if m < 2 {
            return Err(Error::domain("modulus m must be >= 2"));
        }
        if k < 1 {
            return Err(Error::domain("tensor arity k must be >= 1"));
        }
        let a = if m.is_multiple_of(2) { m / 2 } else { 0 };
        Ok(RingSpec {
            n,
            m,
            a,
            k,
            limit: DEFAULT_MONOMIAL_LIMIT,
        })
    }

    pub fn with_limit(mut self, limit: u64) -> Self {
        self.limit = limit.max(1);
        self
    }

    /// Same ring, different number of tensor factors.
    pub fn with_arity(self, k: u32) -> Result<Self> {
        Ok(RingSpec::new(self.n, self.m, k)?.with_limit(self.limit))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Coefficient in the relation `x² = a·y`.
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Size of the additive basis of one factor, `2(n+1)`.
    pub fn factor_basis_size(&self) -> u64 {
        2 * (u64::from(self.n) + 1)
    }

    /// `2^k (n+1)^k`, saturating.
    pub fn dense_monomial_count(&self) -> u128 {
        let base = u128::from(self.factor_basis_size());
        (0..self.k).fold(1u128, |acc, _| acc.saturating_mul(base))
    }

    /// Top degree `k(2n+1)`.
    pub fn top_degree(&self) -> u32 {
        self.k * (2 * self.n + 1)
    }

    fn y_bits(&self) -> u32 {
        32 - self.n.leading_zeros()
    }

    fn width(&self) -> u32 {
        self.y_bits() + 1
    }

    fn shift(&self, i: u32) -> u32 {
        (self.k - 1 - i) * self.width()
    }

    /// Fails when elements of this ring would exceed the monomial limit or
    /// the packed key width.
    pub fn check_guard(&self) -> Result<()> {
        let predicted = self.dense_monomial_count();
        if predicted > u128::from(self.limit) {
            return Err(Error::Sizing {
                predicted,
                limit: self.limit,
            });
        }
        let bits = self.k.saturating_mul(self.width());
        if bits > 64 {
            return Err(Error::KeyWidth { bits });
        }
        Ok(())
    }

    fn same_ring(&self, other: &RingSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }

    /// Packs per-factor exponents into a monomial key.
    pub fn encode(&self, factors: &[Factor]) -> Result<Monomial> {
        self.check_guard()?;
        if factors.len() != self.k as usize {
            return Err(Error::domain(format!(
                "expected {} factors, got {}",
                self.k,
                factors.len()
            )));
        }
        let mut key = 0u64;
        for (i, f) in factors.iter().enumerate() {
            if f.y > self.n {
                return Err(Error::domain(format!(
                    "factor {} has y^{} beyond truncation y^{}",
                    i + 1,
                    f.y,
                    self.n
                )));
            }
            key |= self.pack_factor(*f) << self.shift(i as u32);
        }
        Ok(Monomial(key))
    }

    fn pack_factor(&self, f: Factor) -> u64 {
        (u64::from(f.x) << self.y_bits()) | u64::from(f.y)
    }

    /// Factor `i` (0-based) of a monomial.
    pub fn factor(&self, mono: Monomial, i: u32) -> Factor {
        let field = (mono.0 >> self.shift(i)) & ((1u64 << self.width()) - 1);
        Factor {
            x: field >> self.y_bits() != 0,
            y: (field & ((1u64 << self.y_bits()) - 1)) as u32,
        }
    }

    pub fn factors(&self, mono: Monomial) -> Vec<Factor> {
        (0..self.k).map(|i| self.factor(mono, i)).collect()
    }

    pub fn monomial_degree(&self, mono: Monomial) -> u32 {
        (0..self.k).map(|i| self.factor(mono, i).degree()).sum()
    }

    pub fn render_monomial(&self, mono: Monomial) -> String {
        let parts: Vec<String> = (0..self.k)
            .map(|i| self.factor(mono, i).to_string())
            .collect();
        parts.join("⊗")
    }

    /// Bitmask of factors carrying `x`, factor 0 in bit 0.
    fn x_mask(&self, mono: Monomial) -> u64 {
        let mut mask = 0u64;
        for i in 0..self.k {
            if (mono.0 >> (self.shift(i) + self.y_bits())) & 1 == 1 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Product of two monomials as `(monomial, coefficient)`, or `None` when
    /// the product vanishes.
    fn mul_monomials(&self, lhs: Monomial, rhs: Monomial) -> Option<(Monomial, u64)> {
        let lx = self.x_mask(lhs);
        let rx = self.x_mask(rhs);

        // Σ_{i<j} |a_j||b_i| mod 2: each odd a_j passes every odd b_i to its left.
        let mut swaps = 0u32;
        let mut rhs_odd_before = 0u32;
        for j in 0..self.k {
            if lx >> j & 1 == 1 {
                swaps += rhs_odd_before;
            }
            rhs_odd_before += (rx >> j & 1) as u32;
        }

        let mut coef = if swaps % 2 == 1 { self.m - 1 } else { 1 };
        let mut key = 0u64;
        for i in 0..self.k {
            let a = self.factor(lhs, i);
            let b = self.factor(rhs, i);
            let mut y = a.y + b.y;
            let x = match (a.x, b.x) {
                (true, true) => {
                    if self.a == 0 {
                        return None;
                    }
                    coef = mulmod(coef, self.a, self.m);
                    y += 1;
                    false
                }
                (p, q) => p || q,
            };
            if y > self.n {
                return None;
            }
            key |= self.pack_factor(Factor { x, y }) << self.shift(i);
        }
        Some((Monomial(key), coef))
    }
}

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn addmod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) + u128::from(b)) % u128::from(m)) as u64
}

/// One tensor factor `x^ε y^j` in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub x: bool,
    pub y: u32,
}

impl Factor {
    pub const ONE: Factor = Factor { x: false, y: 0 };

    pub fn new(x: bool, y: u32) -> Self {
        Factor { x, y }
    }

    pub fn degree(&self) -> u32 {
        u32::from(self.x) + 2 * self.y
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (false, 0) => write!(f, "1"),
            (true, 0) => write!(f, "x"),
            (false, 1) => write!(f, "y"),
            (false, j) => write!(f, "y^{j}"),
            (true, 1) => write!(f, "x·y"),
            (true, j) => write!(f, "x·y^{j}"),
        }
    }
}

/// A packed monomial key. Only meaningful together with its [`RingSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(u64);

impl Monomial {
    /// `1⊗…⊗1` in any arity.
    pub const UNIT: Monomial = Monomial(0);

    pub fn key(&self) -> u64 {
        self.0
    }
}

/// Generators of one factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
}

/// Degree of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degree {
    /// The zero element.
    Zero,
    Homogeneous(u32),
    Mixed,
}

/// Sparse `ℤ/m`-combination of monomials. No stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    spec: RingSpec,
    terms: BTreeMap<Monomial, u64>,
}

impl TensorElement {
    pub fn zero(spec: RingSpec) -> Self {
        TensorElement {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: RingSpec) -> Result<Self> {
        spec.check_guard()?;
        Ok(Self::from_map(spec, [(Monomial::UNIT, 1)]))
    }

    /// `c · (f_1⊗…⊗f_k)` with `c` reduced mod m.
    pub fn monomial(spec: RingSpec, factors: &[Factor], coef: i64) -> Result<Self> {
        let mono = spec.encode(factors)?;
        Ok(Self::from_map(spec, [(mono, reduce(coef, spec.m))]))
    }

    /// Builds an element from signed coefficients, summing repeated monomials.
    pub fn from_terms<'a, I>(spec: RingSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [Factor], i64)>,
    {
        let mut acc = Self::zero(spec);
        for (factors, coef) in terms {
            acc = acc.add(&Self::monomial(spec, factors, coef)?)?;
        }
        Ok(acc)
    }

    fn from_map<I: IntoIterator<Item = (Monomial, u64)>>(spec: RingSpec, iter: I) -> Self {
        let terms = iter
            .into_iter()
            .map(|(mono, c)| (mono, c % spec.m))
            .filter(|&(_, c)| c != 0)
            .collect();
        TensorElement { spec, terms }
    }

    /// `p_i^*(gen) = 1⊗…⊗gen⊗…⊗1` with `gen` in position `i` (1-based).
    pub fn pullback(spec: RingSpec, i: u32, gen: Generator) -> Result<Self> {
        if i < 1 || i > spec.k {
            return Err(Error::domain(format!(
                "factor index {i} outside 1..={}",
                spec.k
            )));
        }
        let mut factors = vec![Factor::ONE; spec.k as usize];
        factors[(i - 1) as usize] = match gen {
            Generator::X => Factor::new(true, 0),
            Generator::Y => Factor::new(false, 1),
        };
        Self::monomial(spec, &factors, 1)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u64)> + '_ {
        self.terms.iter().map(|(&mono, &c)| (mono, c))
    }

    pub fn coefficient(&self, mono: Monomial) -> u64 {
        self.terms.get(&mono).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Degree {
        let mut degrees = self
            .terms
            .keys()
            .map(|&mono| self.spec.monomial_degree(mono));
        match degrees.next() {
            None => Degree::Zero,
            Some(d) if degrees.all(|e| e == d) => Degree::Homogeneous(d),
            Some(_) => Degree::Mixed,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.spec.same_ring(&other.spec)?;
        let m = self.spec.m;
        let mut terms = self.terms.clone();
        for (&mono, &c) in &other.terms {
            let e = terms.entry(mono).or_insert(0);
            *e = addmod(*e, c, m);
        }
        terms.retain(|_, c| *c != 0);
        Ok(TensorElement {
            spec: self.spec,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        let m = self.spec.m;
        TensorElement {
            spec: self.spec,
            terms: self.terms.iter().map(|(&mono, &c)| (mono, m - c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = reduce(c, self.spec.m);
        Self::from_map(
            self.spec,
            self.terms
                .iter()
                .map(|(&mono, &d)| (mono, mulmod(c, d, self.spec.m))),
        )
    }

    /// Bilinear product with Koszul signs.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.spec.same_ring(&other.spec)?;
        self.spec.check_guard()?;
        let spec = &self.spec;
        let m = spec.m;
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(
            self.terms
                .len()
                .saturating_mul(other.terms.len())
                .min(1 << 16),
        );
        for (&ma, &ca) in &self.terms {
            for (&mb, &cb) in &other.terms {
                if let Some((mc, sign)) = spec.mul_monomials(ma, mb) {
                    let c = mulmod(mulmod(ca, cb, m), sign, m);
                    let e = acc.entry(mc).or_insert(0);
                    *e = addmod(*e, c, m);
                }
            }
        }
        Ok(Self::from_map(self.spec, acc))
    }

    /// `self^t`; `t = 0` gives the unit.
    pub fn pow(&self, t: u64) -> Result<Self> {
        let mut result = Self::one(self.spec)?;
        let mut base = self.clone();
        let mut t = t;
        while t > 0 {
            if t & 1 == 1 {
                result = result.mul(&base)?;
            }
            t >>= 1;
            if t > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Restriction along the diagonal `X → X^k`: each monomial goes to the
    /// in-ring product of its factors, taken in order.
    pub fn diagonal_pullback(&self) -> Result<Self> {
        let target = self.spec.with_arity(1)?;
        target.check_guard()?;
        let m = self.spec.m;
        let n = self.spec.n;
        let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (&mono, &c) in &self.terms {
            let factors = self.spec.factors(mono);
            let xs = factors.iter().filter(|f| f.x).count() as u32;
            let ys: u32 = factors.iter().map(|f| f.y).sum();
            // x^{2q+r} = a^q y^q x^r
            let q = xs / 2;
            let y = ys + q;
            if y > n {
                continue;
            }
            let mut coef = c;
            for _ in 0..q {
                coef = mulmod(coef, self.spec.a, m);
            }
            if coef == 0 {
                continue;
            }
            let image = target.encode(&[Factor::new(xs % 2 == 1, y)])?;
            let e = acc.entry(image).or_insert(0);
            *e = addmod(*e, coef, m);
        }
        Ok(Self::from_map(target, acc))
    }

    /// `(rendered monomial, coefficient)` pairs in increasing monomial order.
    pub fn rendered_terms(&self) -> Vec<(String, u64)> {
        self.terms()
            .map(|(mono, c)| (self.spec.render_monomial(mono), c))
            .collect()
    }
}

fn reduce(c: i64, m: u64) -> u64 {
    (i128::from(c).rem_euclid(i128::from(m))) as u64
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&mono, &c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·({})", self.spec.render_monomial(mono))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(spec: RingSpec, i: u32) -> TensorElement {
        TensorElement::pullback(spec, i, Generator::X).unwrap()
    }

    fn y(spec: RingSpec, i: u32) -> TensorElement {
        TensorElement::pullback(spec, i, Generator::Y).unwrap()
    }

    #[test]
    fn relation_coefficient_by_parity() {
        assert_eq!(RingSpec::new(1, 3, 2).unwrap().a(), 0);
        assert_eq!(RingSpec::new(1, 2, 2).unwrap().a(), 1);
        assert_eq!(RingSpec::new(2, 4, 3).unwrap().a(), 2);
    }

    #[test]
    fn ring_new_rejects_bad_parameters() {
        assert!(matches!(RingSpec::new(0, 3, 2), Err(Error::Domain(_))));
        assert!(matches!(RingSpec::new(1, 1, 2), Err(Error::Domain(_))));
        assert!(matches!(RingSpec::new(1, 3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn koszul_sign_on_odd_generators() {
        let s = RingSpec::new(1, 5, 2).unwrap();
        let xx =
            TensorElement::monomial(s, &[Factor::new(true, 0), Factor::new(true, 0)], 1).unwrap();
        assert_eq!(x(s, 2).mul(&x(s, 1)).unwrap(), xx.neg());
        assert_eq!(x(s, 1).mul(&x(s, 2)).unwrap(), xx);
    }

    #[test]
    fn x_squared_is_a_y() {
        let s = RingSpec::new(1, 2, 1).unwrap();
        assert_eq!(x(s, 1).mul(&x(s, 1)).unwrap(), y(s, 1));
        let s = RingSpec::new(2, 9, 1).unwrap();
        assert!(x(s, 1).mul(&x(s, 1)).unwrap().is_zero());
    }

    #[test]
    fn pullback_positions() {
        let s = RingSpec::new(1, 3, 2).unwrap();
        assert_eq!(x(s, 2).to_string(), "1·(1⊗x)");
        let s3 = RingSpec::new(1, 3, 3).unwrap();
        assert_eq!(y(s3, 1).to_string(), "1·(y⊗1⊗1)");
        assert_eq!(y(s3, 1).degree(), Degree::Homogeneous(2));
        assert!(TensorElement::pullback(s3, 0, Generator::X).is_err());
        assert!(TensorElement::pullback(s3, 4, Generator::Y).is_err());
    }

    #[test]
    fn power_examples() {
        let s = RingSpec::new(1, 3, 2).unwrap();
        let d = y(s, 2).sub(&y(s, 1)).unwrap();
        assert_eq!(d.pow(0).unwrap(), TensorElement::one(s).unwrap());
        let sq = d.pow(2).unwrap();
        let yy = TensorElement::monomial(s, &[Factor::new(false, 1); 2], 1).unwrap();
        assert_eq!(sq, yy);

        let s = RingSpec::new(1, 2, 2).unwrap();
        let d = y(s, 2).sub(&y(s, 1)).unwrap();
        assert!(d.pow(2).unwrap().is_zero());
    }

    #[test]
    fn truncation() {
        for m in [2, 3, 4] {
            for n in 1..4 {
                let s = RingSpec::new(n, m, 2).unwrap();
                assert!(y(s, 1).pow(u64::from(n) + 1).unwrap().is_zero());
                assert!(!y(s, 2).pow(u64::from(n)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn diagonal_examples() {
        let s = RingSpec::new(2, 7, 2).unwrap();
        let xbar = x(s, 2).sub(&x(s, 1)).unwrap();
        assert!(xbar.diagonal_pullback().unwrap().is_zero());
        let yy = y(s, 1).mul(&y(s, 2)).unwrap();
        let image = yy.diagonal_pullback().unwrap();
        assert_eq!(image.to_string(), "1·(y^2)");

        let s = RingSpec::new(1, 7, 2).unwrap();
        let yy = y(s, 1).mul(&y(s, 2)).unwrap();
        assert!(yy.diagonal_pullback().unwrap().is_zero());
    }

    #[test]
    fn zero_detection_and_degree() {
        let s = RingSpec::new(1, 4, 2).unwrap();
        assert!(TensorElement::zero(s).is_zero());
        assert_eq!(TensorElement::zero(s).degree(), Degree::Zero);
        assert!(x(s, 1).scale(4).is_zero());
        let xy =
            TensorElement::monomial(s, &[Factor::new(true, 0), Factor::new(false, 1)], 1).unwrap();
        assert_eq!(xy.degree(), Degree::Homogeneous(3));
        assert_eq!(xy.add(&x(s, 1)).unwrap().degree(), Degree::Mixed);
    }

    #[test]
    fn mismatched_rings() {
        let a = RingSpec::new(1, 3, 2).unwrap();
        let b = RingSpec::new(1, 5, 2).unwrap();
        assert!(matches!(
            x(a, 1).mul(&x(b, 1)),
            Err(Error::RingMismatch { .. })
        ));
        assert!(matches!(
            x(a, 1).add(&x(b, 1)),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn memory_guard() {
        let s = RingSpec::new(3, 3, 4).unwrap().with_limit(100);
        assert!(matches!(TensorElement::one(s), Err(Error::Sizing { .. })));
        let s = RingSpec::new(3, 3, 4).unwrap();
        assert_eq!(s.dense_monomial_count(), 4096);
        assert!(s.check_guard().is_ok());
    }

    #[test]
    fn rendering_grammar() {
        let s = RingSpec::new(3, 5, 2).unwrap();
        let e = TensorElement::from_terms(
            s,
            [
                (&[Factor::new(true, 2), Factor::new(false, 0)][..], 3),
                (&[Factor::new(false, 1), Factor::new(true, 1)][..], -1),
            ],
        )
        .unwrap();
        assert_eq!(e.to_string(), "4·(y⊗x·y) + 3·(x·y^2⊗1)");
        assert_eq!(TensorElement::zero(s).to_string(), "0");
    }

    #[test]
    fn key_order_is_factor_lexicographic() {
        let s = RingSpec::new(2, 3, 2).unwrap();
        let mut all = Vec::new();
        for x1 in [false, true] {
            for y1 in 0..=2 {
                for x2 in [false, true] {
                    for y2 in 0..=2 {
                        let f = [Factor::new(x1, y1), Factor::new(x2, y2)];
                        all.push((f, s.encode(&f).unwrap()));
                    }
                }
            }
        }
        for w in all.windows(2) {
            assert!(w[0].1 < w[1].1);
            assert_eq!(s.factors(w[0].1), w[0].0.to_vec());
        }
    }
}
