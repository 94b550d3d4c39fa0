//! Test-only oracles, independent of the library's arithmetic paths.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use lenstc::{Factor, RingSpec, TensorElement};

/// Exact `C(n, r)`.
pub fn binomial(n: u64, r: u64) -> BigUint {
    assert!(r <= n);
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Largest `v` with `p^v | x`, by repeated division.
pub fn valuation(x: &BigUint, p: u64) -> u32 {
    assert!(!x.is_zero());
    let p = BigUint::from(p);
    let mut x = x.clone();
    let mut v = 0;
    while (&x % &p).is_zero() {
        x /= &p;
        v += 1;
    }
    v
}

/// `m | C(l+l', l')^t` by big-integer arithmetic.
pub fn divides_exact(m: u64, l: u64, lp: u64, t: u32) -> bool {
    let c = binomial(l + lp, lp).pow(t);
    (c % BigUint::from(m)).is_zero()
}

pub fn primes_upto(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

/// A monomial as explicit per-factor exponents.
pub type Word = Vec<(bool, u32)>;

/// Dense product oracle. Each tensor monomial is read as the ordered product
/// `p_1^*(x^{ε_1} y^{j_1}) ⋯ p_k^*(x^{ε_k} y^{j_k})` in the supercommutative
/// algebra on odd `x_i` and even `y_i`. The odd letters of both operands are
/// concatenated and bubble-sorted; each transposition of two odd letters
/// flips the sign. Adjacent equal letters `x_i x_i` become `a·y_i`.
pub fn oracle_mul_words(spec: &RingSpec, a: &Word, b: &Word) -> Option<(Word, i64)> {
    let k = spec.k() as usize;
    let mut letters: Vec<usize> = (0..k).filter(|&i| a[i].0).collect();
    letters.extend((0..k).filter(|&i| b[i].0));
    let mut sign = 1i64;
    for pass in 0..letters.len() {
        for t in 0..letters.len().saturating_sub(1 + pass) {
            if letters[t] > letters[t + 1] {
                letters.swap(t, t + 1);
                sign = -sign;
            }
        }
    }
    let mut ys: Vec<u32> = (0..k).map(|i| a[i].1 + b[i].1).collect();
    let mut xs = vec![false; k];
    let mut coef = sign;
    let mut t = 0;
    while t < letters.len() {
        let i = letters[t];
        if t + 1 < letters.len() && letters[t + 1] == i {
            coef *= spec.a() as i64;
            ys[i] += 1;
            t += 2;
        } else {
            xs[i] = true;
            t += 1;
        }
    }
    if coef == 0 || ys.iter().any(|&y| y > spec.n()) {
        return None;
    }
    Some(((0..k).map(|i| (xs[i], ys[i])).collect(), coef))
}

/// Element as a map from words to residues.
pub fn to_words(e: &TensorElement) -> BTreeMap<Word, u64> {
    e.terms()
        .map(|(mono, c)| {
            let w = e
                .spec()
                .factors(mono)
                .into_iter()
                .map(|f| (f.x, f.y))
                .collect();
            (w, c)
        })
        .collect()
}

pub fn from_words(spec: &RingSpec, words: &BTreeMap<Word, i64>) -> TensorElement {
    let mut acc = TensorElement::zero(*spec);
    for (w, &c) in words {
        let factors: Vec<Factor> = w.iter().map(|&(x, y)| Factor::new(x, y)).collect();
        acc = acc
            .add(&TensorElement::monomial(*spec, &factors, c).unwrap())
            .unwrap();
    }
    acc
}

pub fn oracle_mul(a: &TensorElement, b: &TensorElement) -> TensorElement {
    let spec = *a.spec();
    let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
    let m = spec.m() as i64;
    for (wa, &ca) in &to_words(a) {
        for (wb, &cb) in &to_words(b) {
            if let Some((w, c)) = oracle_mul_words(&spec, wa, wb) {
                let term = (c.rem_euclid(m) * ca as i64 % m * cb as i64) % m;
                *acc.entry(w).or_insert(0) += term;
            }
        }
    }
    from_words(&spec, &acc)
}

/// Every basis monomial of the tensor power.
pub fn basis(spec: &RingSpec) -> Vec<Vec<Factor>> {
    let mut out = vec![Vec::new()];
    for _ in 0..spec.k() {
        let mut next = Vec::new();
        for prefix in &out {
            for x in [false, true] {
                for y in 0..=spec.n() {
                    let mut w: Vec<Factor> = prefix.clone();
                    w.push(Factor::new(x, y));
                    next.push(w);
                }
            }
        }
        out = next;
    }
    out
}
