mod common;

use common::{basis, oracle_mul};
use lenstc::certificates::{certificate_product, leading_term, xbar, ybar, zbar};
use lenstc::{Degree, Factor, Generator, RingSpec, TensorElement};
use proptest::prelude::*;

const MODULI: [u64; 5] = [2, 3, 4, 5, 8];

fn arb_spec() -> impl Strategy<Value = RingSpec> {
    (1u32..=3, 0usize..MODULI.len(), 1u32..=3)
        .prop_map(|(n, mi, k)| RingSpec::new(n, MODULI[mi], k).unwrap())
}

fn arb_element(spec: RingSpec, max_terms: usize) -> impl Strategy<Value = TensorElement> {
    let per_factor = (any::<bool>(), 0..=spec.n()).prop_map(|(x, y)| Factor::new(x, y));
    let term = (
        proptest::collection::vec(per_factor, spec.k() as usize),
        -20i64..20,
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        TensorElement::from_terms(spec, terms.iter().map(|(f, c)| (f.as_slice(), *c))).unwrap()
    })
}

fn arb_triple() -> impl Strategy<Value = (TensorElement, TensorElement, TensorElement)> {
    arb_spec().prop_flat_map(|s| (arb_element(s, 6), arb_element(s, 6), arb_element(s, 6)))
}

fn arb_homogeneous_pair() -> impl Strategy<Value = (TensorElement, TensorElement)> {
    arb_spec().prop_flat_map(|s| {
        let top = s.top_degree();
        (Just(s), 0..=top, 0..=top, any::<u64>(), any::<u64>()).prop_map(
            |(s, d1, d2, seed1, seed2)| (homogeneous(s, d1, seed1), homogeneous(s, d2, seed2)),
        )
    })
}

/// Pseudo-random combination of the basis monomials of degree `d`.
fn homogeneous(spec: RingSpec, d: u32, seed: u64) -> TensorElement {
    let mut state = seed | 1;
    let terms: Vec<(Vec<Factor>, i64)> = basis(&spec)
        .into_iter()
        .filter(|w| w.iter().map(Factor::degree).sum::<u32>() == d)
        .map(|w| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (w, (state % 7) as i64 - 3)
        })
        .collect();
    TensorElement::from_terms(spec, terms.iter().map(|(f, c)| (f.as_slice(), *c))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn product_matches_oracle((a, b, _) in arb_triple()) {
        prop_assert_eq!(a.mul(&b).unwrap(), oracle_mul(&a, &b));
    }

    #[test]
    fn associative((a, b, c) in arb_triple()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn distributive((a, b, c) in arb_triple()) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn graded_commutative((a, b) in arb_homogeneous_pair()) {
        let (da, db) = match (a.degree(), b.degree()) {
            (Degree::Homogeneous(x), Degree::Homogeneous(y)) => (x, y),
            _ => return Ok(()),
        };
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        let expected = if da * db % 2 == 1 { ba.neg() } else { ba };
        prop_assert_eq!(&ab, &expected);
        match ab.degree() {
            Degree::Zero => {}
            d => prop_assert_eq!(d, Degree::Homogeneous(da + db)),
        }
    }

    #[test]
    fn diagonal_is_ring_map((a, b, _) in arb_triple()) {
        let lhs = a.mul(&b).unwrap().diagonal_pullback().unwrap();
        let rhs = a.diagonal_pullback().unwrap().mul(&b.diagonal_pullback().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degrees_stay_in_range((a, b, _) in arb_triple()) {
        let p = a.mul(&b).unwrap();
        let top = p.spec().top_degree();
        for (mono, c) in p.terms() {
            prop_assert!(c != 0 && c < p.spec().m());
            prop_assert!(p.spec().monomial_degree(mono) <= top);
        }
    }

    #[test]
    fn power_is_repeated_product((a, _, _) in arb_triple(), t in 0u64..6) {
        let mut expected = TensorElement::one(*a.spec()).unwrap();
        for _ in 0..t {
            expected = expected.mul(&a).unwrap();
        }
        prop_assert_eq!(a.pow(t).unwrap(), expected);
    }
}

#[test]
fn truncation_and_relation_everywhere() {
    for n in 1..=3 {
        for &m in &MODULI {
            for k in 1..=3 {
                let s = RingSpec::new(n, m, k).unwrap();
                for i in 1..=k {
                    let x = TensorElement::pullback(s, i, Generator::X).unwrap();
                    let y = TensorElement::pullback(s, i, Generator::Y).unwrap();
                    assert!(y.pow(u64::from(n) + 1).unwrap().is_zero());
                    assert_eq!(x.mul(&x).unwrap(), y.scale(s.a() as i64));
                }
            }
        }
    }
}

#[test]
fn certificate_classes_restrict_to_zero() {
    for n in 1..=3 {
        for m in [2, 3, 4, 6, 9] {
            for k in 2..=4 {
                let s = RingSpec::new(n, m, k).unwrap();
                for i in 2..=k {
                    assert!(xbar(&s, i).unwrap().diagonal_pullback().unwrap().is_zero());
                    assert!(ybar(&s, i).unwrap().diagonal_pullback().unwrap().is_zero());
                }
                assert!(zbar(&s).unwrap().diagonal_pullback().unwrap().is_zero());
            }
        }
    }
}

#[test]
fn certificate_leading_coefficient_is_binomial_power() {
    // Coefficient of the leading term is ±C(l+l', l')^{k'} mod m.
    for n in 1..=3u32 {
        for m in [3u64, 5, 7, 11, 4, 9] {
            for k in 2..=4u32 {
                let s = RingSpec::new(n, m, k).unwrap();
                for l in 0..=n {
                    for lp in 0..=n {
                        let p = certificate_product(&s, l, lp).unwrap();
                        let c = common::binomial(u64::from(l + lp), u64::from(lp));
                        let c = (c.pow(k / 2) % num_bigint::BigUint::from(m))
                            .to_u64_digits()
                            .first()
                            .copied()
                            .unwrap_or(0);
                        let got = p.coefficient(leading_term(&s, l, lp).unwrap());
                        assert!(
                            got == c || got == (m - c) % m,
                            "n={n} m={m} k={k} l={l} l'={lp}"
                        );
                    }
                }
            }
        }
    }
}
