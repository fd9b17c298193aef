//! Strategies and property bodies shared by the property and acceptance
//! test targets.
#![allow(dead_code)]

use mmp_core::algebra::{rational, Poly};
use mmp_core::pattern::{distribution, matches, mmp, quadrant_counts, QuadrantCounts};
use mmp_core::perm::{complement, is_alternating, reduce, reverse, reverse_complement};
use mmp_core::recurrences::ZigzagTable;
use mmp_core::series::{solve_linear_ode, EgfSeries};
use mmp_core::{AlternatingClass, EnumerationOptions, Permutation, QuadrantPattern};
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const ORDER: usize = 6;

pub type Outcome = Result<(), TestCaseError>;

pub fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..4).prop_map(|c| Poly::from_ints(&c))
}

pub fn series() -> impl Strategy<Value = EgfSeries> {
    prop::collection::vec(poly(), ORDER + 1).prop_map(|c| EgfSeries::from_coeffs(ORDER, c))
}

pub fn unit_series() -> impl Strategy<Value = EgfSeries> {
    series().prop_map(|s| {
        let mut c = s.coeffs().to_vec();
        c[0] = Poly::one();
        EgfSeries::from_coeffs(ORDER, c)
    })
}

pub fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

pub fn pattern() -> impl Strategy<Value = QuadrantPattern> {
    let all = QuadrantPattern::small_patterns();
    (0..all.len()).prop_map(move |i| all[i])
}

pub fn class() -> impl Strategy<Value = AlternatingClass> {
    prop_oneof![Just(AlternatingClass::UpDown), Just(AlternatingClass::DownUp)]
}

pub fn distinct_ints() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::hash_set(-1000i64..1000, 1..12).prop_map(|s| s.into_iter().collect())
}

pub fn poly_ring_axioms(a: Poly, b: Poly, c: Poly) -> Outcome {
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&(&a - &b) + &b, a.clone());
    let v = rational(3);
    prop_assert_eq!((&a * &b).evaluate(&v), a.evaluate(&v) * b.evaluate(&v));
    Ok(())
}

pub fn poly_text_round_trip(a: Poly) -> Outcome {
    prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a.clone());
    let json = serde_json::to_string(&a).unwrap();
    prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), a);
    Ok(())
}

pub fn series_ring_axioms(f: EgfSeries, g: EgfSeries, h: EgfSeries) -> Outcome {
    prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
    prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
    prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
    prop_assert_eq!(
        f.mul(&g.add(&h).unwrap()).unwrap(),
        f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
    );
    prop_assert_eq!(f.mul(&EgfSeries::one(ORDER)).unwrap(), f.clone());
    prop_assert_eq!(f.add(&EgfSeries::zero(ORDER)).unwrap(), f.clone());
    prop_assert_eq!(f.sub(&f).unwrap(), EgfSeries::zero(ORDER));
    Ok(())
}

pub fn truncated_product_matches_longer_product(f: EgfSeries, g: EgfSeries) -> Outcome {
    let wide = |s: &EgfSeries| EgfSeries::from_coeffs(2 * ORDER, s.coeffs().to_vec());
    let long = wide(&f).mul(&wide(&g)).unwrap();
    prop_assert_eq!(long.truncate(ORDER), f.mul(&g).unwrap());
    Ok(())
}

pub fn series_inverses(f: EgfSeries, g: EgfSeries) -> Outcome {
    prop_assert_eq!(f.mul(&f.reciprocal().unwrap()).unwrap(), EgfSeries::one(ORDER));
    prop_assert_eq!(f.log1().unwrap().exp0().unwrap(), f.clone());
    prop_assert_eq!(g.integrate().differentiate().unwrap(), g.truncate(ORDER - 1));
    Ok(())
}

pub fn ode_residual_vanishes(p: EgfSeries, q: EgfSeries, y0: Poly) -> Outcome {
    let y = solve_linear_ode(&p, &q, &y0).unwrap();
    prop_assert_eq!(y.coeff(0), &y0);
    let rhs = p.mul(&y).unwrap().add(&q).unwrap().truncate(ORDER - 1);
    prop_assert_eq!(y.differentiate().unwrap().sub(&rhs).unwrap(), EgfSeries::zero(ORDER - 1));
    Ok(())
}

pub fn involution_laws(p: Permutation) -> Outcome {
    prop_assert_eq!(reverse(&reverse(&p)), p.clone());
    prop_assert_eq!(complement(&complement(&p)), p.clone());
    prop_assert_eq!(reverse_complement(&p), reverse(&complement(&p)));
    prop_assert_eq!(reverse_complement(&reverse_complement(&p)), p.clone());
    for c in [AlternatingClass::UpDown, AlternatingClass::DownUp] {
        if is_alternating(&p, c) {
            prop_assert!(is_alternating(&complement(&p), c.opposite()));
        }
    }
    Ok(())
}

pub fn reduce_laws(s: Vec<i64>) -> Outcome {
    let r = reduce(&s).unwrap();
    let again: Vec<i64> = r.values().iter().map(|&v| v as i64).collect();
    prop_assert_eq!(reduce(&again).unwrap(), r.clone());
    for i in 0..s.len() {
        for j in 0..s.len() {
            prop_assert_eq!(s[i] < s[j], r.values()[i] < r.values()[j]);
        }
    }
    Ok(())
}

pub fn mmp_symmetries(p: Permutation, pat: QuadrantPattern) -> Outcome {
    let v = mmp(&p, &pat);
    prop_assert_eq!(v, mmp(&reverse(&p), &pat.under_reverse()));
    prop_assert_eq!(v, mmp(&complement(&p), &pat.under_complement()));
    prop_assert_eq!(v, mmp(&reverse_complement(&p), &pat.under_reverse_complement()));
    Ok(())
}

pub fn one_pass_counts_match_direct_counts(p: Permutation, pat: QuadrantPattern) -> Outcome {
    let direct = (1..=p.len()).filter(|&i| matches(&p, i, &pat).unwrap()).count() as u32;
    prop_assert_eq!(mmp(&p, &pat), direct);
    let n = p.len() as u32;
    for i in 1..=p.len() {
        let QuadrantCounts(a, b, c, d) = quadrant_counts(&p, i).unwrap();
        prop_assert_eq!(a + b + c + d, n - 1);
    }
    Ok(())
}

pub fn distribution_at_one_is_zigzag(n: usize, c: AlternatingClass, pat: QuadrantPattern) -> Outcome {
    let d = distribution(n, c, &pat, &EnumerationOptions::default()).unwrap();
    let e = ZigzagTable::up_to(n);
    prop_assert_eq!(d.evaluate(&rational(1)), BigRational::from_integer(e.get(n).clone()));
    Ok(())
}
