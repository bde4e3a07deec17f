//! Random coefficients, series and tuples for the trial suites.
//!
//! Coefficient laws: `Z` uniform on `[-9, 9]`; `Z/m` uniform on all residues;
//! `Q` numerator uniform on `[-9, 9]` over denominator uniform on `[1, 9]`.
//! A forced linear coefficient is drawn uniformly among the units of the
//! same law.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::rng::SplitMix64;
use crate::multiseries::{Monomial, MultiSeries, SeriesTuple, SupportSetND};
use crate::ring::{Integers, IntegersMod, Rationals, Ring};
use crate::series::TruncatedSeries;
use crate::verdict::ExponentSet;

pub trait SampleRing: Ring {
    fn sample(&self, rng: &mut SplitMix64) -> Self::Elem;
    fn sample_unit(&self, rng: &mut SplitMix64) -> Self::Elem;
    fn coefficient_law(&self) -> String;
}

impl SampleRing for Integers {
    fn sample(&self, rng: &mut SplitMix64) -> BigInt {
        BigInt::from(rng.range_i64(-9, 9))
    }
    fn sample_unit(&self, rng: &mut SplitMix64) -> BigInt {
        BigInt::from(if rng.coin() { 1 } else { -1 })
    }
    fn coefficient_law(&self) -> String {
        "z: uniform [-9, 9]; units uniform {-1, 1}".into()
    }
}

impl SampleRing for IntegersMod {
    fn sample(&self, rng: &mut SplitMix64) -> u64 {
        rng.below(self.modulus())
    }
    fn sample_unit(&self, rng: &mut SplitMix64) -> u64 {
        loop {
            let a = rng.below(self.modulus());
            if a.gcd(&self.modulus()) == 1 {
                return a;
            }
        }
    }
    fn coefficient_law(&self) -> String {
        format!("zmod:{}: uniform residues; units uniform among residues coprime to the modulus", self.modulus())
    }
}

impl SampleRing for Rationals {
    fn sample(&self, rng: &mut SplitMix64) -> BigRational {
        let n = rng.range_i64(-9, 9);
        let d = rng.range_i64(1, 9);
        BigRational::new(n.into(), d.into())
    }
    fn sample_unit(&self, rng: &mut SplitMix64) -> BigRational {
        loop {
            let a = self.sample(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }
    fn coefficient_law(&self) -> String {
        "q: numerator uniform [-9, 9] over denominator uniform [1, 9]; units nonzero".into()
    }
}

/// A series supported on `set ∩ [1, precision]`: each admissible exponent is
/// kept with probability 1/2 and given a sampled coefficient. With
/// `invertible`, the coefficient of `x` is a sampled unit.
pub fn random_series<R: SampleRing>(
    ring: &R,
    set: &impl ExponentSet,
    precision: usize,
    invertible: bool,
    rng: &mut SplitMix64,
) -> TruncatedSeries<R> {
    let mut terms = Vec::new();
    for e in 1..=precision {
        if !set.contains(e as u64) {
            continue;
        }
        if e == 1 && invertible {
            terms.push((1, ring.sample_unit(rng)));
        } else if rng.coin() {
            terms.push((e, ring.sample(rng)));
        }
    }
    TruncatedSeries::from_terms(ring.clone(), precision, terms).expect("precision >= 1")
}

/// A tuple whose components each have 1 to 4 terms drawn uniformly from the
/// members of `support`.
pub fn random_tuple<R: SampleRing>(
    ring: &R,
    support: &SupportSetND,
    members: &[Monomial],
    rng: &mut SplitMix64,
) -> SeriesTuple<R> {
    let n = support.nvars();
    let components = (0..n)
        .map(|_| {
            let count = 1 + rng.below(4);
            let terms: Vec<_> = (0..count)
                .map(|_| (rng.choose(members).clone(), ring.sample(rng)))
                .collect();
            MultiSeries::from_terms(ring.clone(), n, support.bound(), terms).expect("valid terms")
        })
        .collect();
    SeriesTuple::new(components).expect("consistent components")
}
