//! Finitely generated submonoids of `(N, +)`.
//!
//! Membership is decided exactly for every natural number: a table is kept up
//! to the conductor `c`, and beyond it `n` is a member iff the gcd of the
//! generators divides `n`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest table the conductor search will build.
pub const TABLE_LIMIT: u64 = 1 << 26;

/// The additive submonoid of `N` generated by a finite set of positive
/// integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveMonoid {
    generators: Vec<u64>,
    gcd: u64,
    conductor: u64,
    table: Vec<bool>,
}

/// Plain-data summary used for display and JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidSummary {
    pub generators: Vec<u64>,
    pub gcd: u64,
    pub conductor: u64,
    pub gaps: Vec<u64>,
}

impl AdditiveMonoid {
    /// The trivial monoid `{0}`.
    pub fn trivial() -> Self {
        AdditiveMonoid {
            generators: Vec::new(),
            gcd: 0,
            conductor: 0,
            table: vec![true],
        }
    }

    /// Builds the monoid generated by `gens`. An empty set gives `{0}`.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&g| g == 0) {
            return Err(Error::InvalidGenerator(bad));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        if generators.is_empty() {
            return Ok(Self::trivial());
        }

        let gcd = generators.iter().fold(0, |acc, &g| acc.gcd(&g));
        let min = generators[0];
        // Once `min / gcd` consecutive multiples of the gcd are members, adding
        // `min` reaches every later multiple.
        let run_needed = min / gcd;
        let mut table = vec![true];
        let mut run = 1u64;
        let mut run_start = 0u64;
        let mut n = 0u64;
        while run < run_needed {
            n += 1;
            if n > TABLE_LIMIT {
                return Err(Error::ConductorTooLarge { limit: TABLE_LIMIT });
            }
            let member = generators
                .iter()
                .take_while(|&&g| g <= n)
                .any(|&g| table[(n - g) as usize]);
            table.push(member);
            if n.is_multiple_of(gcd) {
                if member {
                    if run == 0 {
                        run_start = n;
                    }
                    run += 1;
                } else {
                    run = 0;
                }
            }
        }
        let conductor = run_start;
        table.truncate(conductor as usize + 1);
        Ok(AdditiveMonoid {
            generators,
            gcd,
            conductor,
            table,
        })
    }

    /// The generating set as given (sorted, deduplicated).
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Gcd of the generators; 0 for the trivial monoid.
    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// Least `c` such that every multiple of the gcd from `c` on is a member.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Membership flags for `0..=conductor`.
    pub fn table(&self) -> &[bool] {
        &self.table
    }

    pub fn contains(&self, n: u64) -> bool {
        if n <= self.conductor {
            self.table[n as usize]
        } else {
            self.gcd != 0 && n.is_multiple_of(self.gcd)
        }
    }

    /// Non-members below the conductor.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&n| !self.contains(n)).collect()
    }

    /// The unique minimal generating set: nonzero members that are not a sum
    /// of two nonzero members.
    pub fn minimal_generators(&self) -> Vec<u64> {
        // Irreducible members must appear in any generating set, so only the
        // given generators need testing.
        self.generators
            .iter()
            .copied()
            .filter(|&g| !(1..=g / 2).any(|a| self.contains(a) && self.contains(g - a)))
            .collect()
    }

    pub fn summary(&self) -> MonoidSummary {
        MonoidSummary {
            generators: self.minimal_generators(),
            gcd: self.gcd,
            conductor: self.conductor,
            gaps: self.gaps(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent coin-problem table over `0..=limit`.
    fn dp_oracle(gens: &[u64], limit: u64) -> Vec<bool> {
        let mut reach = vec![false; limit as usize + 1];
        reach[0] = true;
        for n in 1..=limit as usize {
            reach[n] = gens.iter().any(|&g| g as usize <= n && reach[n - g as usize]);
        }
        reach
    }

    fn members(s: &AdditiveMonoid, limit: u64) -> Vec<bool> {
        (0..=limit).map(|n| s.contains(n)).collect()
    }

    #[test]
    fn three_five() {
        let s = AdditiveMonoid::from_generators(&[3, 5]).unwrap();
        assert_eq!(s.gcd(), 1);
        assert_eq!(s.conductor(), 8);
        assert_eq!(s.gaps(), vec![1, 2, 4, 7]);
        assert_eq!(members(&s, 60), dp_oracle(&[3, 5], 60));
        assert!(!s.contains(7));
        assert!(s.contains(1000));
        assert!(s.contains(0));
    }

    #[test]
    fn trivial_and_single() {
        let s = AdditiveMonoid::from_generators(&[]).unwrap();
        assert_eq!((s.gcd(), s.conductor()), (0, 0));
        assert!(s.contains(0));
        assert!(!s.contains(1) && !s.contains(1000));
        assert!(s.minimal_generators().is_empty());

        let s = AdditiveMonoid::from_generators(&[2]).unwrap();
        assert_eq!((s.gcd(), s.conductor()), (2, 0));
        assert!(s.contains(10) && !s.contains(11));
        assert_eq!(s.minimal_generators(), vec![2]);
    }

    #[test]
    fn conductor_with_gcd() {
        // <4, 6> = 2 * <2, 3>; conductor of <2,3> is 2, so here 4.
        let s = AdditiveMonoid::from_generators(&[6, 4]).unwrap();
        assert_eq!((s.gcd(), s.conductor()), (2, 4));
        assert_eq!(s.gaps(), vec![1, 2, 3]);
        assert_eq!(members(&s, 60), dp_oracle(&[4, 6], 60));
    }

    #[test]
    fn rejects_zero() {
        assert_eq!(
            AdditiveMonoid::from_generators(&[3, 0]),
            Err(Error::InvalidGenerator(0))
        );
    }

    #[test]
    fn minimal_generator_examples() {
        let s = AdditiveMonoid::from_generators(&[3, 5, 8]).unwrap();
        assert_eq!(s.minimal_generators(), vec![3, 5]);
        let t = AdditiveMonoid::from_generators(&[3, 5]).unwrap();
        assert_eq!(members(&s, 60), members(&t, 60));

        let s = AdditiveMonoid::from_generators(&[4, 6]).unwrap();
        assert_eq!(s.minimal_generators(), vec![4, 6]);
        assert_eq!(members(&s, 60), dp_oracle(&[4, 6], 60));
    }

    #[test]
    fn large_generators() {
        let s = AdditiveMonoid::from_generators(&[50, 73]).unwrap();
        // Frobenius number of two coprime generators is ab - a - b.
        assert_eq!(s.conductor(), 50 * 73 - 50 - 73 + 1);
        assert_eq!(members(&s, 5000), dp_oracle(&[50, 73], 5000));
    }

    fn generator_sets() -> impl Strategy<Value = Vec<u64>> {
        proptest::collection::vec(1u64..=15, 0..=4)
    }

    proptest! {
        #[test]
        fn agrees_with_dp(gens in generator_sets()) {
            let s = AdditiveMonoid::from_generators(&gens).unwrap();
            prop_assert_eq!(members(&s, 200), dp_oracle(&gens, 200));
        }

        #[test]
        fn conductor_is_minimal(gens in generator_sets()) {
            let s = AdditiveMonoid::from_generators(&gens).unwrap();
            let c = s.conductor();
            if c > 0 {
                // c - gcd is a gap, otherwise c would not be least
                prop_assert!(!s.contains(c - s.gcd()));
            }
            let dp = dp_oracle(&gens, c + 200);
            for n in c..=c + 200 {
                if s.gcd() != 0 && n % s.gcd() == 0 {
                    prop_assert!(dp[n as usize]);
                }
            }
        }

        #[test]
        fn minimal_generators_regenerate(gens in generator_sets()) {
            let s = AdditiveMonoid::from_generators(&gens).unwrap();
            let min = s.minimal_generators();
            let t = AdditiveMonoid::from_generators(&min).unwrap();
            let top = s.conductor() + 2 * gens.iter().max().copied().unwrap_or(0) + 10;
            prop_assert_eq!(members(&s, top), members(&t, top));
            // no proper subset generates: dropping any generator loses it
            for (i, &g) in min.iter().enumerate() {
                let mut rest = min.clone();
                rest.remove(i);
                let r = AdditiveMonoid::from_generators(&rest).unwrap();
                prop_assert!(!r.contains(g));
            }
        }

        #[test]
        fn closed_under_addition(gens in generator_sets(), pairs in proptest::collection::vec((0u64..300, 0u64..300), 500)) {
            let s = AdditiveMonoid::from_generators(&gens).unwrap();
            for (a, b) in pairs {
                if s.contains(a) && s.contains(b) {
                    prop_assert!(s.contains(a + b));
                }
            }
        }
    }
}
