//! Strongly closed submonoids of the positive integers.
//!
//! A set `T` of positive integers is strongly closed when `1 ∈ T` and
//! `s + t - 1 ∈ T` for all `s, t ∈ T`. These are exactly the exponent sets for
//! which series supported on `T` are closed under composition. Shifting by one
//! turns them into additive submonoids of `N`: `T = 1 + S`. A [`StrongMonoid`]
//! is stored through that shift.
//!
//! The checks in this module take any [`ExponentSet`] and certify a property up
//! to an explicit bound.

use serde::Serialize;

use crate::addmonoid::{AdditiveMonoid, MonoidSummary};
use crate::error::{Error, Result};
use crate::verdict::{ExponentSet, Verdict, Witness};

/// A strongly closed submonoid `T` of the positive integers, stored as its
/// additive shadow `S = T - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongMonoid {
    shadow: AdditiveMonoid,
    origin_generators: Option<Vec<u64>>,
}

impl StrongMonoid {
    /// The smallest strongly closed set containing `gens`:
    /// `{1 + Σ u_a (a - 1)}` over nonnegative `u_a`.
    pub fn strong_closure(gens: &[u64]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&x| x == 0) {
            return Err(Error::InvalidGenerator(bad));
        }
        let shifted: Vec<u64> = gens.iter().filter(|&&x| x > 1).map(|&x| x - 1).collect();
        let mut origin = gens.to_vec();
        origin.sort_unstable();
        origin.dedup();
        Ok(StrongMonoid {
            shadow: AdditiveMonoid::from_generators(&shifted)?,
            origin_generators: Some(origin),
        })
    }

    /// `T = 1 + S`.
    pub fn from_additive(shadow: AdditiveMonoid) -> Self {
        StrongMonoid {
            shadow,
            origin_generators: None,
        }
    }

    /// `S = T - 1`.
    pub fn to_additive(&self) -> AdditiveMonoid {
        self.shadow.clone()
    }

    pub fn shadow(&self) -> &AdditiveMonoid {
        &self.shadow
    }

    pub fn origin_generators(&self) -> Option<&[u64]> {
        self.origin_generators.as_deref()
    }

    /// The trivial monoid `{1}`.
    pub fn trivial() -> Self {
        Self::from_additive(AdditiveMonoid::trivial())
    }

    /// All positive integers.
    pub fn everything() -> Self {
        Self::strong_closure(&[2]).expect("2 is a valid generator")
    }

    /// Minimal generators of `T` as a strongly closed set.
    pub fn minimal_generators(&self) -> Vec<u64> {
        self.shadow
            .minimal_generators()
            .into_iter()
            .map(|y| y + 1)
            .collect()
    }

    /// Members of `T` in `1..=bound`.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (1..=bound).filter(|&t| self.contains(t)).collect()
    }

    /// Least `c` such that from `c` on, `t ∈ T` iff `t ≡ 1` modulo the period.
    pub fn conductor(&self) -> u64 {
        self.shadow.conductor() + 1
    }

    /// The shifted shadow summary: generators, period, conductor and gaps of
    /// `T` itself.
    pub fn summary(&self) -> MonoidSummary {
        let s = self.shadow.summary();
        MonoidSummary {
            generators: s.generators.iter().map(|y| y + 1).collect(),
            gcd: s.gcd,
            conductor: s.conductor + 1,
            gaps: s.gaps.iter().map(|y| y + 1).collect(),
        }
    }
}

impl ExponentSet for StrongMonoid {
    fn contains(&self, t: u64) -> bool {
        t >= 1 && self.shadow.contains(t - 1)
    }
}

fn members_in(set: &impl ExponentSet, bound: u64) -> Vec<u64> {
    (1..=bound).filter(|&t| set.contains(t)).collect()
}

/// Checks `1 ∈ T` and `s + t - 1 ∈ T` for all members `s, t` with
/// `s + t - 1 <= bound`. The witness is the lexicographically least failing
/// pair.
pub fn is_strongly_closed(set: &impl ExponentSet, bound: u64) -> Result<Verdict> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound));
    }
    if !set.contains(1) {
        return Ok(Verdict::fail(Witness::MissingIdentity));
    }
    let members = members_in(set, bound);
    for &s in &members {
        for &t in &members {
            if s + t - 1 > bound {
                break;
            }
            if !set.contains(s + t - 1) {
                return Ok(Verdict::fail(Witness::Pair { s, t }));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Checks the partition form of strong closure: for every member `s <= s_max`,
/// every composition `s = s_1 + ... + s_k` with parts `>= 1`, and members
/// `t_1, ..., t_k`, the sum `Σ s_i t_i` is a member whenever it is `<= bound`.
///
/// The set of reachable sums is computed by a table over (parts used, sum),
/// which covers the same cases as enumerating every composition and tuple.
/// The witness has the least `s`, then the least offending sum, then the
/// lexicographically least sequence of `(s_i, t_i)` pairs.
pub fn satisfies_partition_condition(
    set: &impl ExponentSet,
    bound: u64,
    s_max: u64,
) -> Result<Verdict> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound));
    }
    if !set.contains(1) {
        return Ok(Verdict::fail(Witness::MissingIdentity));
    }
    let s_max = s_max.min(bound) as usize;
    let bound = bound as usize;
    let members: Vec<usize> = members_in(set, bound as u64)
        .into_iter()
        .map(|t| t as usize)
        .collect();

    // reach[j][v]: some sequence of pairs has parts summing to j, weighted sum v
    let mut reach = vec![vec![false; bound + 1]; s_max + 1];
    reach[0][0] = true;
    for j in 1..=s_max {
        for p in 1..=j {
            for &t in &members {
                let w = p * t;
                if w > bound {
                    break;
                }
                for v in w..=bound {
                    if reach[j - p][v - w] {
                        reach[j][v] = true;
                    }
                }
            }
        }
    }

    for s in (1..=s_max).filter(|&s| set.contains(s as u64)) {
        if let Some(sum) = (1..=bound).find(|&v| reach[s][v] && !set.contains(v as u64)) {
            let (parts, ts) = least_pairs(&reach, &members, s, sum);
            return Ok(Verdict::fail(Witness::Partition {
                s: s as u64,
                parts,
                ts,
                sum: sum as u64,
            }));
        }
    }
    Ok(Verdict::pass())
}

/// Greedy reconstruction of the lexicographically least pair sequence with
/// parts summing to `s` and weighted sum `v`.
fn least_pairs(reach: &[Vec<bool>], members: &[usize], s: usize, v: usize) -> (Vec<u64>, Vec<u64>) {
    let (mut s, mut v) = (s, v);
    let (mut parts, mut ts) = (Vec::new(), Vec::new());
    while s > 0 {
        let (p, t) = (1..=s)
            .flat_map(|p| members.iter().map(move |&t| (p, t)))
            .find(|&(p, t)| p * t <= v && reach[s - p][v - p * t])
            .expect("reachable state has a predecessor");
        parts.push(p as u64);
        ts.push(t as u64);
        s -= p;
        v -= p * t;
    }
    (parts, ts)
}

/// Checks that `s * t ∈ T` for all members `s, t` with `s * t <= bound`.
pub fn is_mult_closed(set: &impl ExponentSet, bound: u64) -> Verdict {
    let members = members_in(set, bound);
    for &s in &members {
        for &t in &members {
            if s.saturating_mul(t) > bound {
                break;
            }
            if !set.contains(s * t) {
                return Verdict::fail(Witness::Product { s, t });
            }
        }
    }
    Verdict::pass()
}

/// Primes found in the progression `a + k(a - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeWitnesses {
    pub a: u64,
    /// `(k, p)` with `p = a + k(a - 1)`, in increasing `k`.
    pub primes: Vec<(u64, u64)>,
    /// False when fewer than the requested count were found up to `k_max`.
    pub complete: bool,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The first `count` primes among `a + k(a - 1)`, `0 <= k <= k_max`.
///
/// Each such prime lies in the strong closure of `{a}`, and no prime is a
/// product of two smaller members, so every one of them is needed to generate
/// that closure multiplicatively.
pub fn multiplicative_prime_witnesses(a: u64, count: usize, k_max: u64) -> Result<PrimeWitnesses> {
    if a < 2 {
        return Err(Error::InvalidGenerator(a));
    }
    let step = a - 1;
    let mut primes = Vec::new();
    for k in 0..=k_max {
        if primes.len() >= count {
            break;
        }
        let Some(p) = k.checked_mul(step).and_then(|x| x.checked_add(a)) else {
            break;
        };
        if is_prime(p) {
            primes.push((k, p));
        }
    }
    Ok(PrimeWitnesses {
        a,
        complete: primes.len() >= count,
        primes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::ExplicitSet;

    fn one_and_evens(bound: u64) -> ExplicitSet {
        ExplicitSet::new((1..=bound).filter(|&t| t == 1 || t % 2 == 0))
    }

    /// Fixed point of `(s, t) -> s + t - 1` starting from `X ∪ {1}`, capped.
    fn pair_closure(gens: &[u64], cap: u64) -> Vec<bool> {
        let mut member = vec![false; cap as usize + 1];
        member[1] = true;
        for &g in gens {
            if g <= cap {
                member[g as usize] = true;
            }
        }
        loop {
            let mut changed = false;
            for s in 1..=cap {
                for t in 1..=cap {
                    let v = s + t - 1;
                    if v <= cap && member[s as usize] && member[t as usize] && !member[v as usize] {
                        member[v as usize] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                return member;
            }
        }
    }

    #[test]
    fn closure_examples() {
        let odd = StrongMonoid::strong_closure(&[3]).unwrap();
        assert_eq!(odd.members_up_to(20), vec![1, 3, 5, 7, 9, 11, 13, 15, 17, 19]);
        let oracle = pair_closure(&[3], 100);
        for t in 1..=100 {
            assert_eq!(odd.contains(t), oracle[t as usize], "t={t}");
        }

        let all = StrongMonoid::strong_closure(&[2]).unwrap();
        assert!((1..=100).all(|t| all.contains(t)));
        assert!(!all.contains(0));

        let t46 = StrongMonoid::strong_closure(&[4, 6]).unwrap();
        assert_eq!(t46.members_up_to(12), vec![1, 4, 6, 7, 9, 10, 11, 12]);
        assert_eq!(t46.to_additive(), AdditiveMonoid::from_generators(&[3, 5]).unwrap());
    }

    #[test]
    fn closure_rejects_zero() {
        assert_eq!(
            StrongMonoid::strong_closure(&[0, 3]),
            Err(Error::InvalidGenerator(0))
        );
    }

    #[test]
    fn trivial_monoid() {
        let t = StrongMonoid::from_additive(AdditiveMonoid::trivial());
        assert_eq!(t.members_up_to(30), vec![1]);
        assert_eq!(StrongMonoid::strong_closure(&[1]).unwrap().members_up_to(30), vec![1]);
        assert!(is_strongly_closed(&t, 30).unwrap().holds);
        assert!(satisfies_partition_condition(&t, 30, 6).unwrap().holds);
    }

    #[test]
    fn strong_closure_check_examples() {
        let v = is_strongly_closed(&one_and_evens(10), 10).unwrap();
        assert_eq!(v, Verdict::fail(Witness::Pair { s: 2, t: 2 }));

        let k5 = |t: u64| t == 1 || t >= 5;
        assert!(is_strongly_closed(&k5, 50).unwrap().holds);

        let d3 = |t: u64| t >= 1 && (t - 1).is_multiple_of(3);
        assert!(is_strongly_closed(&d3, 50).unwrap().holds);

        assert!(is_strongly_closed(&one_and_evens(10), 0).is_err());
        let no_one = ExplicitSet::new([2, 3]);
        assert_eq!(
            is_strongly_closed(&no_one, 10).unwrap(),
            Verdict::fail(Witness::MissingIdentity)
        );
    }

    #[test]
    fn partition_condition_examples() {
        let odd = StrongMonoid::strong_closure(&[3]).unwrap();
        assert!(satisfies_partition_condition(&odd, 40, 7).unwrap().holds);

        let v = satisfies_partition_condition(&one_and_evens(12), 12, 4).unwrap();
        assert_eq!(
            v,
            Verdict::fail(Witness::Partition {
                s: 2,
                parts: vec![1, 1],
                ts: vec![1, 2],
                sum: 3
            })
        );

        let trivial = ExplicitSet::new([1]);
        for b in [1, 5, 30] {
            assert!(satisfies_partition_condition(&trivial, b, 6).unwrap().holds);
        }
    }

    /// Enumerates every composition of `s` and every member tuple.
    fn brute_force_b(set: &ExplicitSet, bound: u64, s_max: u64) -> bool {
        fn rec(set: &ExplicitSet, bound: u64, remaining: u64, acc: u64) -> bool {
            if remaining == 0 {
                return set.contains(acc);
            }
            for p in 1..=remaining {
                for t in set.iter() {
                    let v = acc + p * t;
                    if v > bound {
                        break;
                    }
                    if !rec(set, bound, remaining - p, v) {
                        return false;
                    }
                }
            }
            true
        }
        set.contains(1)
            && set
                .iter()
                .filter(|&s| s <= s_max)
                .all(|s| rec(set, bound, s, 0))
    }

    #[test]
    fn partition_table_matches_enumeration() {
        // every subset of {2..9} together with 1, B = 14, s_max = 4
        for mask in 0u32..(1 << 8) {
            let set = ExplicitSet::new(
                std::iter::once(1).chain((2..=9).filter(|t| mask & (1 << (t - 2)) != 0)),
            );
            let table = satisfies_partition_condition(&set, 14, 4).unwrap();
            assert_eq!(table.holds, brute_force_b(&set, 14, 4), "mask {mask:b}");
            if let Some(Witness::Partition { s, parts, ts, sum }) = table.witness {
                assert_eq!(parts.iter().sum::<u64>(), s);
                assert!(ts.iter().all(|&t| set.contains(t)));
                let recomputed: u64 = parts.iter().zip(&ts).map(|(p, t)| p * t).sum();
                assert_eq!(recomputed, sum);
                assert!(!set.contains(sum));
            }
        }
    }

    #[test]
    fn mult_closure_examples() {
        let odd = StrongMonoid::strong_closure(&[3]).unwrap();
        assert!(is_mult_closed(&odd, 200).holds);
        let t46 = StrongMonoid::strong_closure(&[4, 6]).unwrap();
        assert!(is_mult_closed(&t46, 200).holds);
        // multiplicatively closed but not strongly closed
        let evens = one_and_evens(20);
        assert!(is_mult_closed(&evens, 20).holds);
        assert!(!is_strongly_closed(&evens, 20).unwrap().holds);
        // {1, 3} is not multiplicatively closed: 9 is missing
        assert_eq!(
            is_mult_closed(&ExplicitSet::new([1, 3]), 20),
            Verdict::fail(Witness::Product { s: 3, t: 3 })
        );
    }

    #[test]
    fn bijection_round_trip() {
        let odd = StrongMonoid::strong_closure(&[3]).unwrap();
        assert_eq!(odd.to_additive(), AdditiveMonoid::from_generators(&[2]).unwrap());
        let back = StrongMonoid::from_additive(odd.to_additive());
        assert_eq!(back.members_up_to(200), odd.members_up_to(200));
        let one = StrongMonoid::from_additive(AdditiveMonoid::from_generators(&[]).unwrap());
        assert_eq!(one.members_up_to(50), vec![1]);
    }

    #[test]
    fn summary_is_shifted() {
        let t = StrongMonoid::strong_closure(&[4, 6, 9]).unwrap();
        let s = t.summary();
        assert_eq!(s.generators, vec![4, 6]);
        assert_eq!(s.conductor, 9);
        assert_eq!(s.gaps, vec![2, 3, 5, 8]);
    }

    #[test]
    fn prime_witness_examples() {
        let w = multiplicative_prime_witnesses(3, 4, 1000).unwrap();
        assert_eq!(w.primes, vec![(0, 3), (1, 5), (2, 7), (4, 11)]);
        assert!(w.complete);
        let w = multiplicative_prime_witnesses(4, 3, 1000).unwrap();
        assert_eq!(w.primes, vec![(1, 7), (3, 13), (5, 19)]);
        let w = multiplicative_prime_witnesses(2, 3, 1000).unwrap();
        assert_eq!(w.primes.iter().map(|p| p.1).collect::<Vec<_>>(), vec![2, 3, 5]);

        let partial = multiplicative_prime_witnesses(4, 3, 2).unwrap();
        assert_eq!(partial.primes, vec![(1, 7)]);
        assert!(!partial.complete);
        assert!(multiplicative_prime_witnesses(1, 3, 10).is_err());
    }

    #[test]
    fn trial_division() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
    }

    #[test]
    fn closure_matches_fixed_point_exhaustive() {
        let pool: Vec<u64> = (2..=12).collect();
        let mut sets: Vec<Vec<u64>> = vec![vec![]];
        for (i, &a) in pool.iter().enumerate() {
            sets.push(vec![a]);
            for (j, &b) in pool.iter().enumerate().skip(i + 1) {
                sets.push(vec![a, b]);
                for &c in pool.iter().skip(j + 1) {
                    sets.push(vec![a, b, c]);
                }
            }
        }
        for gens in sets {
            let t = StrongMonoid::strong_closure(&gens).unwrap();
            let oracle = pair_closure(&gens, 60);
            for n in 1..=60 {
                assert_eq!(t.contains(n), oracle[n as usize], "{gens:?} at {n}");
            }
            assert!(is_mult_closed(&t, 400).holds);
        }
    }
}
