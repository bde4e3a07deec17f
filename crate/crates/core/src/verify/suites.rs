use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use super::oracle::newton_inverse_oracle;
use super::rng::SplitMix64;
use super::sample::{random_series, SampleRing};
use super::{CaseWitness, Property, Report, TrialConfig};
use crate::addmonoid::AdditiveMonoid;
use crate::error::Result;
use crate::expmonoid::{is_mult_closed, is_strongly_closed, satisfies_partition_condition, StrongMonoid};
use crate::ring::{AnyRing, Integers, Ring};
use crate::series::TruncatedSeries;
use crate::verdict::{ExplicitSet, ExponentSet, Verdict, Witness};
use crate::with_ring;

/// Exponent cap for the additive round trip.
const ROUND_TRIP_CAP: u64 = 200;
/// Cap for comparing the closure formula with the fixed point.
const FIXED_POINT_CAP: u64 = 100;
/// Bound for the multiplicative closure check.
const MULT_BOUND: u64 = 400;
/// Probes allowed per escape search.
pub(crate) const MAX_PROBES: u64 = 1000;

/// Every `X ⊆ {2, ..., 12}` with `|X| <= 3`, by size and then
/// lexicographically. There are 232 of them, the empty set included.
pub fn small_generator_family() -> Vec<Vec<u64>> {
    let pool: Vec<u64> = (2..=12).collect();
    let mut out = vec![Vec::new()];
    for &a in &pool {
        out.push(vec![a]);
    }
    for (i, &a) in pool.iter().enumerate() {
        for &b in &pool[i + 1..] {
            out.push(vec![a, b]);
        }
    }
    for (i, &a) in pool.iter().enumerate() {
        for (j, &b) in pool.iter().enumerate().skip(i + 1) {
            for &c in &pool[j + 1..] {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Least set containing `{1} ∪ gens` and closed under `(s, t) ↦ s + t - 1`,
/// restricted to `[0, cap]`, by fixed-point iteration. Index `t` of the result
/// is the membership of `t`. Exact on `[1, cap]` since `s + t - 1 >= max(s, t)`.
pub fn pair_closure(gens: &[u64], cap: u64) -> Vec<bool> {
    let cap = cap as usize;
    let mut member = vec![false; cap + 1];
    if cap >= 1 {
        member[1] = true;
    }
    for &g in gens {
        if (1..=cap as u64).contains(&g) {
            member[g as usize] = true;
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for s in 1..=cap {
            if !member[s] {
                continue;
            }
            for t in 1..=cap + 1 - s {
                if member[t] && !member[s + t - 1] {
                    member[s + t - 1] = true;
                    changed = true;
                }
            }
        }
    }
    member
}

fn is_pair_closed(set: &ExplicitSet, bound: u64) -> bool {
    let members: Vec<u64> = set.iter().filter(|&t| t <= bound).collect();
    let closure = pair_closure(&members, bound);
    (1..=bound).all(|t| closure[t as usize] == set.contains(t))
}

/// `count` seeded sets in `[1, bound]`, each containing 1 and not closed
/// under `(s, t) ↦ s + t - 1`. Even indices perturb a strong closure by
/// toggling one or two exponents; odd indices keep each exponent in
/// `[2, bound]` with probability 1/4.
pub fn random_exponent_sets(seed: u64, count: usize, bound: u64) -> Vec<ExplicitSet> {
    let mut out = Vec::with_capacity(count);
    let mut draw = 0u64;
    while out.len() < count && bound >= 3 {
        let mut rng = SplitMix64::for_case(seed, "sets", draw);
        draw += 1;
        let mut members: BTreeSet<u64> = if out.len() % 2 == 0 {
            let k = 1 + rng.below(3);
            let gens: Vec<u64> = (0..k).map(|_| 2 + rng.below(14)).collect();
            let closure = StrongMonoid::strong_closure(&gens).expect("generators are positive");
            let mut m: BTreeSet<u64> = closure.members_up_to(bound).into_iter().collect();
            for _ in 0..1 + rng.below(2) {
                let x = 2 + rng.below(bound - 1);
                if !m.remove(&x) {
                    m.insert(x);
                }
            }
            m
        } else {
            (2..=bound).filter(|_| rng.below(4) == 0).collect()
        };
        members.insert(1);
        let set = ExplicitSet::new(members);
        if !is_pair_closed(&set, bound) {
            out.push(set);
        }
    }
    out
}

fn set_text(set: &impl ExponentSet, bound: u64) -> String {
    let members: Vec<String> = (1..=bound)
        .filter(|&t| set.contains(t))
        .map(|t| t.to_string())
        .collect();
    format!("{{{}}} up to {bound}", members.join(","))
}

pub(crate) fn monoid_text(t: &StrongMonoid) -> String {
    let gens = t.minimal_generators();
    if gens.is_empty() {
        "{1}".to_string()
    } else {
        let gens: Vec<String> = gens.iter().map(u64::to_string).collect();
        format!("strong closure of {{{}}}", gens.join(","))
    }
}

/// An escaping composition: `f` and `g` supported on `T` with `f ∘ g` not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Escape {
    pub f: String,
    pub g: String,
    pub exponent: u64,
    pub coefficient: String,
    /// Probes tried, this one included.
    pub probes: u64,
    pub structured: bool,
}

fn escape_exponent<R: Ring>(h: &TruncatedSeries<R>, set: &impl ExponentSet) -> Option<u64> {
    match h.is_supported_on(set).witness {
        Some(Witness::Exponent { exponent }) => Some(exponent),
        _ => None,
    }
}

/// Searches over `Z` for `f`, `g` supported on `set ∩ [1, precision]` whose
/// composition leaves `set`. The sweep tries `x^s ∘ (x + x^t)` for members
/// `s, t >= 2` in lexicographic order, then random series with coefficients
/// in `[1, 9]`, where no cancellation can hide an exponent.
pub fn find_escape(set: &impl ExponentSet, precision: usize, seed: u64, max_probes: u64) -> Option<Escape> {
    let ring = Integers;
    let members: Vec<usize> = (1..=precision).filter(|&t| set.contains(t as u64)).collect();
    let mut probes = 0;
    let found = |f: TruncatedSeries<Integers>, g: TruncatedSeries<Integers>, probes, structured| {
        let h = f.compose(&g).expect("same ring");
        escape_exponent(&h, set).map(|e| Escape {
            f: f.to_string(),
            g: g.to_string(),
            exponent: e,
            coefficient: h.coeff(e as usize).to_string(),
            probes,
            structured,
        })
    };
    let one = BigInt::from(1);
    for &s in members.iter().filter(|&&s| s >= 2) {
        for &t in members.iter().filter(|&&t| t >= 2 && s + t - 1 <= precision) {
            if probes == max_probes {
                return None;
            }
            probes += 1;
            let f = TruncatedSeries::from_terms(ring, precision, [(s, one.clone())]).ok()?;
            let g = TruncatedSeries::from_terms(ring, precision, [(1, one.clone()), (t, one.clone())]).ok()?;
            if let Some(e) = found(f, g, probes, true) {
                return Some(e);
            }
        }
    }
    while probes < max_probes {
        let mut rng = SplitMix64::for_case(seed, "escape", probes);
        probes += 1;
        let mut positive = || {
            let mut terms = Vec::new();
            for &e in &members {
                if rng.coin() {
                    terms.push((e, BigInt::from(1 + rng.below(9))));
                }
            }
            TruncatedSeries::from_terms(ring, precision, terms).ok()
        };
        let (f, g) = (positive()?, positive()?);
        if let Some(e) = found(f, g, probes, false) {
            return Some(e);
        }
    }
    None
}

/// Whether a failed pair condition only involves pairs the partition check
/// cannot reach: its least failing pair `(s, t)`, which has the least `s` of
/// all failing pairs, has `s > s_max`.
fn beyond_cap(pair: &Verdict, s_max: u64) -> bool {
    matches!(pair.witness, Some(Witness::Pair { s, .. }) if s > s_max)
}

fn ring_list(config: &TrialConfig) -> Result<Vec<AnyRing>> {
    config.rings.iter().map(|&d| AnyRing::from_descriptor(d)).collect()
}

/// Random pairs supported on `set`; each composition must stay on `set`.
#[allow(clippy::too_many_arguments)]
fn composition_trials<R: SampleRing>(
    ring: &R,
    set: &impl ExponentSet,
    set_label: &str,
    precision: usize,
    trials: usize,
    seed: u64,
    stream: &str,
    prop: &mut Property,
) -> Result<()> {
    let stream = format!("{stream}/{}", ring.descriptor());
    for case in 0..trials as u64 {
        let mut rng = SplitMix64::for_case(seed, &stream, case);
        let f = random_series(ring, set, precision, false, &mut rng);
        let g = random_series(ring, set, precision, false, &mut rng);
        let h = f.compose(&g)?;
        prop.check(escape_exponent(&h, set).map(|e| {
            CaseWitness::new(
                case,
                ring.descriptor(),
                [("T", set_label.to_string()), ("f", f.to_string()), ("g", g.to_string())],
                format!("f∘g has coefficient {} at x^{e}, outside T", ring.format_elem(&h.coeff(e as usize))),
            )
        }));
    }
    Ok(())
}

fn main_compositions<R: SampleRing>(
    ring: &R,
    config: &TrialConfig,
    target: &StrongMonoid,
    target_label: &str,
    closures: &[StrongMonoid],
    prop: &mut Property,
) -> Result<()> {
    let stream = "main/compose";
    composition_trials(ring, target, target_label, config.precision, config.trials, config.seed, stream, prop)?;
    for (i, t) in closures.iter().enumerate() {
        let stream = format!("main/family/{i}");
        composition_trials(ring, t, &monoid_text(t), config.precision.min(20), 1, config.seed, &stream, prop)?;
    }
    Ok(())
}

/// Main equivalence: partition and pair conditions agree (a disagreement
/// whose every failing pair has `s > s_max` is counted under coverage
/// `beyond_s_max_sets` instead, since the capped partition check cannot see it), the closure formula
/// matches the fixed point, the additive correspondence round-trips, strong
/// closure implies multiplicative closure, strongly closed `T` keeps
/// compositions on `T`, and every non-closed set admits an escape.
pub fn check_theorem_main(config: &TrialConfig, gens: &[u64]) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let rings = ring_list(config)?;
    let target = StrongMonoid::strong_closure(gens)?;
    let target_label = monoid_text(&target);
    let bound = config.bound;
    let mut coverage = BTreeMap::new();

    let family = small_generator_family();
    let closures: Vec<StrongMonoid> = family
        .iter()
        .map(|x| StrongMonoid::strong_closure(x))
        .collect::<Result<_>>()?;
    let mut sets: Vec<(String, ExplicitSet)> = Vec::new();
    for (x, t) in family.iter().zip(&closures) {
        sets.push((monoid_text(t), ExplicitSet::truncate(t, bound)));
        let raw = ExplicitSet::new(std::iter::once(1).chain(x.iter().copied()));
        sets.push((set_text(&raw, bound), raw));
    }
    for set in random_exponent_sets(config.seed, 50, bound) {
        sets.push((set_text(&set, bound), set));
    }

    let mut b_iff_c = Property::hold("partition_condition_matches_pair_condition");
    let mut escapes = Property::hold("non_closed_sets_escape");
    let mut distinct = BTreeSet::new();
    let mut non_closed = BTreeSet::new();
    let mut cap_limited = 0;
    for (case, (label, set)) in sets.iter().enumerate() {
        let c = is_strongly_closed(set, bound)?;
        let b = satisfies_partition_condition(set, bound, config.s_max)?;
        let key: Vec<u64> = set.iter().filter(|&t| t <= bound).collect();
        distinct.insert(key.clone());
        let disagree = c.holds != b.holds;
        if disagree && beyond_cap(&c, config.s_max) {
            cap_limited += 1;
        }
        b_iff_c.check((disagree && !beyond_cap(&c, config.s_max)).then(|| {
            CaseWitness::new(
                case as u64,
                "none",
                [("T", label.clone()), ("bound", bound.to_string()), ("s_max", config.s_max.to_string())],
                format!("pair condition {c}; partition condition {b}"),
            )
        }));
        if !c.holds && non_closed.insert(key) {
            let escape = find_escape(set, bound as usize, config.seed, MAX_PROBES);
            escapes.check(match escape {
                Some(_) => None,
                None => Some(CaseWitness::new(
                    case as u64,
                    "z",
                    [("T", label.clone())],
                    format!("no escape in {MAX_PROBES} probes although {c}"),
                )),
            });
        }
    }
    coverage.insert("distinct_sets".into(), distinct.len() as u64);
    coverage.insert("non_closed_sets".into(), non_closed.len() as u64);
    coverage.insert("beyond_s_max_sets".into(), cap_limited);

    let mut fixed_point = Property::hold("closure_formula_matches_fixed_point");
    let mut mult = Property::hold("strong_closure_is_mult_closed");
    for (case, (x, t)) in family.iter().zip(&closures).enumerate() {
        let fp = pair_closure(x, FIXED_POINT_CAP);
        let first = (1..=FIXED_POINT_CAP).find(|&n| fp[n as usize] != t.contains(n));
        fixed_point.check(first.map(|n| {
            CaseWitness::new(
                case as u64,
                "none",
                [("X", format!("{x:?}"))],
                format!("membership of {n} differs: formula {}, fixed point {}", t.contains(n), fp[n as usize]),
            )
        }));
        let v = is_mult_closed(t, MULT_BOUND);
        mult.check((!v.holds).then(|| {
            CaseWitness::new(case as u64, "none", [("X", format!("{x:?}"))], v.to_string())
        }));
    }

    let mut round_trip = Property::hold("additive_round_trip");
    for case in 0..100u64 {
        let mut rng = SplitMix64::for_case(config.seed, "main/round_trip", case);
        let y: Vec<u64> = (1..=15).filter(|_| rng.below(4) == 0).collect();
        let s = AdditiveMonoid::from_generators(&y)?;
        let t = StrongMonoid::from_additive(s.clone());
        let back = t.to_additive();
        let again = StrongMonoid::from_additive(back.clone());
        let bad = (1..=ROUND_TRIP_CAP).find(|&n| {
            s.contains(n) != back.contains(n)
                || t.contains(n + 1) != s.contains(n)
                || again.contains(n) != t.contains(n)
        });
        round_trip.check(bad.map(|n| {
            CaseWitness::new(case, "none", [("S generators", format!("{y:?}"))], format!("membership of {n} differs"))
        }));
    }

    let mut compositions = Property::hold("compositions_stay_supported");
    for any in &rings {
        with_ring!(any, |r| main_compositions(r, config, &target, &target_label, &closures, &mut compositions))?;
    }

    let mut trivial = Property::hold("trivial_monoid_compositions");
    let one = StrongMonoid::trivial();
    for any in &rings {
        with_ring!(any, |r| composition_trials(
            r,
            &one,
            "{1}",
            config.precision,
            config.trials,
            config.seed,
            "main/trivial",
            &mut trivial,
        ))?;
    }

    let mut probe = Property::probe("one_plus_evens_escapes");
    let evens = ExplicitSet::new((1..=40).filter(|&t| t == 1 || t % 2 == 0));
    let f = TruncatedSeries::parse("x^2", Integers, 40)?.value;
    let g = TruncatedSeries::parse("x + x^2", Integers, 40)?.value;
    let h = f.compose(&g)?;
    probe.check(escape_exponent(&h, &evens).map(|e| {
        CaseWitness::new(
            0,
            "z",
            [("T", set_text(&evens, 40)), ("f", f.to_string()), ("g", g.to_string())],
            format!("f∘g = {h} has coefficient {} at x^{e}, outside T", h.coeff(e as usize)),
        )
    }));

    coverage.insert("compositions".into(), compositions.cases + trivial.cases + probe.cases);
    Report::new(
        "main",
        format!("T = {target_label}"),
        config,
        coverage,
        vec![b_iff_c, fixed_point, round_trip, mult, compositions, escapes, trivial, probe],
        start.elapsed(),
    )
}

struct InverseProps {
    right: Property,
    left: Property,
    support: Property,
    oracle: Property,
    involution: Property,
}

fn inverse_trials<R: SampleRing>(
    ring: &R,
    t: &StrongMonoid,
    label: &str,
    config: &TrialConfig,
    p: &mut InverseProps,
) -> Result<()> {
    let stream = format!("inverse/{}", ring.descriptor());
    let n = config.precision;
    let x = TruncatedSeries::identity(ring.clone(), n)?;
    for case in 0..config.trials as u64 {
        let mut rng = SplitMix64::for_case(config.seed, &stream, case);
        let f = random_series(ring, t, n, true, &mut rng);
        let g = f.invert()?;
        let w = |what: &str, detail: String| {
            CaseWitness::new(
                case,
                ring.descriptor(),
                [("T", label.to_string()), ("f", f.to_string()), ("g", g.to_string())],
                format!("{what}: {detail}"),
            )
        };
        let fg = f.compose(&g)?;
        p.right.check((fg != x).then(|| w("f∘g != x", fg.to_string())));
        let gf = g.compose(&f)?;
        p.left.check((gf != x).then(|| w("g∘f != x", gf.to_string())));
        p.support.check(
            escape_exponent(&g, t).map(|e| w("inverse leaves T", format!("coefficient at x^{e}"))),
        );
        let o = newton_inverse_oracle(&f)?;
        p.oracle.check((o != g).then(|| w("oracle differs", o.to_string())));
        let back = g.invert()?;
        p.involution.check((back != f).then(|| w("inverse of g is not f", back.to_string())));
    }
    Ok(())
}

fn spot_check(prop: &mut Property, case: u64, f: &str, n: usize, expected: &str) -> Result<()> {
    let f = TruncatedSeries::parse(f, Integers, n)?.value;
    let g = f.invert()?;
    let text = g.to_string();
    prop.check((text != expected).then(|| {
        CaseWitness::new(
            case,
            "z",
            [("f", f.to_string()), ("precision", n.to_string())],
            format!("inverse {text}, expected {expected}"),
        )
    }));
    Ok(())
}

/// Random invertible `f` on `T`: the inverse satisfies both identities, stays
/// on `T`, agrees with the independent oracle and inverts back to `f`.
pub fn check_inverse_support(config: &TrialConfig, t: &StrongMonoid) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let label = monoid_text(t);
    let mut p = InverseProps {
        right: Property::hold("right_inverse"),
        left: Property::hold("left_inverse"),
        support: Property::hold("inverse_supported"),
        oracle: Property::hold("oracle_agreement"),
        involution: Property::hold("inverse_involution"),
    };
    for any in &ring_list(config)? {
        with_ring!(any, |r| inverse_trials(r, t, &label, config, &mut p))?;
    }
    let mut spot = Property::hold("spot_checks");
    spot_check(&mut spot, 0, "x + x^2", 6, "x - x^2 + 2*x^3 - 5*x^4 + 14*x^5 - 42*x^6")?;
    spot_check(&mut spot, 1, "x + x^3", 7, "x - x^3 + 3*x^5 - 12*x^7")?;
    let mut coverage = BTreeMap::new();
    coverage.insert("inversions".into(), p.right.cases);
    Report::new(
        "inverse",
        format!("T = {label}"),
        config,
        coverage,
        vec![p.right, p.left, p.support, p.oracle, p.involution, spot],
        start.elapsed(),
    )
}

struct GroupProps {
    invertible: Property,
    supported: Property,
    anti: Property,
    identity: Property,
}

fn group_trials<R: SampleRing>(
    ring: &R,
    t: &StrongMonoid,
    label: &str,
    config: &TrialConfig,
    p: &mut GroupProps,
) -> Result<()> {
    let stream = format!("group/{}", ring.descriptor());
    let n = config.precision;
    let x = TruncatedSeries::identity(ring.clone(), n)?;
    for case in 0..config.trials as u64 {
        let mut rng = SplitMix64::for_case(config.seed, &stream, case);
        let f = random_series(ring, t, n, true, &mut rng);
        let g = random_series(ring, t, n, true, &mut rng);
        let h = f.compose(&g)?;
        let w = |what: String| {
            CaseWitness::new(
                case,
                ring.descriptor(),
                [("T", label.to_string()), ("f", f.to_string()), ("g", g.to_string())],
                what,
            )
        };
        p.invertible.check((!h.is_invertible()).then(|| w(format!("f∘g = {h} is not invertible"))));
        p.supported.check(escape_exponent(&h, t).map(|e| w(format!("f∘g leaves T at x^{e}"))));
        if h.is_invertible() {
            let lhs = h.invert()?;
            let rhs = g.invert()?.compose(&f.invert()?)?;
            p.anti.check((lhs != rhs).then(|| w(format!("inverse of f∘g is {lhs}, g⁻¹∘f⁻¹ is {rhs}"))));
        }
        let fx = f.compose(&x)?;
        let xf = x.compose(&f)?;
        p.identity.check((fx != f || xf != f).then(|| w(format!("f∘x = {fx}, x∘f = {xf}"))));
    }
    Ok(())
}

/// Invertible series on `T` form a group under composition: closure,
/// identity, and `(f∘g)⁻¹ = g⁻¹∘f⁻¹`.
pub fn check_group_axioms(config: &TrialConfig, t: &StrongMonoid) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let label = monoid_text(t);
    let mut p = GroupProps {
        invertible: Property::hold("composition_invertible"),
        supported: Property::hold("composition_supported"),
        anti: Property::hold("inverse_reverses_composition"),
        identity: Property::hold("identity_law"),
    };
    for any in &ring_list(config)? {
        with_ring!(any, |r| group_trials(r, t, &label, config, &mut p))?;
    }

    let mut spot = Property::hold("spot_check");
    let f = TruncatedSeries::parse("x + x^3", Integers, 9)?.value;
    let g = TruncatedSeries::parse("x + 3*x^3", Integers, 9)?.value;
    let lhs = f.compose(&g)?.invert()?;
    let rhs = g.invert()?.compose(&f.invert()?)?;
    spot.check((lhs != rhs).then(|| {
        CaseWitness::new(
            0,
            "z",
            [("f", f.to_string()), ("g", g.to_string())],
            format!("inverse of f∘g is {lhs}, g⁻¹∘f⁻¹ is {rhs}"),
        )
    }));

    let mut coverage = BTreeMap::new();
    coverage.insert("pairs".into(), p.invertible.cases);
    Report::new(
        "group",
        format!("T = {label}"),
        config,
        coverage,
        vec![p.invertible, p.supported, p.anti, p.identity, spot],
        start.elapsed(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_size() {
        let f = small_generator_family();
        assert_eq!(f.len(), 232);
        assert_eq!(f.iter().collect::<BTreeSet<_>>().len(), 232);
    }

    #[test]
    fn pair_closure_examples() {
        let odds = pair_closure(&[3], 20);
        assert!((1..=20).all(|t| odds[t] == (t % 2 == 1)));
        let c = pair_closure(&[4, 6], 12);
        let members: Vec<usize> = (1..=12).filter(|&t| c[t]).collect();
        assert_eq!(members, vec![1, 4, 6, 7, 9, 10, 11, 12]);
    }

    #[test]
    fn random_sets_are_non_closed_and_seeded() {
        let a = random_exponent_sets(3, 50, 60);
        assert_eq!(a.len(), 50);
        assert!(a.iter().all(|s| s.contains(1) && !is_pair_closed(s, 60)));
        assert_eq!(a, random_exponent_sets(3, 50, 60));
        assert_ne!(a, random_exponent_sets(4, 50, 60));
    }

    #[test]
    fn escape_for_one_plus_evens_is_the_structured_probe() {
        let t = ExplicitSet::new((1..=40).filter(|&t| t == 1 || t % 2 == 0));
        let e = find_escape(&t, 40, 0, MAX_PROBES).unwrap();
        assert_eq!((e.f.as_str(), e.g.as_str()), ("x^2", "x + x^2"));
        assert_eq!((e.exponent, e.coefficient.as_str(), e.probes), (3, "2", 1));
        assert!(e.structured);
    }

    #[test]
    fn no_escape_for_closed_set() {
        let t = StrongMonoid::strong_closure(&[4, 6]).unwrap();
        assert_eq!(find_escape(&t, 20, 0, 200), None);
    }

    #[test]
    fn main_suite_defaults_pass() {
        let config = TrialConfig {
            trials: 10,
            ..TrialConfig::default()
        };
        let r = check_theorem_main(&config, &[4, 6]).unwrap();
        assert!(r.passed, "{:#?}", r.properties.iter().filter(|p| !p.passed).collect::<Vec<_>>());
        assert!(r.coverage["distinct_sets"] >= 50);
        assert!(r.coverage["non_closed_sets"] >= 10);
        let probe = r.property("one_plus_evens_escapes").unwrap();
        assert_eq!(probe.witnesses.len(), 1);
        assert!(probe.witnesses[0].detail.contains("x^3"));
    }

    #[test]
    fn inverse_and_group_suites_pass() {
        let config = TrialConfig {
            trials: 5,
            precision: 15,
            ..TrialConfig::default()
        };
        let odds = StrongMonoid::strong_closure(&[3]).unwrap();
        assert!(check_inverse_support(&config, &odds).unwrap().passed);
        assert!(check_group_axioms(&config, &odds).unwrap().passed);
    }
}
