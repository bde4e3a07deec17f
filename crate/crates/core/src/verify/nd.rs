use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use super::rng::SplitMix64;
use super::sample::{random_tuple, SampleRing};
use super::suites::{monoid_text, MAX_PROBES};
use super::{CaseWitness, Property, Report, TrialConfig};
use crate::error::{Error, Result};
use crate::expmonoid::StrongMonoid;
use crate::multiseries::{Monomial, MultiSeries, SeriesTuple, SupportSetND};
use crate::ring::{AnyRing, Integers};
use crate::verdict::{ExplicitSet, Witness};
use crate::with_ring;

/// An escaping composition of tuples: `F`, `G` supported on `U` with a
/// component of `F ∘ G` leaving `U`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NdEscape {
    pub f: String,
    pub g: String,
    pub component: usize,
    pub monomial: Vec<u32>,
    pub norm: u64,
    pub coefficient: String,
    pub probes: u64,
    pub structured: bool,
}

fn escape_of(h: &SeriesTuple<Integers>, support: &SupportSetND) -> Option<(usize, Monomial)> {
    match h.is_supported_on(support).witness {
        Some(Witness::Component { index, monomial }) => Some((index, Monomial::new(monomial))),
        _ => None,
    }
}

fn monomial_series(n: usize, d: usize, terms: Vec<(Monomial, BigInt)>) -> Option<MultiSeries<Integers>> {
    MultiSeries::from_terms(Integers, n, d, terms).ok()
}

/// Searches over `Z` for tuples `F`, `G` supported on `support` whose
/// composition leaves it. Structured candidates come first, all of the form
/// `F = (x^u, x_2, ..., x_n)`: with `G = (g, ..., g)`, `g = x_1 + ... + x_n`,
/// which spreads `x^u` over every monomial of norm `|u|`; then with
/// `G = (x_1 + x^m, x_2, ..., x_n)`, which lifts `x^s ∘ (x + x^t)`. Random
/// tuples with coefficients in `[1, 9]` fill the remaining probes.
pub fn find_nd_escape(support: &SupportSetND, seed: u64, max_probes: u64) -> Option<NdEscape> {
    let n = support.nvars();
    let d = support.bound();
    let members = support.members();
    if members.is_empty() {
        return None;
    }
    let one = BigInt::from(1);
    let var = |i: usize| (Monomial::unit(n, i), one.clone());
    let units_in = (0..n).all(|i| support.contains(&Monomial::unit(n, i)));
    let mut probes = 0u64;
    let try_pair = |f: SeriesTuple<Integers>, g: SeriesTuple<Integers>, probes, structured| {
        let h = f.compose(&g).expect("same shape");
        escape_of(&h, support).map(|(component, m)| NdEscape {
            f: f.to_string(),
            g: g.to_string(),
            component,
            norm: m.norm(),
            coefficient: h.components()[component].coeff(&m).to_string(),
            monomial: m.exponents().to_vec(),
            probes,
            structured,
        })
    };
    let lead = |u: &Monomial| -> Option<SeriesTuple<Integers>> {
        let mut comps = vec![monomial_series(n, d, vec![(u.clone(), one.clone())])?];
        for i in 1..n {
            comps.push(monomial_series(n, d, vec![var(i)])?);
        }
        SeriesTuple::new(comps).ok()
    };

    if units_in {
        let high: Vec<&Monomial> = members.iter().filter(|u| u.norm() >= 2).collect();
        let sum = monomial_series(n, d, (0..n).map(var).collect())?;
        let spread = SeriesTuple::new(vec![sum; n]).ok()?;
        for u in &high {
            if probes == max_probes {
                return None;
            }
            probes += 1;
            if let Some(e) = try_pair(lead(u)?, spread.clone(), probes, true) {
                return Some(e);
            }
        }
        for u in &high {
            for m in high.iter().filter(|m| u.norm() + m.norm() - 1 <= d as u64) {
                if probes == max_probes {
                    return None;
                }
                probes += 1;
                let mut comps = vec![monomial_series(n, d, vec![var(0), ((*m).clone(), one.clone())])?];
                for i in 1..n {
                    comps.push(monomial_series(n, d, vec![var(i)])?);
                }
                let g = SeriesTuple::new(comps).ok()?;
                if let Some(e) = try_pair(lead(u)?, g, probes, true) {
                    return Some(e);
                }
            }
        }
    }

    while probes < max_probes {
        let mut rng = SplitMix64::for_case(seed, "nd/escape", probes);
        probes += 1;
        let mut positive = || {
            let comps: Option<Vec<_>> = (0..n)
                .map(|_| {
                    let count = 1 + rng.below(4);
                    let terms = (0..count)
                        .map(|_| (rng.choose(&members).clone(), BigInt::from(1 + rng.below(9))))
                        .collect();
                    monomial_series(n, d, terms)
                })
                .collect();
            SeriesTuple::new(comps?).ok()
        };
        let (f, g) = (positive()?, positive()?);
        if let Some(e) = try_pair(f, g, probes, false) {
            return Some(e);
        }
    }
    None
}

fn nd_trials<R: SampleRing>(
    ring: &R,
    support: &SupportSetND,
    label: &str,
    config: &TrialConfig,
    closure: &mut Property,
    laws: &mut Property,
) -> Result<()> {
    let stream = format!("nd/{}/{}", support.nvars(), ring.descriptor());
    let members = support.members();
    let id = SeriesTuple::identity(ring.clone(), support.nvars(), support.bound())?;
    for case in 0..config.trials as u64 {
        let mut rng = SplitMix64::for_case(config.seed, &stream, case);
        let f = random_tuple(ring, support, &members, &mut rng);
        let g = random_tuple(ring, support, &members, &mut rng);
        let k = random_tuple(ring, support, &members, &mut rng);
        let w = |detail: String| {
            CaseWitness::new(
                case,
                ring.descriptor(),
                [("T", label.to_string()), ("F", f.to_string()), ("G", g.to_string())],
                detail,
            )
        };
        let fg = f.compose(&g)?;
        closure.check(fg.is_supported_on(support).witness.map(|v| w(format!("F∘G = {fg}: {v}"))));

        let fi = f.compose(&id)?;
        let iff = id.compose(&f)?;
        let left = fg.compose(&k)?;
        let right = f.compose(&g.compose(&k)?)?;
        laws.check(if fi != f || iff != f {
            Some(w(format!("identity law fails: F∘x = {fi}, x∘F = {iff}")))
        } else if left != right {
            Some(w(format!("associativity fails with K = {k}: (F∘G)∘K = {left}, F∘(G∘K) = {right}")))
        } else {
            None
        });
    }
    Ok(())
}

/// Several-variable form: compositions of tuples supported on
/// `U = {u : |u| ∈ T}` stay on `U`, composition is a monoid, the norm is
/// additive, and both ways of leaving the hypotheses (a non-closed `T`, an
/// unsaturated `U`) produce escapes.
pub fn check_nd(config: &TrialConfig, t: &StrongMonoid, n: usize) -> Result<Report> {
    config.validate()?;
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidDimension(n));
    }
    let start = Instant::now();
    let d = config.degree;
    let label = monoid_text(t);
    let support = SupportSetND::from_norms(t, n, d)?;

    let mut closure = Property::hold("compositions_stay_supported");
    let mut laws = Property::hold("monoid_laws");
    for &desc in &config.rings {
        let any = AnyRing::from_descriptor(desc)?;
        with_ring!(any, |r| nd_trials(&r, &support, &label, config, &mut closure, &mut laws))?;
    }

    let mut additivity = Property::hold("norm_additivity");
    for case in 0..1000u64 {
        let mut rng = SplitMix64::for_case(config.seed, "nd/norm", case);
        let mut draw = || Monomial::new((0..n).map(|_| rng.below(6) as u32).collect());
        let (u, v) = (draw(), draw());
        let s = u.add(&v);
        additivity.check((s.norm() != u.norm() + v.norm()).then(|| {
            CaseWitness::new(case, "none", [("u", u.to_string()), ("v", v.to_string())], format!("|u+v| = {}", s.norm()))
        }));
    }

    let mut saturated = Property::hold("norm_sets_saturated");
    let v = support.is_norm_saturated();
    saturated.check((!v.holds).then(|| CaseWitness::new(0, "none", [("T", label.clone())], v.to_string())));

    let mut odd_probe = Property::probe("one_plus_evens_escapes");
    let evens = ExplicitSet::new((1..=d as u64).filter(|&t| t == 1 || t % 2 == 0));
    let lifted = SupportSetND::from_norms(&evens, n, d)?;
    odd_probe.case();
    if let Some(e) = find_nd_escape(&lifted, config.seed, MAX_PROBES) {
        odd_probe.violation(escape_witness("{1} ∪ evens", &e));
    }

    let mut sat_probe = Property::probe("unsaturated_support_escapes");
    let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::unit(n, i)).collect();
    let mut two = vec![0; n];
    two[0] = 2;
    gens.push(Monomial::new(two));
    let unsaturated = SupportSetND::explicit(n, d, gens.clone())?;
    let listing: Vec<String> = gens.iter().map(Monomial::to_string).collect();
    let listing = format!("{{{}}}", listing.join(", "));
    sat_probe.case();
    let verdict = unsaturated.is_norm_saturated();
    if let (false, Some(e)) = (verdict.holds, find_nd_escape(&unsaturated, config.seed, MAX_PROBES)) {
        let mut w = escape_witness(&listing, &e);
        w.detail = format!("U {verdict}; {}", w.detail);
        sat_probe.violation(w);
    }

    let mut coverage = BTreeMap::new();
    coverage.insert("tuples".into(), closure.cases);
    coverage.insert("nvars".into(), n as u64);
    Report::new(
        "nd",
        format!("T = {label}, n = {n}"),
        config,
        coverage,
        vec![closure, laws, additivity, saturated, odd_probe, sat_probe],
        start.elapsed(),
    )
}

fn escape_witness(set: &str, e: &NdEscape) -> CaseWitness {
    CaseWitness::new(
        e.probes,
        "z",
        [("U", set.to_string()), ("F", e.f.clone()), ("G", e.g.clone())],
        format!(
            "component {} of F∘G has coefficient {} at {} (norm {}), outside U; probe {}",
            e.component + 1,
            e.coefficient,
            Monomial::new(e.monomial.clone()),
            e.norm,
            e.probes
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifted_one_plus_evens_escapes_at_norm_three() {
        for n in 2..=3 {
            let evens = ExplicitSet::new((1..=10).filter(|&t| t == 1 || t % 2 == 0));
            let u = SupportSetND::from_norms(&evens, n, 10).unwrap();
            let e = find_nd_escape(&u, 0, MAX_PROBES).unwrap();
            assert_eq!(e.norm, 3);
            assert!(e.structured);
        }
    }

    #[test]
    fn unsaturated_escape_uses_the_sum_substitution() {
        let u = SupportSetND::explicit(2, 10, [[1, 0], [0, 1], [2, 0]].map(|e| Monomial::new(e.to_vec()))).unwrap();
        let e = find_nd_escape(&u, 0, MAX_PROBES).unwrap();
        assert_eq!((e.f.as_str(), e.g.as_str()), ("x1^2 | x2", "x1 + x2 | x1 + x2"));
        assert_eq!((e.component, e.monomial.clone(), e.coefficient.as_str()), (0, vec![1, 1], "2"));
    }

    #[test]
    fn closed_support_has_no_escape() {
        let odds = StrongMonoid::strong_closure(&[3]).unwrap();
        let u = SupportSetND::from_norms(&odds, 2, 6).unwrap();
        assert_eq!(find_nd_escape(&u, 0, 50), None);
    }

    #[test]
    fn suite_passes_and_rejects_bad_dimension() {
        let config = TrialConfig {
            trials: 5,
            degree: 6,
            ..TrialConfig::default()
        };
        let odds = StrongMonoid::strong_closure(&[3]).unwrap();
        let r = check_nd(&config, &odds, 2).unwrap();
        assert!(r.passed, "{:#?}", r.properties);
        assert_eq!(check_nd(&config, &odds, 5).unwrap_err(), Error::InvalidDimension(5));
    }
}
