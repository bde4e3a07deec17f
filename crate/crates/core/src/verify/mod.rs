//! Seeded conformance harness.
//!
//! Each suite runs exhaustive families and seeded random trials against one
//! claim about composition of exponent-restricted series and returns a
//! [`Report`]. Every random case draws from its own [`SplitMix64`] stream
//! derived from `(seed, suite, case)`, so a report depends only on its
//! [`TrialConfig`] and re-running one case reproduces it exactly.
//!
//! Properties marked [`Expect::Fail`] are probes: they pass when the predicted
//! violation is found, and their witnesses are the evidence.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::RingDescriptor;

mod nd;
mod oracle;
pub mod rng;
pub mod sample;
mod suites;

pub use nd::{check_nd, find_nd_escape, NdEscape};
pub use oracle::newton_inverse_oracle;
pub use rng::SplitMix64;
pub use suites::{
    check_group_axioms, check_inverse_support, check_theorem_main, find_escape, pair_closure,
    random_exponent_sets, small_generator_family, Escape,
};

/// Witnesses kept per property; further failures are only counted.
pub const MAX_WITNESSES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialConfig {
    pub seed: u64,
    /// Random cases per ring for each randomized property.
    pub trials: usize,
    /// Exponent bound for set checks.
    pub bound: u64,
    /// Univariate series precision.
    pub precision: usize,
    /// Total-degree bound for several-variable trials.
    pub degree: usize,
    pub rings: Vec<RingDescriptor>,
    /// Largest `s` enumerated by the partition check.
    pub s_max: u64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: 0,
            trials: 100,
            bound: 60,
            precision: 30,
            degree: 10,
            rings: vec![RingDescriptor::Integers, RingDescriptor::IntegersMod(7)],
            s_max: 6,
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidBound(0));
        }
        if self.bound < 1 {
            return Err(Error::InvalidBound(self.bound));
        }
        if self.precision < 1 {
            return Err(Error::InvalidPrecision(self.precision));
        }
        if self.degree < 1 {
            return Err(Error::InvalidPrecision(self.degree));
        }
        if self.s_max < 1 {
            return Err(Error::InvalidBound(self.s_max));
        }
        if self.rings.is_empty() {
            return Err(Error::InvalidRing(String::new()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Hold,
    Fail,
}

/// One reproducible case: the inputs as text plus what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseWitness {
    pub case: u64,
    pub ring: String,
    pub inputs: BTreeMap<String, String>,
    pub detail: String,
}

impl CaseWitness {
    pub fn new<const K: usize>(
        case: u64,
        ring: impl ToString,
        inputs: [(&str, String); K],
        detail: impl Into<String>,
    ) -> Self {
        CaseWitness {
            case,
            ring: ring.to_string(),
            inputs: inputs.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub expect: Expect,
    pub passed: bool,
    pub cases: u64,
    pub violations: u64,
    pub witnesses: Vec<CaseWitness>,
}

#[derive(Debug, Clone)]
pub(crate) struct Property {
    name: String,
    expect: Expect,
    cases: u64,
    violations: u64,
    witnesses: Vec<CaseWitness>,
}

impl Property {
    pub(crate) fn hold(name: &str) -> Self {
        Self::new(name, Expect::Hold)
    }

    pub(crate) fn probe(name: &str) -> Self {
        Self::new(name, Expect::Fail)
    }

    fn new(name: &str, expect: Expect) -> Self {
        Property {
            name: name.to_string(),
            expect,
            cases: 0,
            violations: 0,
            witnesses: Vec::new(),
        }
    }

    pub(crate) fn case(&mut self) {
        self.cases += 1;
    }

    /// Counts one case and records `witness` if it is a violation.
    pub(crate) fn check(&mut self, witness: Option<CaseWitness>) {
        self.case();
        if let Some(w) = witness {
            self.violation(w);
        }
    }

    pub(crate) fn violation(&mut self, w: CaseWitness) {
        self.violations += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    pub(crate) fn finish(self) -> PropertyResult {
        let passed = match self.expect {
            Expect::Hold => self.violations == 0,
            Expect::Fail => self.violations > 0,
        };
        PropertyResult {
            name: self.name,
            expect: self.expect,
            passed,
            cases: self.cases,
            violations: self.violations,
            witnesses: self.witnesses,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub subject: String,
    pub config: TrialConfig,
    pub coefficient_laws: Vec<String>,
    pub coverage: BTreeMap<String, u64>,
    pub properties: Vec<PropertyResult>,
    pub passed: bool,
    /// Wall-clock time; informational and left out of the JSON so equal
    /// configurations give byte-identical reports.
    #[serde(skip)]
    pub duration: Duration,
}

impl Report {
    pub(crate) fn new(
        suite: &str,
        subject: String,
        config: &TrialConfig,
        coverage: BTreeMap<String, u64>,
        properties: Vec<Property>,
        duration: Duration,
    ) -> Result<Self> {
        let properties: Vec<PropertyResult> = properties.into_iter().map(Property::finish).collect();
        let mut laws = Vec::new();
        for &d in &config.rings {
            let any = crate::ring::AnyRing::from_descriptor(d)?;
            laws.push(crate::with_ring!(any, |r| sample::SampleRing::coefficient_law(&r)));
        }
        Ok(Report {
            suite: suite.to_string(),
            subject,
            config: config.clone(),
            coefficient_laws: laws,
            coverage,
            passed: properties.iter().all(|p| p.passed),
            properties,
            duration,
        })
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
