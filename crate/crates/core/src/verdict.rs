//! Bounded yes/no certifications with re-checkable counterexamples.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

/// A set of positive exponents with decidable membership.
pub trait ExponentSet {
    fn contains(&self, t: u64) -> bool;
}

impl<F: Fn(u64) -> bool> ExponentSet for F {
    fn contains(&self, t: u64) -> bool {
        self(t)
    }
}

/// A finite, explicitly listed set of exponents. Everything not listed is a
/// non-member.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExplicitSet {
    members: BTreeSet<u64>,
}

impl ExplicitSet {
    pub fn new(members: impl IntoIterator<Item = u64>) -> Self {
        ExplicitSet {
            members: members.into_iter().collect(),
        }
    }

    /// The members of `set` within `1..=bound`.
    pub fn truncate(set: &impl ExponentSet, bound: u64) -> Self {
        Self::new((1..=bound).filter(|&t| set.contains(t)))
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl ExponentSet for ExplicitSet {
    fn contains(&self, t: u64) -> bool {
        self.members.contains(&t)
    }
}

/// Evidence that a property fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `1` is not in the set.
    MissingIdentity,
    /// `s, t` are members but `s + t - 1` is not.
    Pair { s: u64, t: u64 },
    /// `s = parts[0] + ... + parts[k-1]` with every `ts[i]` a member, yet
    /// `sum = parts[0]*ts[0] + ...` is not a member.
    Partition {
        s: u64,
        parts: Vec<u64>,
        ts: Vec<u64>,
        sum: u64,
    },
    /// `s, t` are members but `s * t` is not.
    Product { s: u64, t: u64 },
    /// A series has a nonzero coefficient at an exponent outside the set.
    Exponent { exponent: u64 },
    /// `u` is in the monomial set, `v` has the same norm but is not.
    NotSaturated { u: Vec<u32>, v: Vec<u32> },
    /// Component `index` of a tuple has a monomial outside the support set.
    Component { index: usize, monomial: Vec<u32> },
}

fn join(xs: &[u64], sep: &str) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::MissingIdentity => write!(f, "1 not in T"),
            Witness::Pair { s, t } => write!(f, "s={s} t={t} s+t-1={} not in T", s + t - 1),
            Witness::Partition { s, parts, ts, sum } => write!(
                f,
                "s={s}={} t=({}) sum={sum} not in T",
                join(parts, "+"),
                join(ts, ",")
            ),
            Witness::Product { s, t } => write!(f, "s={s} t={t} s*t={} not in T", s * t),
            Witness::Exponent { exponent } => write!(f, "exponent {exponent} not in T"),
            Witness::NotSaturated { u, v } => {
                write!(f, "u={u:?} in U but v={v:?} with |v|=|u| is not")
            }
            Witness::Component { index, monomial } => {
                write!(f, "component {} has monomial {monomial:?} not in U", index + 1)
            }
        }
    }
}

/// Outcome of a bounded check. `holds == false` always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("holds"),
            Some(w) => write!(f, "fails: {w}"),
        }
    }
}
