//! Series in several variables truncated by total degree, and composition of
//! `n`-tuples of them.
//!
//! `(f_1, ..., f_n) ∘ (g_1, ..., g_n) = (f_1(g_1, ..., g_n), ..., f_n(g_1, ..., g_n))`
//! makes `n`-tuples of series without constant term a monoid with identity
//! `(x_1, ..., x_n)`. A monomial `x^u` substituted this way has total order at
//! least `|u| = u_1 + ... + u_n`, so truncating at total degree `D` is exact.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::series::{format_coeff_body, Parsed};
use crate::text::{join_signed, parse_terms, signed_coeff, Cursor};
use crate::verdict::{ExponentSet, Verdict, Witness};

/// An exponent vector `u`. Ordered by norm, then with larger leading
/// exponents first: `x1^2 < x1*x2 < x2^2 < x1^3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// `e_i` in `n` variables (`i` is zero-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// `|u| = u_1 + ... + u_n`.
    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn add(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("x{}", i + 1),
                _ => format!("x{}^{e}", i + 1),
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// All monomials in `n` variables of norm `k`, in [`Monomial`] order.
pub fn monomials_of_norm(n: usize, k: u32) -> Vec<Monomial> {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            rec(n, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// A series in `n` variables without constant term, modulo total degree
/// `> D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries<R: Ring> {
    ring: R,
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> MultiSeries<R> {
    pub fn zero(ring: R, nvars: usize, degree: usize) -> Result<Self> {
        if nvars < 1 {
            return Err(Error::InvalidDimension(nvars));
        }
        if degree < 1 {
            return Err(Error::InvalidPrecision(degree));
        }
        Ok(MultiSeries {
            ring,
            nvars,
            degree,
            coeffs: BTreeMap::new(),
        })
    }

    /// The variable `x_{i+1}`.
    pub fn variable(ring: R, nvars: usize, degree: usize, i: usize) -> Result<Self> {
        let one = ring.one();
        Self::from_terms(ring, nvars, degree, [(Monomial::unit(nvars, i), one)])
    }

    pub fn from_terms(
        ring: R,
        nvars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, R::Elem)>,
    ) -> Result<Self> {
        let mut s = Self::zero(ring, nvars, degree)?;
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    left: nvars,
                    right: m.nvars(),
                });
            }
            if m.is_constant() {
                if s.ring.is_zero(&c) {
                    continue;
                }
                return Err(Error::ConstantTermNotAllowed { pos: 0 });
            }
            if m.norm() <= degree as u64 {
                s.add_term(m, &c);
            }
        }
        Ok(s)
    }

    fn add_term(&mut self, m: Monomial, c: &R::Elem) {
        let sum = match self.coeffs.get(&m) {
            Some(old) => self.ring.add(old, c),
            None => c.clone(),
        };
        if self.ring.is_zero(&sum) {
            self.coeffs.remove(&m);
        } else {
            self.coeffs.insert(m, sum);
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, m: &Monomial) -> R::Elem {
        self.coeffs.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn common(&self, other: &Self) -> Result<usize> {
        self.ring.ensure_same(&other.ring)?;
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(self.degree.min(other.degree))
    }

    pub fn truncate(&self, degree: usize) -> Result<Self> {
        let mut s = Self::zero(self.ring.clone(), self.nvars, degree.min(self.degree))?;
        s.coeffs = self
            .coeffs
            .iter()
            .filter(|(m, _)| m.norm() <= s.degree as u64)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(s)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let d = self.common(other)?;
        let mut out = self.truncate(d)?;
        for (m, c) in &other.coeffs {
            if m.norm() <= d as u64 {
                out.add_term(m.clone(), c);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = self.clone();
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(m, a)| (m.clone(), self.ring.mul(c, a)))
            .filter(|(_, a)| !self.ring.is_zero(a))
            .collect();
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.common(other)?;
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::new();
        for (a, x) in &self.coeffs {
            if a.norm() >= d as u64 {
                break;
            }
            for (b, y) in &other.coeffs {
                if a.norm() + b.norm() > d as u64 {
                    break;
                }
                let p = self.ring.mul(x, y);
                let slot = acc.entry(a.add(b)).or_insert_with(|| self.ring.zero());
                *slot = self.ring.add(slot, &p);
            }
        }
        let mut out = Self::zero(self.ring.clone(), self.nvars, d)?;
        out.coeffs = acc
            .into_iter()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .collect();
        Ok(out)
    }

    /// Parses `x1^2*x2 - 3*x3 + 1/2*x1`. Variables are `x1..xn`.
    pub fn parse(text: &str, ring: R, nvars: usize, degree: usize) -> Result<Parsed<Self>> {
        let terms = parse_terms(text, |cur| parse_monomial(cur, nvars))?;
        let mut s = Self::zero(ring, nvars, degree)?;
        let mut truncated = false;
        for term in terms {
            let c = s.ring.parse_elem(&signed_coeff(&term)).map_err(|_| Error::Parse {
                pos: term.pos,
                message: "invalid coefficient".into(),
            })?;
            match term.monomial {
                Some(m) if !m.is_constant() => {
                    if m.norm() > degree as u64 {
                        truncated = true;
                    } else {
                        s.add_term(m, &c);
                    }
                }
                _ => {
                    if !s.ring.is_zero(&c) {
                        return Err(Error::ConstantTermNotAllowed { pos: term.pos });
                    }
                }
            }
        }
        Ok(Parsed {
            value: s,
            truncated,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms()
            .map(|(m, c)| json!([m.exponents(), self.ring.format_elem(c)]))
            .collect();
        json!({
            "ring": self.ring.descriptor().to_string(),
            "nvars": self.nvars,
            "degree": self.degree,
            "terms": terms,
        })
    }
}

fn parse_monomial(cur: &mut Cursor<'_>, nvars: usize) -> Result<Option<Monomial>> {
    if cur.peek() != Some('x') {
        return Ok(None);
    }
    let mut exps = vec![0u32; nvars];
    loop {
        if !cur.eat('x') {
            return cur.error("expected a variable x<i>");
        }
        let Some(idx) = cur.digits() else {
            return cur.error("expected a variable index after 'x'");
        };
        let i: usize = idx.parse().unwrap_or(0);
        if i < 1 || i > nvars {
            return cur.error(format!("variable x{idx} out of range 1..={nvars}"));
        }
        let e: u32 = if cur.eat('^') {
            cur.integer("exponent")?
        } else {
            1
        };
        exps[i - 1] += e;
        if !cur.eat('*') {
            break;
        }
    }
    Ok(Some(Monomial(exps)))
}

impl<R: Ring> fmt::Display for MultiSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self
            .terms()
            .map(|(m, c)| format_coeff_body(&self.ring, c, &m.to_string()));
        f.write_str(&join_signed(pieces))
    }
}

/// An `n`-tuple of series in `n` variables, all sharing ring and degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTuple<R: Ring> {
    components: Vec<MultiSeries<R>>,
}

impl<R: Ring> SeriesTuple<R> {
    pub fn new(components: Vec<MultiSeries<R>>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidDimension(0));
        };
        let n = components.len();
        for c in &components {
            first.ring.ensure_same(&c.ring)?;
            if c.nvars != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: c.nvars,
                });
            }
        }
        let d = components.iter().map(|c| c.degree).min().unwrap_or(1);
        let components = components
            .into_iter()
            .map(|c| c.truncate(d))
            .collect::<Result<_>>()?;
        Ok(SeriesTuple { components })
    }

    /// `(x_1, ..., x_n)`.
    pub fn identity(ring: R, nvars: usize, degree: usize) -> Result<Self> {
        let components = (0..nvars)
            .map(|i| MultiSeries::variable(ring.clone(), nvars, degree, i))
            .collect::<Result<_>>()?;
        Self::new(components)
    }

    pub fn components(&self) -> &[MultiSeries<R>] {
        &self.components
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn degree(&self) -> usize {
        self.components[0].degree
    }

    pub fn ring(&self) -> &R {
        &self.components[0].ring
    }

    /// `self ∘ other`: substitute `x_j -> other_j` in every component.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.ring().ensure_same(other.ring())?;
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        let d = self.degree().min(other.degree());
        let n = self.nvars();
        let ring = self.ring().clone();
        let gs: Vec<MultiSeries<R>> = other
            .components
            .iter()
            .map(|g| g.truncate(d))
            .collect::<Result<_>>()?;

        // products[u] = g_1^{u_1} ... g_n^{u_n}, built from products[u - e_j]
        let mut products: HashMap<Monomial, MultiSeries<R>> = HashMap::new();
        let mut out = Vec::with_capacity(n);
        for f in &self.components {
            let mut acc = MultiSeries::zero(ring.clone(), n, d)?;
            for (u, c) in &f.coeffs {
                if u.norm() > d as u64 {
                    break;
                }
                let p = substituted(&mut products, &gs, u)?;
                for (m, x) in &p.coeffs {
                    acc.add_term(m.clone(), &ring.mul(c, x));
                }
            }
            out.push(acc);
        }
        Ok(SeriesTuple { components: out })
    }

    /// Components separated by `|`.
    pub fn parse(text: &str, ring: R, nvars: usize, degree: usize) -> Result<Parsed<Self>> {
        let pieces: Vec<&str> = text.split('|').collect();
        if pieces.len() != nvars {
            return Err(Error::Parse {
                pos: 0,
                message: format!("expected {nvars} components separated by '|', found {}", pieces.len()),
            });
        }
        let mut truncated = false;
        let mut components = Vec::with_capacity(nvars);
        let mut offset = 0;
        for piece in pieces {
            let parsed = MultiSeries::parse(piece, ring.clone(), nvars, degree).map_err(|e| match e {
                Error::Parse { pos, message } => Error::Parse {
                    pos: pos + offset,
                    message,
                },
                Error::ConstantTermNotAllowed { pos } => Error::ConstantTermNotAllowed { pos: pos + offset },
                other => other,
            })?;
            truncated |= parsed.truncated;
            components.push(parsed.value);
            offset += piece.len() + 1;
        }
        Ok(Parsed {
            value: Self::new(components)?,
            truncated,
        })
    }

    /// Whether every component is supported on `set`. The witness names the
    /// first component and least monomial outside it.
    pub fn is_supported_on(&self, set: &SupportSetND) -> Verdict {
        for (index, c) in self.components.iter().enumerate() {
            if let Some(m) = c.support().find(|m| !set.contains(m)) {
                return Verdict::fail(Witness::Component {
                    index,
                    monomial: m.exponents().to_vec(),
                });
            }
        }
        Verdict::pass()
    }

    /// `{"ring", "nvars", "degree", "components": [{"terms": ...}, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let components: Vec<_> = self
            .components
            .iter()
            .map(|c| json!({ "terms": c.to_json()["terms"] }))
            .collect();
        json!({
            "ring": self.ring().descriptor().to_string(),
            "nvars": self.nvars(),
            "degree": self.degree(),
            "components": components,
        })
    }
}

fn substituted<'a, R: Ring>(
    memo: &'a mut HashMap<Monomial, MultiSeries<R>>,
    gs: &[MultiSeries<R>],
    u: &Monomial,
) -> Result<&'a MultiSeries<R>> {
    if !memo.contains_key(u) {
        let j = u.0.iter().rposition(|&e| e > 0).expect("nonconstant monomial");
        let value = if u.norm() == 1 {
            gs[j].clone()
        } else {
            let mut smaller = u.clone();
            smaller.0[j] -= 1;
            let prev = substituted(memo, gs, &smaller)?.clone();
            prev.mul(&gs[j])?
        };
        memo.insert(u.clone(), value);
    }
    Ok(&memo[u])
}

impl<R: Ring> fmt::Display for SeriesTuple<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" | "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum SupportKind {
    /// `allowed[k]`: monomials of norm `k` are members.
    Norms(Vec<bool>),
    Explicit(BTreeSet<Monomial>),
}

/// A set `U` of nonzero monomials in `n` variables, considered up to norm `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSetND {
    nvars: usize,
    bound: usize,
    kind: SupportKind,
}

impl SupportSetND {
    /// `U = {u : |u| ∈ T}`.
    pub fn from_norms(set: &impl ExponentSet, nvars: usize, bound: usize) -> Result<Self> {
        if nvars < 1 {
            return Err(Error::InvalidDimension(nvars));
        }
        if bound < 1 {
            return Err(Error::InvalidBound(bound as u64));
        }
        let allowed = (0..=bound as u64).map(|k| k >= 1 && set.contains(k)).collect();
        Ok(SupportSetND {
            nvars,
            bound,
            kind: SupportKind::Norms(allowed),
        })
    }

    /// An arbitrary finite monomial set.
    pub fn explicit(nvars: usize, bound: usize, members: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if nvars < 1 {
            return Err(Error::InvalidDimension(nvars));
        }
        let mut set = BTreeSet::new();
        for m in members {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    left: nvars,
                    right: m.nvars(),
                });
            }
            if !m.is_constant() && m.norm() <= bound as u64 {
                set.insert(m);
            }
        }
        Ok(SupportSetND {
            nvars,
            bound,
            kind: SupportKind::Explicit(set),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let norm = m.norm();
        if norm == 0 || norm > self.bound as u64 {
            return false;
        }
        match &self.kind {
            SupportKind::Norms(allowed) => allowed[norm as usize],
            SupportKind::Explicit(set) => set.contains(m),
        }
    }

    /// Members in [`Monomial`] order.
    pub fn members(&self) -> Vec<Monomial> {
        (1..=self.bound as u32)
            .flat_map(|k| monomials_of_norm(self.nvars, k))
            .filter(|m| self.contains(m))
            .collect()
    }

    /// Whether `u ∈ U` and `|v| = |u|` imply `v ∈ U`. The witness is the least
    /// such `(u, v)` with `v ∉ U`.
    pub fn is_norm_saturated(&self) -> Verdict {
        for u in self.members() {
            if let Some(v) = monomials_of_norm(self.nvars, u.norm() as u32)
                .into_iter()
                .find(|v| !self.contains(v))
            {
                return Verdict::fail(Witness::NotSaturated {
                    u: u.0.clone(),
                    v: v.0,
                });
            }
        }
        Verdict::pass()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expmonoid::StrongMonoid;
    use crate::ring::{Integers, IntegersMod};
    use crate::series::TruncatedSeries;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn tuple(text: &str, n: usize, d: usize) -> SeriesTuple<Integers> {
        SeriesTuple::parse(text, Integers, n, d).unwrap().value
    }

    fn multi(text: &str, n: usize, d: usize) -> MultiSeries<Integers> {
        MultiSeries::parse(text, Integers, n, d).unwrap().value
    }

    #[test]
    fn norm_examples() {
        assert_eq!(m(&[2, 0, 1]).norm(), 3);
        assert_eq!(Monomial::unit(3, 1), m(&[0, 1, 0]));
        assert_eq!(m(&[0, 1, 0]).norm(), 1);
        assert_eq!(m(&[0, 5]).norm(), 5);
    }

    #[test]
    fn monomial_order() {
        assert_eq!(
            monomials_of_norm(2, 2),
            vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]
        );
        assert!(m(&[0, 2]) < m(&[3, 0]));
        assert_eq!(monomials_of_norm(3, 3).len(), 10);
        assert_eq!(m(&[2, 1, 0]).to_string(), "x1^2*x2");
    }

    #[test]
    fn arithmetic_examples() {
        let x1 = multi("x1", 2, 5);
        let x2 = multi("x2", 2, 5);
        assert_eq!(x1.mul(&x2).unwrap().to_string(), "x1*x2");
        let s = x1.add(&x2).unwrap();
        assert_eq!(s.mul(&s).unwrap().to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!(x1.add(&x1.neg()).unwrap().is_zero());
        // total degree truncation
        let big = multi("x1^3 + x2", 2, 3);
        assert_eq!(big.mul(&big).unwrap().to_string(), "x2^2");
        let other = multi("x1", 3, 5);
        assert!(matches!(x1.add(&other), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(MultiSeries::parse("x3", Integers, 2, 5).is_err());
        assert!(MultiSeries::parse("x", Integers, 2, 5).is_err());
        assert!(matches!(
            MultiSeries::parse("1 + x1", Integers, 2, 5),
            Err(Error::ConstantTermNotAllowed { .. })
        ));
        assert!(SeriesTuple::parse("x1", Integers, 2, 5).is_err());
        let p = MultiSeries::parse("x1 + x1^3*x2", Integers, 2, 3).unwrap();
        assert!(p.truncated);
        assert_eq!(multi("x1*x1*x2", 2, 5).to_string(), "x1^2*x2");
    }

    #[test]
    fn compose_examples() {
        let id = SeriesTuple::identity(Integers, 2, 8).unwrap();
        let f = tuple("x1^2 - 3*x1*x2 | x2 + x1^3", 2, 8);
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(id.compose(&f).unwrap(), f);

        let f = tuple("x1*x2 | x2", 2, 8);
        let g = tuple("x1 + x2 | x1 + x2", 2, 8);
        let h = f.compose(&g).unwrap();
        assert_eq!(h.components()[0].to_string(), "x1^2 + 2*x1*x2 + x2^2");

        let f = tuple("x1^2 | x2", 2, 8);
        let g = tuple("x1 + x2^2 | x2", 2, 8);
        assert_eq!(f.compose(&g).unwrap().to_string(), "x1^2 + 2*x1*x2^2 + x2^4 | x2");
    }

    #[test]
    fn support_from_norms() {
        let odd = StrongMonoid::strong_closure(&[3]).unwrap();
        let u = SupportSetND::from_norms(&odd, 2, 4).unwrap();
        for e in [[1, 0], [0, 1], [3, 0], [2, 1], [1, 2], [0, 3]] {
            assert!(u.contains(&m(&e)));
        }
        for k in [2, 4] {
            assert!(monomials_of_norm(2, k).iter().all(|v| !u.contains(v)));
        }
        assert!(u.is_norm_saturated().holds);

        let trivial = SupportSetND::from_norms(&StrongMonoid::trivial(), 3, 6).unwrap();
        assert_eq!(
            trivial.members(),
            vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]
        );
        let all = SupportSetND::from_norms(&StrongMonoid::everything(), 2, 3).unwrap();
        assert_eq!(all.members().len(), 9);
    }

    #[test]
    fn saturation_examples() {
        let u = SupportSetND::explicit(2, 4, [m(&[1, 0]), m(&[0, 1]), m(&[2, 0])]).unwrap();
        assert_eq!(
            u.is_norm_saturated(),
            Verdict::fail(Witness::NotSaturated {
                u: vec![2, 0],
                v: vec![1, 1]
            })
        );
        let all3 = SupportSetND::explicit(2, 3, (1..=3).flat_map(|k| monomials_of_norm(2, k))).unwrap();
        assert!(all3.is_norm_saturated().holds);
    }

    #[test]
    fn tuple_support_examples() {
        let odd = StrongMonoid::strong_closure(&[3]).unwrap();
        let u = SupportSetND::from_norms(&odd, 2, 8).unwrap();
        assert!(SeriesTuple::identity(Integers, 2, 8).unwrap().is_supported_on(&u).holds);
        let f = tuple("x1 | x2 + x1*x2", 2, 8);
        assert_eq!(
            f.is_supported_on(&u),
            Verdict::fail(Witness::Component {
                index: 1,
                monomial: vec![1, 1]
            })
        );
        assert!(tuple("0 | 0", 2, 8).is_supported_on(&u).holds);
    }

    fn random_tuple(n: usize, d: usize) -> impl Strategy<Value = SeriesTuple<IntegersMod>> {
        let monos: Vec<Monomial> = (1..=d as u32).flat_map(|k| monomials_of_norm(n, k)).collect();
        let count = monos.len();
        proptest::collection::vec(proptest::collection::vec((0..count, 0u64..5), 0..4), n).prop_map(
            move |comps| {
                let r = IntegersMod::new(5).unwrap();
                let components = comps
                    .into_iter()
                    .map(|terms| {
                        MultiSeries::from_terms(r, n, d, terms.into_iter().map(|(i, c)| (monos[i].clone(), c)))
                            .unwrap()
                    })
                    .collect();
                SeriesTuple::new(components).unwrap()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn tuple_composition_is_associative(f in random_tuple(2, 6), g in random_tuple(2, 6), h in random_tuple(2, 6)) {
            let left = f.compose(&g).unwrap().compose(&h).unwrap();
            let right = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn norm_is_additive(a in proptest::collection::vec(0u32..50, 3), b in proptest::collection::vec(0u32..50, 3)) {
            let (u, v) = (Monomial::new(a), Monomial::new(b));
            prop_assert_eq!(u.add(&v).norm(), u.norm() + v.norm());
        }

        #[test]
        fn one_variable_matches_univariate(fc in proptest::collection::vec(-5i64..=5, 8), gc in proptest::collection::vec(-5i64..=5, 8)) {
            let uni = |cs: &[i64]| TruncatedSeries::from_terms(
                Integers, 8, cs.iter().enumerate().map(|(i, &c)| (i + 1, BigInt::from(c)))).unwrap();
            let lift = |cs: &[i64]| SeriesTuple::new(vec![MultiSeries::from_terms(
                Integers, 1, 8, cs.iter().enumerate().map(|(i, &c)| (Monomial::new(vec![i as u32 + 1]), BigInt::from(c)))).unwrap()]).unwrap();
            let expected = uni(&fc).compose(&uni(&gc)).unwrap();
            let got = lift(&fc).compose(&lift(&gc)).unwrap();
            let c = &got.components()[0];
            for e in 1..=8u32 {
                prop_assert_eq!(c.coeff(&Monomial::new(vec![e])), expected.coeff(e as usize));
            }
        }
    }
}
