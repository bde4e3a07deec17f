//! Univariate truncated power series with zero constant term.
//!
//! A [`TruncatedSeries`] with precision `N` is the class of a series in
//! `xR[[x]]` modulo `x^(N+1)`: it stores the exact coefficients of
//! `x^1 ..= x^N`. Binary operations work at the smaller of the two
//! precisions. Composition is exact at that precision because every term
//! `a_t g^t` has order at least `t`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::text::{join_signed, parse_terms, signed_coeff, Cursor};
use crate::verdict::{ExponentSet, Verdict, Witness};

/// Order of a series: the least exponent with a nonzero coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// Result of parsing, with a flag raised when terms above the precision were
/// dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<T> {
    pub value: T,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R: Ring> {
    ring: R,
    precision: usize,
    coeffs: BTreeMap<usize, R::Elem>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(ring: R, precision: usize) -> Result<Self> {
        if precision < 1 {
            return Err(Error::InvalidPrecision(precision));
        }
        Ok(TruncatedSeries {
            ring,
            precision,
            coeffs: BTreeMap::new(),
        })
    }

    /// The identity `x` of the composition monoid.
    pub fn identity(ring: R, precision: usize) -> Result<Self> {
        let one = ring.one();
        Self::from_terms(ring, precision, [(1, one)])
    }

    /// Sums the given terms. Exponents above the precision are dropped;
    /// exponent 0 with a nonzero coefficient is rejected.
    pub fn from_terms(
        ring: R,
        precision: usize,
        terms: impl IntoIterator<Item = (usize, R::Elem)>,
    ) -> Result<Self> {
        let mut s = Self::zero(ring, precision)?;
        for (e, c) in terms {
            if e == 0 {
                if s.ring.is_zero(&c) {
                    continue;
                }
                return Err(Error::ConstantTermNotAllowed { pos: 0 });
            }
            if e <= precision {
                s.add_term(e, &c);
            }
        }
        Ok(s)
    }

    fn from_dense(ring: R, precision: usize, dense: Vec<R::Elem>) -> Self {
        let coeffs = dense
            .into_iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !ring.is_zero(c))
            .collect();
        TruncatedSeries {
            ring,
            precision,
            coeffs,
        }
    }

    fn add_term(&mut self, e: usize, c: &R::Elem) {
        let sum = match self.coeffs.get(&e) {
            Some(old) => self.ring.add(old, c),
            None => c.clone(),
        };
        if self.ring.is_zero(&sum) {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, sum);
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeff(&self, e: usize) -> R::Elem {
        self.coeffs.get(&e).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &R::Elem)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// The same class at a lower precision.
    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision < 1 {
            return Err(Error::InvalidPrecision(precision));
        }
        let precision = precision.min(self.precision);
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            precision,
            coeffs: self
                .coeffs
                .range(..=precision)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        })
    }

    pub fn order(&self) -> Order {
        match self.coeffs.keys().next() {
            Some(&e) => Order::Finite(e),
            None => Order::Infinite,
        }
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs.keys().copied().collect()
    }

    /// Whether every exponent with a nonzero coefficient lies in `set`; the
    /// witness is the least exponent that does not.
    pub fn is_supported_on(&self, set: &impl ExponentSet) -> Verdict {
        match self.coeffs.keys().find(|&&e| !set.contains(e as u64)) {
            Some(&e) => Verdict::fail(Witness::Exponent { exponent: e as u64 }),
            None => Verdict::pass(),
        }
    }

    fn common(&self, other: &Self) -> Result<usize> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.precision.min(other.precision))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.common(other)?;
        let mut out = self.truncate(n)?;
        for (e, c) in other.coeffs.range(..=n) {
            out.add_term(*e, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            ring: self.ring.clone(),
            precision: self.precision,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, self.ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        TruncatedSeries {
            ring: self.ring.clone(),
            precision: self.precision,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, a)| (e, self.ring.mul(c, a)))
                .filter(|(_, a)| !self.ring.is_zero(a))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.common(other)?;
        let mut acc = vec![self.ring.zero(); n + 1];
        mul_into(&self.ring, &mut acc, &self.coeffs, &other.coeffs, n);
        Ok(Self::from_dense(self.ring.clone(), n, acc))
    }

    /// `self ∘ other`, i.e. `self(other(x))`, at the smaller precision.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let n = self.common(other)?;
        let ring = &self.ring;
        let g = other.truncate(n)?;
        debug_assert!(g.order() >= Order::Finite(1));
        let mut acc = vec![ring.zero(); n + 1];
        let top = self.coeffs.range(..=n).next_back().map_or(0, |(&e, _)| e);
        // power = g^t, accumulated upward
        let mut power = g.coeffs.clone();
        for t in 1..=top {
            if t > 1 {
                let mut next = vec![ring.zero(); n + 1];
                mul_into(ring, &mut next, &power, &g.coeffs, n);
                power = next
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !ring.is_zero(c))
                    .collect();
            }
            if power.is_empty() {
                break;
            }
            if let Some(a) = self.coeffs.get(&t) {
                for (&e, c) in &power {
                    acc[e] = ring.add(&acc[e], &ring.mul(a, c));
                }
            }
        }
        Ok(Self::from_dense(ring.clone(), n, acc))
    }

    /// Compositionally invertible iff the coefficient of `x` is a unit.
    pub fn is_invertible(&self) -> bool {
        self.ring.is_unit(&self.coeff(1))
    }

    /// The compositional inverse `g` with `self ∘ g = x = g ∘ self` at this
    /// precision.
    ///
    /// Coefficients are produced one degree at a time: `b_1 = a_1^{-1}` and for
    /// `n >= 2`
    ///
    /// ```text
    /// b_n = -a_1^{-1} [x^n] Σ_{t >= 2} a_t (b_1 x + ... + b_{n-1} x^{n-1})^t
    /// ```
    ///
    /// For `t >= 2` the coefficient `[x^n] g^t` involves only `b_1..b_{n-1}`,
    /// so it is read from a table of power coefficients that grows by one
    /// column per degree. If the support of `self` lies in a strongly closed
    /// set, so does the support of the result.
    pub fn invert(&self) -> Result<Self> {
        let ring = &self.ring;
        let n = self.precision;
        let a1 = self.coeff(1);
        let a1_inv = ring
            .inverse_unit(&a1)
            .map_err(|_| Error::NotInvertible(ring.format_elem(&a1)))?;
        let zero = ring.zero();
        let top = self.degree().unwrap_or(1).max(1);
        // pow[t][m] = [x^m] g^t for t <= top; pow[1] holds the b_m themselves
        let mut pow = vec![vec![zero.clone(); n + 1]; top + 1];
        pow[1][1] = a1_inv.clone();
        for m in 2..=n {
            for t in 2..=m.min(top) {
                let mut c = zero.clone();
                for j in 1..=m - t + 1 {
                    let (b, p) = (&pow[1][j], &pow[t - 1][m - j]);
                    if !ring.is_zero(b) && !ring.is_zero(p) {
                        c = ring.add(&c, &ring.mul(b, p));
                    }
                }
                pow[t][m] = c;
            }
            let mut sum = zero.clone();
            for (&t, a) in self.coeffs.range(2..=m) {
                sum = ring.add(&sum, &ring.mul(a, &pow[t][m]));
            }
            pow[1][m] = ring.neg(&ring.mul(&a1_inv, &sum));
        }
        let b = std::mem::take(&mut pow[1]);
        Ok(Self::from_dense(ring.clone(), n, b))
    }

    /// Parses `x + 2*x^3 - 1/2*x^5`. Terms above `precision` are dropped and
    /// reported through [`Parsed::truncated`].
    pub fn parse(text: &str, ring: R, precision: usize) -> Result<Parsed<Self>> {
        let terms = parse_terms(text, parse_power)?;
        let mut s = Self::zero(ring, precision)?;
        let mut truncated = false;
        for term in terms {
            let c = s.ring.parse_elem(&signed_coeff(&term)).map_err(|_| Error::Parse {
                pos: term.pos,
                message: "invalid coefficient".into(),
            })?;
            match term.monomial {
                None | Some(0) => {
                    if !s.ring.is_zero(&c) {
                        return Err(Error::ConstantTermNotAllowed { pos: term.pos });
                    }
                }
                Some(e) if e > precision => truncated = true,
                Some(e) => s.add_term(e, &c),
            }
        }
        Ok(Parsed {
            value: s,
            truncated,
        })
    }

    /// JSON form `{"ring", "precision", "terms": [[exp, "coeff"], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms()
            .map(|(e, c)| json!([e, self.ring.format_elem(c)]))
            .collect();
        json!({
            "ring": self.ring.descriptor().to_string(),
            "precision": self.precision,
            "terms": terms,
        })
    }
}

/// `acc += a * b` over exponents `<= n`; both operands have order >= 1.
fn mul_into<R: Ring>(
    ring: &R,
    acc: &mut [R::Elem],
    a: &BTreeMap<usize, R::Elem>,
    b: &BTreeMap<usize, R::Elem>,
    n: usize,
) {
    for (&i, x) in a {
        if i >= n {
            break;
        }
        for (&j, y) in b {
            if i + j > n {
                break;
            }
            acc[i + j] = ring.add(&acc[i + j], &ring.mul(x, y));
        }
    }
}

fn parse_power(cur: &mut Cursor<'_>) -> Result<Option<usize>> {
    if cur.peek() != Some('x') {
        return Ok(None);
    }
    cur.eat('x');
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        return cur.error("unexpected digit after 'x' (univariate series use plain x)");
    }
    if cur.eat('^') {
        cur.integer("exponent").map(Some)
    } else {
        Ok(Some(1))
    }
}

pub(crate) fn format_coeff_body<R: Ring>(ring: &R, c: &R::Elem, var: &str) -> (bool, String) {
    let negative = ring.is_negative(c);
    let abs = if negative { ring.neg(c) } else { c.clone() };
    let body = if ring.is_one(&abs) {
        var.to_string()
    } else {
        format!("{}*{var}", ring.format_elem(&abs))
    };
    (negative, body)
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self.terms().map(|(e, c)| {
            let var = if e == 1 { "x".to_string() } else { format!("x^{e}") };
            format_coeff_body(&self.ring, c, &var)
        });
        f.write_str(&join_signed(pieces))
    }
}
