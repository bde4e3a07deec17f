use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::series::TruncatedSeries;

/// Compositional inverse computed independently of
/// [`TruncatedSeries::invert`]: solves the left identity `g ∘ f = x` one
/// unknown at a time.
///
/// With `g = Σ b_k x^k`, the coefficient of `x^n` in `g ∘ f` is
/// `Σ_{k <= n} b_k [x^n] f^k`, and `[x^n] f^n = a_1^n`, so
///
/// ```text
/// b_n = (δ_{n,1} - Σ_{k < n} b_k [x^n] f^k) / a_1^n
/// ```
///
/// The powers of `f` are computed once by repeated multiplication.
pub fn newton_inverse_oracle<R: Ring>(f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    let ring = f.ring();
    let n = f.precision();
    let a1 = f.coeff(1);
    let a1_inv = ring
        .inverse_unit(&a1)
        .map_err(|_| Error::NotInvertible(ring.format_elem(&a1)))?;

    // powers[k] = f^k
    let mut powers = vec![TruncatedSeries::zero(ring.clone(), n)?, f.clone()];
    for k in 2..=n {
        let next = powers[k - 1].mul(f)?;
        powers.push(next);
    }

    let mut b = vec![ring.zero(); n + 1];
    for m in 1..=n {
        let mut rhs = if m == 1 { ring.one() } else { ring.zero() };
        for k in 1..m {
            rhs = ring.sub(&rhs, &ring.mul(&b[k], &powers[k].coeff(m)));
        }
        b[m] = ring.mul(&rhs, &ring.pow(&a1_inv, m as u64));
    }
    TruncatedSeries::from_terms(ring.clone(), n, b.into_iter().enumerate().skip(1))
}
