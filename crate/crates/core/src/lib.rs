//! Composition monoids of truncated formal power series whose exponents are
//! restricted to a set `T`.
//!
//! The series types are generic over a coefficient [`Ring`](ring::Ring); the
//! aliases below fix the three rings the crate ships with.

pub mod addmonoid;
pub mod error;
pub mod expmonoid;
pub mod multiseries;
pub mod ring;
pub mod series;
mod text;
pub mod verdict;
pub mod verify;

pub use addmonoid::AdditiveMonoid;
pub use error::{Error, Result};
pub use expmonoid::StrongMonoid;
pub use multiseries::{Monomial, MultiSeries, SeriesTuple, SupportSetND};
pub use ring::{AnyRing, Integers, IntegersMod, Rationals, Ring, RingDescriptor, RingElement};
pub use series::{Order, TruncatedSeries};
pub use verdict::{ExplicitSet, ExponentSet, Verdict, Witness};

pub type IntSeries = TruncatedSeries<Integers>;
pub type ModSeries = TruncatedSeries<IntegersMod>;
pub type RatSeries = TruncatedSeries<Rationals>;

pub type IntMultiSeries = MultiSeries<Integers>;
pub type ModMultiSeries = MultiSeries<IntegersMod>;
pub type RatMultiSeries = MultiSeries<Rationals>;

pub type IntTuple = SeriesTuple<Integers>;
pub type ModTuple = SeriesTuple<IntegersMod>;
pub type RatTuple = SeriesTuple<Rationals>;
