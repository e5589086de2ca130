//! Exact rational computations with characteristic classes.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: rationals, Bernoulli numbers and truncated power series,
//!   including the characteristic series of the L- and Â-genera.
//! * [`multseq`]: partitions and the multiplicative sequences built from a
//!   characteristic series.
//! * [`cohomology`]: finite models of rational cohomology rings with
//!   Pontryagin data, read from JSON descriptors.
//! * [`surgery`]: the normal-invariant construction over `S^k × M` with
//!   prescribed Pontryagin classes and vanishing surgery obstruction, plus
//!   the numeric applicability gates that go with it.
//!
//! Everything is exact; no floating point is used anywhere.

pub mod cohomology;
mod error;
pub mod multseq;
pub mod series;
pub mod surgery;

pub use cohomology::{
    fixtures, parse_manifold, product_with_sphere, Class, ManifoldData, Ring,
};
pub use error::{Error, ErrorKind, Result};
pub use multseq::{
    coefficients_all_nonzero, genus_of_manifold, genus_polynomial, partitions, GenusTable,
    NonzeroCertificate, Partition,
};
pub use series::{bernoulli, char_series, parse_rational, Genus, PowerSeries, Rational};
