//! Exact combinatorics of Young diagrams, skew shapes, and staircase
//! alternating arrays.
//!
//! Everything here is computed over arbitrary-precision integers: hook
//! length counts for standard Young tableaux (straight and skew, the latter
//! via excited diagrams), generating functions of semistandard tableaux and
//! reverse plane partitions as truncated q-series, q-analogues of the Euler
//! numbers, and the determinant identity expressing the reverse plane
//! partition generating function of a skew staircase in terms of those
//! q-Euler series.
//!
//! Each closed formula is paired with an independent brute-force oracle
//! (exhaustive enumeration with a weight bound), so all the identities can
//! be machine-checked coefficient by coefficient; the `acceptance`
//! integration test runs the full battery.
//!
//! Module map:
//! - [`qseries`]: truncated power series over `BigInt`, with determinants.
//! - [`shapes`]: partitions, cells, skew shapes, hooks, staircases.
//! - [`tableaux`]: exhaustive SYT / SSYT / RPP oracles and the ribbon
//!   reading that turns a one-ribbon reverse plane partition into an
//!   alternating word.
//! - [`excited`]: excited and pleasant diagrams and the hook-length
//!   formulas built on them.
//! - [`qeuler`]: Euler numbers, reverse alternating permutations, the
//!   q-Euler polynomials, and the determinant built from them.
//! - [`arrays`]: staircase alternating arrays, the prefix-exchange
//!   operator on row pairs, the sign-reversing involution, and the
//!   bijection from its fixed points to reverse plane partitions.

pub mod arrays;
pub mod error;
pub mod excited;
pub mod qeuler;
pub mod qseries;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use qseries::QSeries;
pub use shapes::{Cell, Partition, SkewShape};
