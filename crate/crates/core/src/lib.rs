//! Exact q-series engine for theta functions, Appell-Lerch sums, and mock
//! theta function identities over Q(zeta3).
//!
//! Everything is computed with exact cyclotomic-rational coefficients and an
//! explicit validity order, so an identity check is a coefficient-by-
//! coefficient comparison with tolerance zero: any nonzero residual is a
//! genuine bug or a disproof.
//!
//! The layers, bottom up:
//! - [`cyclotomic`]: the field Q(zeta3) and its sixth roots of unity
//! - [`qseries`]: truncated sparse Laurent series with order tracking
//! - [`theta`]: j(z;q) via bilateral sum and triple product, J_{a,b} names
//! - [`appell`]: the Appell function m(x,z;q), Lerch-type bilateral sums,
//!   and the base-q^4 / base-q^9 splitting expansions
//! - [`mock`]: Eulerian series for the named mock theta functions and their
//!   recorded Appell forms
//! - [`identity`]: expression trees, the order-propagating evaluator, the
//!   text parser, the identity catalog, and the verifier
//! - [`props`]: seeded randomized property suites for the classical theta
//!   and Appell transformation laws

pub mod appell;
pub mod cyclotomic;
pub mod error;
pub mod identity;
pub mod mock;
pub mod props;
pub mod qseries;
pub mod report;
pub mod theta;

pub use cyclotomic::{rational, CycNum, Rational, Unit};
pub use error::{Error, Result};
pub use qseries::{ps_eq, Monomial, PsEq, QSeries, ORDER_INF};
