//! Exact computation of symbolic powers of homogeneous polynomial ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`], [`monomial`], [`ring`], [`poly`]: exact multivariate arithmetic
//!   over the rationals and prime fields.
//! * [`parse`]: the session language (rings, ideals, matrices, commands) and
//!   the canonical polynomial printer.
//! * [`groebner`]: reduced Gröbner bases of ideals and of submodules of free
//!   modules, plus a content-addressed result cache.
//! * [`ideal`]: membership, powers, intersection, colon, saturation and
//!   radical membership.
//! * [`hilbert`]: Hilbert series, dimension, multiplicity, initial degree and
//!   minimal generator counts of graded quotients.
//! * [`fitting`]: syzygy matrices, Fitting ideals and hypothesis checks.
//! * [`monomial_ideal`]: the combinatorial oracle for monomial ideals.
//! * [`symbolic`]: symbolic powers via the Fitting-ideal colon formula and the
//!   certificates built on top of it.

pub mod cancel;
pub mod error;
pub mod field;
pub mod fitting;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub(crate) mod linalg;
pub mod monomial;
pub mod monomial_ideal;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod symbolic;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::PolyRing;
