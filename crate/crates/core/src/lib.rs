//! Exact algebra around pointed ordinary double points.
//!
//! The crate is organised bottom-up:
//!
//! - [`ring`]: exact coefficient rings (rationals, prime fields, dual
//!   numbers, truncated local rings);
//! - [`poly`] and [`upoly`]: sparse multivariate and dense univariate
//!   polynomials over those rings;
//! - [`series`]: truncated power series in two variables with precision
//!   tracking and substitution;
//! - [`normal_form`]: quadratic normal forms, the maps `Q_n` and their right
//!   inverses, and square-zero coordinate repairs;
//! - [`dp_ring`]: canonical forms in `A[X,Y]/(q(X,Y) - q(s,t))`;
//! - [`mf`]: the matrix factorization of the pointed node, its dual
//!   fractional ideal and truncated exactness checks;
//! - [`stabilize`]: blow-up charts, flatness bases, fibers and sections.

pub mod dp_ring;
pub mod error;
pub mod linalg;
pub mod mf;
pub mod normal_form;
pub mod poly;
pub mod ring;
pub mod series;
pub mod stabilize;
pub mod upoly;

pub use error::{Error, Result};
pub use ring::{make_ring, Elem, Ring, RingDescriptor};
