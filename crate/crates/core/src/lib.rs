//! Relative polar multiplicities of a hypersurface singularity and the
//! Morse-type bounds they give on the Betti numbers of its real link.
//!
//! Everything is computed in exact rational arithmetic:
//!
//! - [`poly`], [`parse`]: multivariate polynomials over `Q` and an expression parser;
//! - [`ideal`]: Groebner bases, Mora standard bases, quotients, saturation,
//!   dimension and local colength;
//! - [`polar`]: polar ideals, polar multiplicities under sampled coordinate frames,
//!   critical-locus dimension and Milnor numbers;
//! - [`link`]: chain-complex ranks, telescoping sums, Morse link inequalities and
//!   feasibility checks for Betti data;
//! - [`oracle`]: independent cross-checks (truncated linear algebra colength,
//!   closed forms for Fermat polynomials, Teissier's identity).
#![no_std]

extern crate alloc;

pub mod error;
pub mod ideal;
pub mod link;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod polar;
pub mod poly;

pub use error::{FrameDefect, LinkError, OracleError, ParseError, PolarError, PolyError};
pub use ideal::{Colength, Ideal, StandardBasis};
pub use matrix::RationalMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Rational};
