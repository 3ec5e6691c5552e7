//! Exact computer algebra for the perfect-cuboid factor equations.
//!
//! The crate covers four layers:
//!
//! * [`poly`]: sparse polynomials over Q with substitution, evaluation,
//!   the S3 column action and weighted degrees;
//! * [`parse`]: the `.poly` text format, and [`corpus`] with the fourteen
//!   kernel polynomials embedded;
//! * [`system`]: the cuboid polynomials, the elementary multisymmetric
//!   substitution `phi` and its identity checks, and [`reduction`]: the
//!   elimination that collapses the 22-equation E-form system to one
//!   biquadratic equation, plus the integer lift of its solutions;
//! * [`search`]: integer search on that biquadratic and the Heron analogue.
//!
//! [`cli`] drives all of it from the `cuboid` binary.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod parse;
pub mod poly;
pub mod reduction;
pub mod report;
pub mod search;
pub mod system;

pub use error::PolyError;
pub use parse::{parse_definitions, parse_expression, render, DefinitionSet, ParseError};
pub use poly::{
    Monomial, Permutation, Polynomial, Rational, Ring, RingSignature, WeightSystem, WeightedDegree,
};
