//! Exact arithmetic: rationals, sparse multivariate polynomials, characters
//! and fractions whose denominators are products of characters.

mod character;
mod factored;
mod localized;
mod poly;
mod rational;

pub use character::Character;
pub use factored::FactoredClass;
pub use localized::{LocalizedClass, DEFAULT_SEED, MAX_RESAMPLES, SAMPLE_RANGE};
pub use poly::{elem_sym, elem_sym_all, Monomial, MultiPoly, Vars};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
