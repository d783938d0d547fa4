//! Exact torus-equivariant localization on projective spaces and type-A flag
//! varieties.
//!
//! Everything is computed symbolically over `Q`: restrictions to isolated
//! fixed points are polynomials in the torus variables, Euler classes are
//! products of characters, and fixed-point sums are normalized fractions
//! whose degree-zero totals are read off as exact rationals.

pub mod bundles;
pub mod error;
pub mod localize;
pub mod schubert;
pub mod symalg;
pub mod torusgeom;

pub use bundles::{ChernFactor, ChernPolynomial, ChernTerm, EquivariantBundle};
pub use error::{Error, Result};
pub use localize::{LocalizationCheck, LocalizationTable, Residue, SingularResidue};
pub use schubert::{Convention, DoubleClass, Permutation, TypeARootData};
pub use symalg::{Character, FactoredClass, LocalizedClass, MultiPoly, Rational, Vars};
pub use torusgeom::{EquivariantClass, FixedPoint, FixedPointSpace, ProjectiveSpaceAction};
