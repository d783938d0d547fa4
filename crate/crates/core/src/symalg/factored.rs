use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::character::Character;
use super::poly::{MultiPoly, Vars};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A nonzero scalar times a product of primitive nonzero characters.
///
/// Euler classes at isolated fixed points live here; they are the only
/// elements the engine ever inverts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredClass {
    scalar: Rational,
    factors: Vec<Character>,
}

impl FactoredClass {
    /// Builds `scalar * prod(chars)`, moving content and sign of each
    /// character into the scalar.
    pub fn new(scalar: Rational, chars: impl IntoIterator<Item = Character>) -> Result<Self> {
        if scalar.is_zero() {
            return Err(Error::Invalid("factored class with zero scalar".into()));
        }
        let mut scalar = scalar;
        let mut factors = Vec::new();
        for chi in chars {
            let (s, p) = chi.primitive_part().ok_or(Error::ZeroCharacter)?;
            scalar *= Rational::from_integer(s.into());
            factors.push(p);
        }
        factors.sort();
        Ok(FactoredClass { scalar, factors })
    }

    pub fn from_characters(chars: impl IntoIterator<Item = Character>) -> Result<Self> {
        Self::new(Rational::one(), chars)
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    /// Primitive factors, sorted.
    pub fn factors(&self) -> &[Character] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn to_poly(&self, vars: &Arc<Vars>) -> MultiPoly {
        self.factors.iter().fold(
            MultiPoly::constant(vars, self.scalar.clone()),
            |acc, chi| acc.mul_character(chi),
        )
    }

    pub fn mul(&self, other: &FactoredClass) -> FactoredClass {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        factors.sort();
        FactoredClass {
            scalar: &self.scalar * &other.scalar,
            factors,
        }
    }
}

impl fmt::Display for FactoredClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for chi in &self.factors {
            write!(f, "*({chi})")?;
        }
        Ok(())
    }
}
