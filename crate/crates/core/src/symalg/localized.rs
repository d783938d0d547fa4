use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::character::Character;
use super::factored::FactoredClass;
use super::poly::{MultiPoly, Vars};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Resampling budget when a generic evaluation point hits a denominator zero.
pub const MAX_RESAMPLES: usize = 8;

/// Coordinates of sampled evaluation points lie in `[-SAMPLE_RANGE, SAMPLE_RANGE]`.
pub const SAMPLE_RANGE: i64 = 97;

/// Seed of the sampler used by [`LocalizedClass::constant_value`].
pub const DEFAULT_SEED: u64 = 0x5eed_e91c;

/// A fraction `numerator / prod(chi^m)` with primitive nonzero characters in
/// the denominator.
///
/// Always kept in canonical form: no denominator factor divides the
/// numerator, and zero has an empty denominator. Two canonical fractions are
/// equal as elements of the localized ring iff they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedClass {
    numerator: MultiPoly,
    denominator: BTreeMap<Character, u32>,
}

impl LocalizedClass {
    pub fn zero(vars: &Arc<Vars>) -> Self {
        Self::from_poly(MultiPoly::zero(vars))
    }

    pub fn one(vars: &Arc<Vars>) -> Self {
        Self::from_poly(MultiPoly::one(vars))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        LocalizedClass {
            numerator: p,
            denominator: BTreeMap::new(),
        }
    }

    /// `numerator / prod(chars)`, normalized.
    pub fn new(numerator: MultiPoly, chars: impl IntoIterator<Item = Character>) -> Result<Self> {
        let f = FactoredClass::from_characters(chars)?;
        Ok(Self::from_poly(numerator).div_factored(&f))
    }

    /// `1 / f`.
    pub fn invert(f: &FactoredClass, vars: &Arc<Vars>) -> Self {
        Self::from_poly(MultiPoly::one(vars)).div_factored(f)
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<Character, u32> {
        &self.denominator
    }

    pub fn vars(&self) -> &Arc<Vars> {
        self.numerator.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn denominator_degree(&self) -> u32 {
        self.denominator.values().sum()
    }

    pub fn denominator_poly(&self) -> MultiPoly {
        self.denominator
            .iter()
            .fold(MultiPoly::one(self.vars()), |mut acc, (chi, &m)| {
                for _ in 0..m {
                    acc = acc.mul_character(chi);
                }
                acc
            })
    }

    /// Numerator degree minus denominator degree, when the numerator is
    /// homogeneous. Zero has degree `Some(0)`.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            return Some(0);
        }
        self.numerator
            .homogeneous_degree()
            .map(|d| d as i64 - self.denominator_degree() as i64)
    }

    pub fn div_factored(&self, f: &FactoredClass) -> Self {
        let mut den = self.denominator.clone();
        for chi in f.factors() {
            *den.entry(chi.clone()).or_insert(0) += 1;
        }
        let num = self.numerator.scale(&f.scalar().recip());
        Self::normalized(num, den)
    }

    /// Trial division of every denominator factor.
    fn normalized(mut num: MultiPoly, den: BTreeMap<Character, u32>) -> Self {
        if num.is_zero() {
            return Self::from_poly(num);
        }
        let mut out = BTreeMap::new();
        for (chi, m) in den {
            let mut left = m;
            while left > 0 {
                match num.divide_by_character(&chi) {
                    Ok(q) => {
                        num = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                out.insert(chi, left);
            }
        }
        LocalizedClass {
            numerator: num,
            denominator: out,
        }
    }

    /// Re-runs normalization; a no-op on canonical values.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.numerator.clone(), self.denominator.clone())
    }

    /// The numerator after rewriting over the larger denominator `den`
    /// (which must contain this class's denominator).
    pub fn numerator_over(&self, den: &BTreeMap<Character, u32>) -> MultiPoly {
        let mut num = self.numerator.clone();
        for (chi, &m) in den {
            let have = self.denominator.get(chi).copied().unwrap_or(0);
            for _ in have..m {
                num = num.mul_character(chi);
            }
        }
        num
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Self::try_sum([self, other])
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let num = self.numerator.try_mul(&other.numerator)?;
        let mut den = self.denominator.clone();
        for (chi, &m) in &other.denominator {
            *den.entry(chi.clone()).or_insert(0) += m;
        }
        Ok(Self::normalized(num, den))
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Result<Self> {
        self.try_mul(&Self::from_poly(p.clone()))
    }

    pub fn neg(&self) -> Self {
        LocalizedClass {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars());
        }
        LocalizedClass {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    /// Least common multiple of the denominators of `items`.
    pub fn common_denominator<'a>(
        items: impl IntoIterator<Item = &'a LocalizedClass>,
    ) -> BTreeMap<Character, u32> {
        let mut lcm: BTreeMap<Character, u32> = BTreeMap::new();
        for it in items {
            for (chi, &m) in &it.denominator {
                let e = lcm.entry(chi.clone()).or_insert(0);
                *e = (*e).max(m);
            }
        }
        lcm
    }

    /// Sums all terms over their least common denominator, normalizing once.
    pub fn try_sum<'a>(items: impl IntoIterator<Item = &'a LocalizedClass>) -> Result<Self> {
        let items: Vec<&LocalizedClass> = items.into_iter().collect();
        let first = match items.first() {
            Some(f) => *f,
            None => return Err(Error::Invalid("empty sum".into())),
        };
        let lcm = Self::common_denominator(items.iter().copied());
        let mut num = MultiPoly::zero(first.vars());
        for it in &items {
            num = num.try_add(&it.numerator_over(&lcm))?;
        }
        Ok(Self::normalized(num, lcm))
    }

    /// Value at an integer point, or `None` if the denominator vanishes there.
    pub fn evaluate(&self, point: &[i64]) -> Option<Rational> {
        let mut d = Rational::one();
        for (chi, &m) in &self.denominator {
            let v = chi.eval(&point[..chi.rank()]);
            if v == 0 {
                return None;
            }
            for _ in 0..m {
                d *= Rational::from_integer(v.into());
            }
        }
        Some(self.numerator.evaluate(point) / d)
    }

    /// The rational number represented by a degree-zero fraction that lies in
    /// the ground field, using the default deterministic sampler for the
    /// substitution cross-check.
    pub fn constant_value(&self) -> Result<Rational> {
        self.constant_value_with(&mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
    }

    /// As [`constant_value`](Self::constant_value) with a caller-supplied
    /// sampler. The exact identity `numerator = c * denominator` decides; two
    /// generic integer substitutions must then agree with `c`.
    pub fn constant_value_with<R: Rng>(&self, rng: &mut R) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let den_deg = self.denominator_degree();
        match self.numerator.homogeneous_degree() {
            Some(d) if d == den_deg => {}
            Some(d) => {
                return Err(Error::DegreeMismatch(format!(
                    "numerator degree {d}, denominator degree {den_deg}"
                )))
            }
            None => return Err(Error::DegreeMismatch("numerator is not homogeneous".into())),
        }
        if !self.numerator.is_torus_only() {
            return Err(Error::NotConstant(self.to_string()));
        }
        let den = self.denominator_poly();
        let (lead, lead_c) = den.leading_term().expect("nonzero denominator");
        let c = self.numerator.coeff(lead) / lead_c;
        if self.numerator != den.scale(&c) {
            return Err(Error::NotConstant(self.to_string()));
        }
        for _ in 0..2 {
            let v = self.sample_value(rng)?;
            if v != c {
                return Err(Error::NotConstant(format!(
                    "substitution gave {v}, identity gave {c}"
                )));
            }
        }
        Ok(c)
    }

    /// Evaluates at a random integer point avoiding the denominator, with at
    /// most [`MAX_RESAMPLES`] retries.
    pub fn sample_value<R: Rng>(&self, rng: &mut R) -> Result<Rational> {
        let nvars = self.vars().len();
        for _ in 0..=MAX_RESAMPLES {
            let point: Vec<i64> = (0..nvars)
                .map(|_| rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))
                .collect();
            if let Some(v) = self.evaluate(&point) {
                return Ok(v);
            }
        }
        Err(Error::DenominatorVanishes(MAX_RESAMPLES + 1))
    }
}

impl fmt::Display for LocalizedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({})/(", self.numerator)?;
        for (i, (chi, &m)) in self.denominator.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "({chi})")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        write!(f, ")")
    }
}
