use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::character::Character;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Exponent vector, one entry per declared variable.
pub type Monomial = Vec<u32>;

/// A declared variable set. The first `linear` variables are the torus
/// coordinates `t_1..t_r` on which [`Character`]s act; the rest are extra
/// generators such as `h` or formal Chern symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars {
    names: Vec<String>,
    linear: usize,
}

impl Vars {
    pub fn new(names: Vec<String>, linear: usize) -> Arc<Vars> {
        assert!(linear <= names.len());
        Arc::new(Vars { names, linear })
    }

    /// `t1..tr`.
    pub fn torus(rank: usize) -> Arc<Vars> {
        Self::with_extras(rank, &[])
    }

    /// `t1..tr` followed by the given extra generators.
    pub fn with_extras(rank: usize, extras: &[&str]) -> Arc<Vars> {
        let mut names: Vec<String> = (1..=rank).map(|k| format!("t{k}")).collect();
        names.extend(extras.iter().map(|s| s.to_string()));
        Self::new(names, rank)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn torus_rank(&self) -> usize {
        self.linear
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn compatible(a: &Arc<Vars>, b: &Arc<Vars>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` so iteration order (and therefore every
/// printed form) is deterministic. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<Vars>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<Vars>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<Vars>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<Vars>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The variable with the given index.
    pub fn var(vars: &Arc<Vars>, index: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[index] = 1;
        Self::monomial(vars, m, Rational::one())
    }

    pub fn monomial(vars: &Arc<Vars>, exps: Monomial, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "monomial length mismatch");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(
        vars: &Arc<Vars>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial length mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// The linear form of a character in the leading torus variables.
    pub fn from_character(vars: &Arc<Vars>, chi: &Character) -> Result<Self> {
        if chi.rank() != vars.torus_rank() {
            return Err(Error::RankMismatch {
                expected: vars.torus_rank(),
                found: chi.rank(),
            });
        }
        let mut p = Self::zero(vars);
        for (k, &c) in chi.coeffs().iter().enumerate() {
            if c != 0 {
                let mut m = vec![0; vars.len()];
                m[k] = 1;
                p.terms.insert(m, Rational::from_integer(c.into()));
            }
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(c)` when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest total degree of a term; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// The common degree of all terms, or `None` if the polynomial is zero or
    /// inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// True for the zero polynomial or when every term has degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.iter().sum::<u32>() == d)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    /// True if no term involves variables past the torus block.
    pub fn is_torus_only(&self) -> bool {
        let r = self.vars.torus_rank();
        self.terms.keys().all(|m| m[r..].iter().all(|&e| e == 0))
    }

    /// Splits `self = sum_k P_k * var^k` with every `P_k` free of `var`.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m[var];
            let mut m2 = m.clone();
            m2[var] = 0;
            out.entry(k)
                .or_insert_with(|| MultiPoly::zero(&self.vars))
                .terms
                .insert(m2, c.clone());
        }
        out
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if Vars::compatible(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(&self.vars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Multiplication by the linear form of `chi`.
    pub fn mul_character(&self, chi: &Character) -> MultiPoly {
        assert_eq!(
            chi.rank(),
            self.vars.torus_rank(),
            "character rank mismatch"
        );
        let mut out = MultiPoly::zero(&self.vars);
        for (k, &a) in chi.coeffs().iter().enumerate() {
            if a == 0 {
                continue;
            }
            let a = Rational::from_integer(a.into());
            for (m, c) in &self.terms {
                let mut m2 = m.clone();
                m2[k] += 1;
                out.add_term(m2, c * &a);
            }
        }
        out
    }

    /// Exact division by the linear form of a nonzero character.
    ///
    /// Synthetic division in the first variable the character involves;
    /// fails with [`Error::Indivisible`] when a nonzero remainder is left.
    pub fn divide_by_character(&self, chi: &Character) -> Result<MultiPoly> {
        if chi.rank() != self.vars.torus_rank() {
            return Err(Error::RankMismatch {
                expected: self.vars.torus_rank(),
                found: chi.rank(),
            });
        }
        let (pivot, lead) = chi
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, Rational::from_integer(c.into())))
            .ok_or(Error::ZeroCharacter)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        // chi = lead * x_pivot + rest
        let mut rest_coeffs = chi.coeffs().to_vec();
        rest_coeffs[pivot] = 0;
        let rest = Character::new(rest_coeffs);

        let parts = self.coefficients_in(pivot);
        let top = *parts.keys().next_back().unwrap();
        if top == 0 {
            return Err(Error::Indivisible(chi.to_string()));
        }
        let zero = MultiPoly::zero(&self.vars);
        let inv_lead = lead.recip();
        // quotient coefficients q[k] for k = 0..top-1
        let mut q: Vec<MultiPoly> = vec![zero.clone(); top as usize];
        q[top as usize - 1] = parts[&top].scale(&inv_lead);
        for k in (1..top).rev() {
            let pk = parts.get(&k).unwrap_or(&zero);
            let r = pk - &q[k as usize].mul_character(&rest);
            q[k as usize - 1] = r.scale(&inv_lead);
        }
        let p0 = parts.get(&0).unwrap_or(&zero);
        if *p0 != q[0].mul_character(&rest) {
            return Err(Error::Indivisible(chi.to_string()));
        }
        let mut out = MultiPoly::zero(&self.vars);
        for (k, qk) in q.into_iter().enumerate() {
            for (mut m, c) in qk.terms {
                m[pivot] += k as u32;
                out.terms.insert(m, c);
            }
        }
        Ok(out)
    }

    /// Substitutes `var := image` (image may involve any variables).
    pub fn substitute(&self, var: usize, image: &MultiPoly) -> MultiPoly {
        assert!(Vars::compatible(&self.vars, &image.vars));
        let parts = self.coefficients_in(var);
        let top = match parts.keys().next_back() {
            Some(&t) => t,
            None => return self.clone(),
        };
        // Horner
        let zero = MultiPoly::zero(&self.vars);
        let mut acc = parts.get(&top).cloned().unwrap_or_else(|| zero.clone());
        for k in (0..top).rev() {
            acc = &acc * image;
            if let Some(pk) = parts.get(&k) {
                acc = &acc + pk;
            }
        }
        acc
    }

    /// Ring homomorphism into another variable set, sending variable `i` to
    /// `images[i]`.
    pub fn map_vars(&self, target: &Arc<Vars>, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|img| vec![MultiPoly::one(target), img.clone()])
            .collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates at an integer point (one entry per variable).
    pub fn evaluate(&self, point: &[i64]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (&e, &x) in m.iter().zip(point) {
                if e > 0 {
                    v *= Rational::from_integer(num_bigint::BigInt::from(x).pow(e));
                }
            }
            acc += v;
        }
        acc
    }

    /// The leading term under the lexicographic monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// The `i`-th elementary symmetric polynomial of the linear forms `chars`.
pub fn elem_sym(vars: &Arc<Vars>, chars: &[Character], i: usize) -> Result<MultiPoly> {
    if i > chars.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: chars.len(),
        });
    }
    Ok(elem_sym_all(vars, chars)?.swap_remove(i))
}

/// All elementary symmetric polynomials `e_0..e_m` of `chars`.
pub fn elem_sym_all(vars: &Arc<Vars>, chars: &[Character]) -> Result<Vec<MultiPoly>> {
    let mut e = vec![MultiPoly::one(vars)];
    for chi in chars {
        if chi.rank() != vars.torus_rank() {
            return Err(Error::RankMismatch {
                expected: vars.torus_rank(),
                found: chi.rank(),
            });
        }
        e.push(MultiPoly::zero(vars));
        for k in (1..e.len()).rev() {
            let add = e[k - 1].mul_character(chi);
            e[k] = &e[k] + &add;
        }
    }
    Ok(e)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = m.iter().all(|&e| e == 0);
            if is_const {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let mut first = true;
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars.names[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                first = false;
            }
        }
        Ok(())
    }
}
