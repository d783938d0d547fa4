//! Type-A flag varieties `SL_n / B`.
//!
//! `B` is the upper-triangular Borel, characters live in the rank-`n`
//! lattice `t_1..t_n`, and the tangent space at `p_w` has characters
//! `t_{w(j)} - t_{w(i)}` for `i < j`. Schubert classes come from Fulton's
//! double Schubert polynomials; the indexing, sign and direction of the Weyl
//! action on the second variable set are fixed by [`calibrate`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::localize::LocalizationTable;
use crate::symalg::{rat, Character, FactoredClass, LocalizedClass, MultiPoly, Vars};
use crate::torusgeom::{FixedPoint, FixedPointSpace};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // zero-based images
    images: Vec<usize>,
    length: usize,
}

impl Permutation {
    /// From zero-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
        }
        let length = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| images[i] > images[j])
            .count();
        Ok(Permutation { images, length })
    }

    /// From one-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_line(w: &[usize]) -> Result<Self> {
        if w.contains(&0) {
            return Err(Error::Invalid(format!(
                "one-line notation is 1-based: {w:?}"
            )));
        }
        Self::new(w.iter().map(|&i| i - 1).collect())
    }

    /// Parses `"213"` or `"2,1,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse().ok()).collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let digits = digits.ok_or_else(|| Error::Invalid(format!("bad permutation '{s}'")))?;
        Self::from_one_line(&digits)
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
            length: 0,
        }
    }

    /// The longest element `w_0 = n ... 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
            length: n * n.saturating_sub(1) / 2,
        }
    }

    /// The simple transposition `s_i` swapping `i` and `i + 1` (zero-based).
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i + 1 >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(2),
            });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Ok(Permutation { images, length: 1 })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `w(i)`, zero-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (i, &w) in self.images.iter().enumerate() {
            inv[w] = i;
        }
        Permutation {
            images: inv,
            length: self.length,
        }
    }

    /// `self ∘ other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.size(), other.size());
        Self::new(other.images.iter().map(|&i| self.images[i]).collect())
            .expect("composition of permutations")
    }

    /// `w s_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i, i + 1);
        let length = if images[i] > images[i + 1] {
            self.length + 1
        } else {
            self.length - 1
        };
        Permutation { images, length }
    }

    /// All `n!` permutations in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation::new(prefix.clone()).expect("bijection"));
                return;
            }
            for k in 0..used.len() {
                if !used[k] {
                    used[k] = true;
                    prefix.push(k);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[k] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// Bruhat order by the tableau criterion: for every `k`, the sorted first
    /// `k` entries of `self` are dominated entrywise by those of `other`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.size(), other.size());
        if self.length > other.length {
            return false;
        }
        let mut a = Vec::with_capacity(self.size());
        let mut b = Vec::with_capacity(self.size());
        for k in 0..self.size() {
            a.push(self.images[k]);
            b.push(other.images[k]);
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() > 9 { "," } else { "" };
        let s: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

/// Positive roots `t_i - t_j`, `i < j`, of `SL_n` in the rank-`n` lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeARootData {
    n: usize,
}

impl TypeARootData {
    pub fn new(n: usize) -> Self {
        TypeARootData { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self, i: usize, j: usize) -> Character {
        &Character::unit(self.n, i) - &Character::unit(self.n, j)
    }

    pub fn positive_roots(&self) -> Vec<Character> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.root(i, j))
            .collect()
    }

    pub fn num_positive(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Invalid(format!(
            "flag varieties need n >= 2, got {n}"
        )));
    }
    Ok(())
}

fn check_perm(n: usize, w: &Permutation) -> Result<()> {
    if w.size() != n {
        return Err(Error::Invalid(format!("{w} is not in S_{n}")));
    }
    Ok(())
}

fn tangent_at(n: usize, w: &Permutation) -> Vec<Character> {
    let roots = TypeARootData::new(n);
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| roots.root(w.apply(j), w.apply(i)))
        .collect()
}

/// The `n!` fixed points `p_w`, ids in one-line notation.
pub fn flag_fixed_points(n: usize) -> Result<FixedPointSpace> {
    check_n(n)?;
    let points = Permutation::all(n)
        .into_iter()
        .map(|w| FixedPoint {
            id: w.to_string(),
            tangent: tangent_at(n, &w),
        })
        .collect();
    FixedPointSpace::new(n, points)
}

/// `c_w = (-1)^N (-1)^w ∏_{α>0} α` with `N` the number of positive roots.
pub fn c_w_class(n: usize, w: &Permutation) -> Result<FactoredClass> {
    check_perm(n, w)?;
    let roots = TypeARootData::new(n);
    let sign = if roots.num_positive().is_multiple_of(2) {
        1
    } else {
        -1
    } * w.sign();
    FactoredClass::new(rat(sign), roots.positive_roots())
}

/// Variables `x_1..x_n, y_1..y_n`. All `2n` are declared linear so that
/// differences `x_i - x_{i+1}` are characters and divide exactly.
pub fn double_vars(n: usize) -> Arc<Vars> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("y{i}")));
    Vars::new(names, 2 * n)
}

/// An element of `R ⊗ R` written in `x` (first factor) and `y` (second
/// factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleClass {
    n: usize,
    poly: MultiPoly,
}

impl DoubleClass {
    pub fn new(n: usize, poly: MultiPoly) -> Result<Self> {
        let expect = double_vars(n);
        if **poly.vars() != *expect {
            return Err(Error::VariableMismatch {
                left: poly.vars().to_string(),
                right: expect.to_string(),
            });
        }
        Ok(DoubleClass { n, poly })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.homogeneous_degree()
    }

    pub fn one(n: usize) -> Self {
        DoubleClass {
            n,
            poly: MultiPoly::one(&double_vars(n)),
        }
    }

    /// `x_i`, zero-based.
    pub fn x(n: usize, i: usize) -> Self {
        DoubleClass {
            n,
            poly: MultiPoly::var(&double_vars(n), i),
        }
    }

    /// `y_i`, zero-based.
    pub fn y(n: usize, i: usize) -> Self {
        DoubleClass {
            n,
            poly: MultiPoly::var(&double_vars(n), n + i),
        }
    }

    fn from_torus(lambda: &MultiPoly, n: usize, image: impl Fn(usize) -> usize) -> Result<Self> {
        if lambda.vars().len() != n || lambda.vars().torus_rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: lambda.vars().len(),
            });
        }
        let vars = double_vars(n);
        let images: Vec<MultiPoly> = (0..n).map(|k| MultiPoly::var(&vars, image(k))).collect();
        Ok(DoubleClass {
            n,
            poly: lambda.map_vars(&vars, &images),
        })
    }

    /// `λ ⊗ 1`: `t_k -> x_k`.
    pub fn rho1(n: usize, lambda: &MultiPoly) -> Result<Self> {
        Self::from_torus(lambda, n, |k| k)
    }

    /// `1 ⊗ λ`, with `t_k` sent to `y_{w_0(k)}` so that restriction at `p_u`
    /// acts on `λ` by `u`.
    pub fn rho2(n: usize, lambda: &MultiPoly) -> Result<Self> {
        Self::from_torus(lambda, n, |k| 2 * n - 1 - k)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(DoubleClass {
            n: self.n,
            poly: self.poly.try_mul(&other.poly)?,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(DoubleClass {
            n: self.n,
            poly: self.poly.try_add(&other.poly)?,
        })
    }

    pub fn scale(&self, c: i64) -> Self {
        DoubleClass {
            n: self.n,
            poly: self.poly.scale(&rat(c)),
        }
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, zero-based `i`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i + 1 >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n - 2,
            });
        }
        let vars = self.poly.vars();
        let mut images: Vec<MultiPoly> = (0..vars.len()).map(|k| MultiPoly::var(vars, k)).collect();
        images.swap(i, i + 1);
        let swapped = self.poly.map_vars(vars, &images);
        let diff = self.poly.try_sub(&swapped)?;
        let mut chi = vec![0; 2 * self.n];
        chi[i] = 1;
        chi[i + 1] = -1;
        Ok(DoubleClass {
            n: self.n,
            poly: diff.divide_by_character(&Character::new(chi))?,
        })
    }
}

impl fmt::Display for DoubleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Fulton's double Schubert polynomial: `𝔖_{w_0} = ∏_{i+j≤n} (x_i - y_j)`
/// and `𝔖_w = ∂_i 𝔖_{w s_i}` whenever `ℓ(w s_i) = ℓ(w) + 1`.
pub fn schubert_polynomial(n: usize, w: &Permutation) -> Result<DoubleClass> {
    check_n(n)?;
    check_perm(n, w)?;
    let mut steps = Vec::new();
    let mut cur = w.clone();
    while let Some(i) = (0..n - 1).find(|&i| cur.apply(i) < cur.apply(i + 1)) {
        steps.push(i);
        cur = cur.swap_positions(i);
    }
    let mut top = DoubleClass::one(n);
    for i in 0..n {
        for j in 0..n - 1 - i {
            let f = DoubleClass::x(n, i).try_add(&DoubleClass::y(n, j).scale(-1))?;
            top = top.try_mul(&f)?;
        }
    }
    steps
        .iter()
        .rev()
        .try_fold(top, |acc, &i| acc.divided_difference(i))
}

/// Which double Schubert polynomial represents `[X_v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexRule {
    W0V,
    VW0,
    VInvW0,
    W0VInv,
}

/// The substitution `y_i -> t_{σ(i)}` used when restricting to `p_u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum YDirection {
    U,
    UInv,
    UW0,
    W0U,
    UW0Inv,
    W0UInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignRule {
    None,
    Length,
    Codim,
}

impl IndexRule {
    pub const ALL: [IndexRule; 4] = [Self::W0V, Self::VW0, Self::VInvW0, Self::W0VInv];

    pub fn index(self, v: &Permutation) -> Permutation {
        let w0 = Permutation::longest(v.size());
        match self {
            Self::W0V => w0.compose(v),
            Self::VW0 => v.compose(&w0),
            Self::VInvW0 => v.inverse().compose(&w0),
            Self::W0VInv => w0.compose(&v.inverse()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::W0V => "w0*v",
            Self::VW0 => "v*w0",
            Self::VInvW0 => "v^-1*w0",
            Self::W0VInv => "w0*v^-1",
        }
    }
}

impl YDirection {
    pub const ALL: [YDirection; 6] = [
        Self::U,
        Self::UInv,
        Self::UW0,
        Self::W0U,
        Self::UW0Inv,
        Self::W0UInv,
    ];

    pub fn sigma(self, u: &Permutation) -> Permutation {
        let w0 = Permutation::longest(u.size());
        match self {
            Self::U => u.clone(),
            Self::UInv => u.inverse(),
            Self::UW0 => u.compose(&w0),
            Self::W0U => w0.compose(u),
            Self::UW0Inv => u.compose(&w0).inverse(),
            Self::W0UInv => w0.compose(u).inverse(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::U => "u",
            Self::UInv => "u^-1",
            Self::UW0 => "u*w0",
            Self::W0U => "w0*u",
            Self::UW0Inv => "(u*w0)^-1",
            Self::W0UInv => "(w0*u)^-1",
        }
    }
}

impl SignRule {
    pub const ALL: [SignRule; 3] = [Self::None, Self::Length, Self::Codim];

    pub fn sign(self, v: &Permutation) -> i64 {
        let n = v.size();
        let k = match self {
            Self::None => 0,
            Self::Length => v.length(),
            Self::Codim => n * (n - 1) / 2 - v.length(),
        };
        if k % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::None => "+1",
            Self::Length => "(-1)^l(v)",
            Self::Codim => "(-1)^codim(v)",
        }
    }
}

/// One candidate convention. `x_i -> t_i` is fixed throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Convention {
    pub index: IndexRule,
    pub y: YDirection,
    pub sign: SignRule,
}

impl Convention {
    pub fn candidates() -> Vec<Convention> {
        let mut out = Vec::new();
        for index in IndexRule::ALL {
            for y in YDirection::ALL {
                for sign in SignRule::ALL {
                    out.push(Convention { index, y, sign });
                }
            }
        }
        out
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_v = {} * S_{{{}}}, y_i -> t_{{({})(i)}}",
            self.sign.name(),
            self.index.name(),
            self.y.name()
        )
    }
}

pub fn double_schubert_with(n: usize, v: &Permutation, conv: Convention) -> Result<DoubleClass> {
    check_perm(n, v)?;
    Ok(schubert_polynomial(n, &conv.index.index(v))?.scale(conv.sign.sign(v)))
}

/// `m ∘ (1 × u)`: `x_i -> t_i`, `y_i -> t_{σ(i)}` for the given direction.
pub fn restrict_double_with(
    f: &DoubleClass,
    u: &Permutation,
    dir: YDirection,
) -> Result<MultiPoly> {
    let n = f.n();
    check_perm(n, u)?;
    let sigma = dir.sigma(u);
    let tv = Vars::torus(n);
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| MultiPoly::var(&tv, i))
        .chain((0..n).map(|i| MultiPoly::var(&tv, sigma.apply(i))))
        .collect();
    Ok(f.poly().map_vars(&tv, &images))
}

fn raw_table(
    n: usize,
    v: &Permutation,
    conv: Convention,
) -> Result<Vec<(Permutation, LocalizedClass)>> {
    let f = double_schubert_with(n, v, conv)?;
    Permutation::all(n)
        .into_par_iter()
        .map(|u| {
            let r = restrict_double_with(&f, &u, conv.y)?;
            let c = c_w_class(n, &u)?;
            let beta = LocalizedClass::from_poly(r).div_factored(&c);
            Ok((u, beta))
        })
        .collect()
}

/// Outcome of one candidate on the validation suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateResult {
    pub convention: Convention,
    /// `v = w_0` gives `u -> 1/c_u`.
    pub fundamental_class: bool,
    /// `v = e` gives `{e -> 1}`.
    pub point_class: bool,
    /// `β_u ≠ 0` iff `u ≤ v`.
    pub support: bool,
    /// `β_v = 1 / ∏` of the positive-root tangent characters at `p_v`.
    pub smooth_point: bool,
}

impl CandidateResult {
    pub fn passed(&self) -> bool {
        self.fundamental_class && self.point_class && self.support && self.smooth_point
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationReport {
    pub sizes: Vec<usize>,
    pub candidates: Vec<CandidateResult>,
}

impl CalibrationReport {
    pub fn passing(&self) -> Vec<Convention> {
        self.candidates
            .iter()
            .filter(|c| c.passed())
            .map(|c| c.convention)
            .collect()
    }

    /// The unique passing convention.
    pub fn selected(&self) -> Result<Convention> {
        match self.passing().as_slice() {
            [one] => Ok(*one),
            [] => Err(Error::CalibrationFailed(
                "no candidate convention passes".into(),
            )),
            many => Err(Error::CalibrationFailed(format!(
                "{} candidate conventions pass",
                many.len()
            ))),
        }
    }
}

fn evaluate_candidate(sizes: &[usize], conv: Convention) -> Result<CandidateResult> {
    let mut res = CandidateResult {
        convention: conv,
        fundamental_class: true,
        point_class: true,
        support: true,
        smooth_point: true,
    };
    for &n in sizes {
        let tv = Vars::torus(n);
        let e = Permutation::identity(n);
        let w0 = Permutation::longest(n);
        for v in Permutation::all(n) {
            let table = raw_table(n, &v, conv)?;
            if v == w0 {
                res.fundamental_class &= table.iter().all(|(u, b)| {
                    let c = c_w_class(n, u).expect("in S_n");
                    *b == LocalizedClass::invert(&c, &tv)
                });
            }
            if v == e {
                res.point_class &= table.iter().all(|(u, b)| {
                    if *u == e {
                        *b == LocalizedClass::one(&tv)
                    } else {
                        b.is_zero()
                    }
                });
            }
            res.support &= table.iter().all(|(u, b)| b.is_zero() != u.bruhat_leq(&v));
            let cell = FactoredClass::from_characters(
                tangent_at(n, &v)
                    .into_iter()
                    .filter(|c| c.coeffs().iter().find(|&&k| k != 0) == Some(&1)),
            )?;
            let at_v = &table.iter().find(|(u, _)| *u == v).expect("v in S_n").1;
            res.smooth_point &= *at_v == LocalizedClass::invert(&cell, &tv);
        }
    }
    Ok(res)
}

/// Runs every candidate convention on `S_n` for each `n` in `sizes`.
pub fn calibrate(sizes: &[usize]) -> Result<CalibrationReport> {
    for &n in sizes {
        check_n(n)?;
    }
    let candidates = Convention::candidates()
        .into_par_iter()
        .map(|c| evaluate_candidate(sizes, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(CalibrationReport {
        sizes: sizes.to_vec(),
        candidates,
    })
}

/// The convention selected on `S_2` and `S_3`, computed once.
pub fn calibrated() -> Result<Convention> {
    static CELL: OnceLock<std::result::Result<Convention, String>> = OnceLock::new();
    CELL.get_or_init(|| {
        calibrate(&[2, 3])
            .and_then(|r| r.selected())
            .map_err(|e| e.to_string())
    })
    .clone()
    .map_err(Error::CalibrationFailed)
}

/// `F_v` representing `[X_v]` under the calibrated convention.
pub fn double_schubert(n: usize, v: &Permutation) -> Result<DoubleClass> {
    double_schubert_with(n, v, calibrated()?)
}

/// `F(u)` under the calibrated direction of the Weyl action.
pub fn restrict_double(f: &DoubleClass, u: &Permutation) -> Result<MultiPoly> {
    restrict_double_with(f, u, calibrated()?.y)
}

/// `β_u = F_v(u) / c_u` for `u ≤ v`, zero otherwise.
pub fn schubert_localize(n: usize, v: &Permutation) -> Result<LocalizationTable> {
    check_n(n)?;
    let space = flag_fixed_points(n)?;
    let f = double_schubert(n, v)?;
    let tv = space.vars().clone();
    let entries = Permutation::all(n)
        .into_par_iter()
        .map(|u| {
            let beta = if u.bruhat_leq(v) {
                let r = restrict_double(&f, &u)?;
                LocalizedClass::from_poly(r).div_factored(&c_w_class(n, &u)?)
            } else {
                LocalizedClass::zero(&tv)
            };
            Ok((u.to_string(), beta))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    LocalizationTable::new(space, entries)
}

/// Brion's equivariant multiplicity of `X_w` at `p_u`: `F_w(u) / c_u`.
pub fn equivariant_multiplicity(
    n: usize,
    w: &Permutation,
    u: &Permutation,
) -> Result<LocalizedClass> {
    let f = double_schubert(n, w)?;
    let r = restrict_double(&f, u)?;
    Ok(LocalizedClass::from_poly(r).div_factored(&c_w_class(n, u)?))
}
