//! Equivariant vector bundles presented by their fiber characters at fixed
//! points, and Chern polynomials evaluated there.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::symalg::{elem_sym, elem_sym_all, Character, MultiPoly, Rational, Vars};
use crate::torusgeom::{FixedPointSpace, ProjectiveSpaceAction};

/// A rank-`rank` equivariant bundle, known through its fiber representation
/// at each fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantBundle {
    rank: usize,
    weights: BTreeMap<String, Vec<Character>>,
}

impl EquivariantBundle {
    pub fn explicit(rank: usize, weights: BTreeMap<String, Vec<Character>>) -> Result<Self> {
        for (id, w) in &weights {
            if w.len() != rank {
                return Err(Error::Invalid(format!(
                    "bundle of rank {rank} has {} weights at `{id}`",
                    w.len()
                )));
            }
        }
        Ok(EquivariantBundle { rank, weights })
    }

    /// The tangent bundle: fiber characters are the tangent characters.
    pub fn tangent(space: &FixedPointSpace) -> Self {
        EquivariantBundle {
            rank: space.dim(),
            weights: space
                .points()
                .iter()
                .map(|p| (p.id.clone(), p.tangent.clone()))
                .collect(),
        }
    }

    /// `O(d)` twisted by `chi`: weight `-d a_i + chi` at `p_i`.
    pub fn line(action: &ProjectiveSpaceAction, d: i64, chi: &Character) -> Result<Self> {
        if chi.rank() != action.rank() {
            return Err(Error::RankMismatch {
                expected: action.rank(),
                found: chi.rank(),
            });
        }
        let weights = action
            .weights()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                (
                    ProjectiveSpaceAction::point_id(i),
                    vec![&a.scaled(-d) + chi],
                )
            })
            .collect();
        Ok(EquivariantBundle { rank: 1, weights })
    }

    /// Pullback along a map of fixed points `x -> point_map[x]`.
    pub fn pullback<'a>(
        x_points: impl IntoIterator<Item = &'a str>,
        point_map: &BTreeMap<String, String>,
        bundle: &EquivariantBundle,
    ) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for x in x_points {
            let y = point_map
                .get(x)
                .ok_or_else(|| Error::UnmappedPoint(x.to_string()))?;
            weights.insert(x.to_string(), bundle.weights_at(y)?.to_vec());
        }
        Ok(EquivariantBundle {
            rank: bundle.rank,
            weights,
        })
    }

    /// Restriction to a subset of the fixed points.
    pub fn restrict_to<'a>(&self, ids: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for id in ids {
            weights.insert(id.to_string(), self.weights_at(id)?.to_vec());
        }
        Ok(EquivariantBundle {
            rank: self.rank,
            weights,
        })
    }

    pub fn direct_sum(&self, other: &EquivariantBundle) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for (id, w) in &self.weights {
            let mut w = w.clone();
            w.extend(other.weights_at(id)?.iter().cloned());
            weights.insert(id.clone(), w);
        }
        Ok(EquivariantBundle {
            rank: self.rank + other.rank,
            weights,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn points(&self) -> impl Iterator<Item = &str> {
        self.weights.keys().map(|s| s.as_str())
    }

    pub fn weights_at(&self, id: &str) -> Result<&[Character]> {
        self.weights
            .get(id)
            .map(|w| w.as_slice())
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))
    }

    /// `c_i^T(E)|_p`: the `i`-th elementary symmetric polynomial of the fiber
    /// characters at `p`.
    pub fn chern_at_point(&self, vars: &Arc<Vars>, id: &str, i: usize) -> Result<MultiPoly> {
        elem_sym(vars, self.weights_at(id)?, i)
    }

    /// `c_0..c_rank` at `p`.
    pub fn chern_classes_at(&self, vars: &Arc<Vars>, id: &str) -> Result<Vec<MultiPoly>> {
        elem_sym_all(vars, self.weights_at(id)?)
    }
}

pub fn tangent_bundle(space: &FixedPointSpace) -> EquivariantBundle {
    EquivariantBundle::tangent(space)
}

pub fn line_bundle(
    action: &ProjectiveSpaceAction,
    d: i64,
    chi: &Character,
) -> Result<EquivariantBundle> {
    EquivariantBundle::line(action, d, chi)
}

pub fn pullback_bundle<'a>(
    x_points: impl IntoIterator<Item = &'a str>,
    point_map: &BTreeMap<String, String>,
    bundle: &EquivariantBundle,
) -> Result<EquivariantBundle> {
    EquivariantBundle::pullback(x_points, point_map, bundle)
}

pub fn chern_at_point(
    bundle: &EquivariantBundle,
    vars: &Arc<Vars>,
    id: &str,
    i: usize,
) -> Result<MultiPoly> {
    bundle.chern_at_point(vars, id, i)
}

/// `c_index(E_bundle)^power`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChernFactor {
    pub bundle: usize,
    pub index: usize,
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernTerm {
    pub coeff: Rational,
    pub factors: Vec<ChernFactor>,
}

impl ChernTerm {
    pub fn weighted_degree(&self) -> u32 {
        self.factors.iter().map(|f| f.index as u32 * f.power).sum()
    }
}

/// A polynomial in formal Chern symbols `x^i_j` (`i`-th Chern class of bundle
/// `j`, weighted degree `i`), homogeneous of a declared weighted degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernPolynomial {
    degree: u32,
    terms: Vec<ChernTerm>,
}

impl ChernPolynomial {
    pub fn new(degree: u32, terms: Vec<ChernTerm>) -> Result<Self> {
        for t in &terms {
            if t.weighted_degree() != degree {
                return Err(Error::DegreeMismatch(format!(
                    "Chern monomial of weighted degree {} in a polynomial of degree {degree}",
                    t.weighted_degree()
                )));
            }
        }
        Ok(ChernPolynomial { degree, terms })
    }

    /// Infers the degree from the terms; fails if they disagree.
    pub fn homogeneous(terms: Vec<ChernTerm>) -> Result<Self> {
        let d = terms.first().map_or(0, |t| t.weighted_degree());
        Self::new(d, terms)
    }

    pub fn constant(c: Rational) -> Self {
        ChernPolynomial {
            degree: 0,
            terms: vec![ChernTerm {
                coeff: c,
                factors: vec![],
            }],
        }
    }

    /// A single monomial `prod c_index(E_bundle)` with coefficient one; each
    /// pair is `(bundle, index)`.
    pub fn monomial(factors: &[(usize, usize)]) -> Self {
        let t = ChernTerm {
            coeff: Rational::from_integer(1.into()),
            factors: factors
                .iter()
                .map(|&(bundle, index)| ChernFactor {
                    bundle,
                    index,
                    power: 1,
                })
                .collect(),
        };
        ChernPolynomial {
            degree: t.weighted_degree(),
            terms: vec![t],
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &[ChernTerm] {
        &self.terms
    }

    pub fn try_add(&self, other: &ChernPolynomial) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(self.degree, terms)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ChernPolynomial {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|t| ChernTerm {
                    coeff: &t.coeff * c,
                    factors: t.factors.clone(),
                })
                .collect(),
        }
    }

    /// `p^T(E)|_p`: substitutes `x^i_j := c_i^T(E_j)|_p`.
    pub fn eval_at(
        &self,
        bundles: &[EquivariantBundle],
        vars: &Arc<Vars>,
        id: &str,
    ) -> Result<MultiPoly> {
        let mut classes: BTreeMap<usize, Vec<MultiPoly>> = BTreeMap::new();
        let mut out = MultiPoly::zero(vars);
        for term in &self.terms {
            if term.coeff.is_zero() {
                continue;
            }
            let mut v = MultiPoly::constant(vars, term.coeff.clone());
            for f in &term.factors {
                let b = bundles
                    .get(f.bundle)
                    .ok_or_else(|| Error::UndefinedBundle(format!("bundle #{}", f.bundle)))?;
                let cs = match classes.entry(f.bundle) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => e.insert(b.chern_classes_at(vars, id)?),
                };
                let c = cs.get(f.index).ok_or_else(|| {
                    Error::UndefinedBundle(format!(
                        "c_{} of bundle #{} (rank {})",
                        f.index,
                        f.bundle,
                        b.rank()
                    ))
                })?;
                v = &v * &c.pow(f.power);
            }
            out = &out + &v;
        }
        Ok(out)
    }
}

pub fn eval_chern_polynomial(
    poly: &ChernPolynomial,
    bundles: &[EquivariantBundle],
    vars: &Arc<Vars>,
    id: &str,
) -> Result<MultiPoly> {
    poly.eval_at(bundles, vars, id)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64)
}

/// `c_i^T(E_lambda) = sum_{j <= i} C(rho - j, i - j) c_j lambda^{i - j}` for a
/// rank-`rho` bundle on which the torus acts through the single character
/// `lambda`, over a base of dimension `base_dim`.
///
/// The result lives in `t_1..t_r, c_1..c_m` with `m = min(base_dim, rho)`;
/// base Chern classes above `m` vanish.
pub fn twisted_chern(rho: usize, base_dim: usize, lambda: &Character, i: usize) -> MultiPoly {
    let r = lambda.rank();
    let m = base_dim.min(rho);
    let names: Vec<String> = (1..=m).map(|j| format!("c{j}")).collect();
    let names: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let vars = Vars::with_extras(r, &names);
    let lam = MultiPoly::from_character(&vars, lambda).expect("rank");
    let mut out = MultiPoly::zero(&vars);
    for j in 0..=i.min(m) {
        let b = binomial(rho.saturating_sub(j), i - j);
        if b == 0 || j > rho {
            continue;
        }
        let cj = if j == 0 {
            MultiPoly::one(&vars)
        } else {
            MultiPoly::var(&vars, r + j - 1)
        };
        let term = (&cj * &lam.pow((i - j) as u32)).scale(&Rational::from_integer(b.into()));
        out = &out + &term;
    }
    out
}
