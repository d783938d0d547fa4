//! The localization and residue engine.
//!
//! All sums run over isolated fixed points. A class restricted to a fixed
//! point is a polynomial in the torus variables; dividing by the Euler class
//! (the product of tangent characters) gives that point's contribution, and
//! the normalized sum of contributions is the pushforward.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bundles::{ChernPolynomial, EquivariantBundle};
use crate::error::{Error, Result};
use crate::symalg::{Character, FactoredClass, LocalizedClass, MultiPoly, Rational};
use crate::torusgeom::{EquivariantClass, FixedPointSpace, ProjectiveSpaceAction};

/// Coefficients `beta_p` of a class in the fixed-point basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationTable {
    space: FixedPointSpace,
    entries: Vec<(String, LocalizedClass)>,
}

impl LocalizationTable {
    /// Entries must cover exactly the points of `space`; they are stored in
    /// the space's point order.
    pub fn new(
        space: FixedPointSpace,
        mut entries: BTreeMap<String, LocalizedClass>,
    ) -> Result<Self> {
        let mut ordered = Vec::with_capacity(space.len());
        for id in space.ids() {
            let v = entries
                .remove(id)
                .ok_or_else(|| Error::UnknownPoint(id.to_string()))?;
            ordered.push((id.to_string(), v));
        }
        if let Some(extra) = entries.keys().next() {
            return Err(Error::UnknownPoint(extra.clone()));
        }
        Ok(LocalizationTable {
            space,
            entries: ordered,
        })
    }

    pub fn space(&self) -> &FixedPointSpace {
        &self.space
    }

    pub fn entries(&self) -> &[(String, LocalizedClass)] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&LocalizedClass> {
        self.entries.iter().find(|(k, _)| k == id).map(|(_, v)| v)
    }

    /// Replaces one entry, for building perturbed tables.
    pub fn with_entry(&self, id: &str, value: LocalizedClass) -> Result<Self> {
        let mut out = self.clone();
        let slot = out
            .entries
            .iter_mut()
            .find(|(k, _)| k == id)
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))?;
        slot.1 = value;
        Ok(out)
    }
}

/// Per-point contributions of a fixed-point sum together with its total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub contributions: Vec<(String, LocalizedClass)>,
    pub total: LocalizedClass,
    pub value: Rational,
}

/// Product of the tangent characters at `id`.
pub fn euler_class(space: &FixedPointSpace, id: &str) -> Result<FactoredClass> {
    FactoredClass::from_characters(space.point(id)?.tangent.iter().cloned())
}

fn contributions(
    space: &FixedPointSpace,
    values: &BTreeMap<String, MultiPoly>,
) -> Result<Vec<(String, LocalizedClass)>> {
    space
        .points()
        .par_iter()
        .map(|p| {
            let v = values
                .get(&p.id)
                .ok_or_else(|| Error::UnknownPoint(p.id.clone()))?;
            let e = euler_class(space, &p.id)?;
            Ok((
                p.id.clone(),
                LocalizedClass::from_poly(v.clone()).div_factored(&e),
            ))
        })
        .collect()
}

fn total_of(parts: &[(String, LocalizedClass)], space: &FixedPointSpace) -> Result<LocalizedClass> {
    if parts.is_empty() {
        return Ok(LocalizedClass::zero(space.vars()));
    }
    LocalizedClass::try_sum(parts.iter().map(|(_, v)| v))
}

/// `sum_p values[p] / e(p)`, normalized.
pub fn integrate(
    space: &FixedPointSpace,
    values: &BTreeMap<String, MultiPoly>,
) -> Result<LocalizedClass> {
    total_of(&contributions(space, values)?, space)
}

/// Evaluates a Chern polynomial at every point of `space`.
pub fn evaluate_everywhere(
    space: &FixedPointSpace,
    bundles: &[EquivariantBundle],
    poly: &ChernPolynomial,
) -> Result<BTreeMap<String, MultiPoly>> {
    space
        .points()
        .par_iter()
        .map(|p| Ok((p.id.clone(), poly.eval_at(bundles, space.vars(), &p.id)?)))
        .collect()
}

/// Bott residue formula: the degree of `poly(E) ∩ [X]` for a smooth complete
/// `X` with isolated fixed points.
pub fn bott_residue(
    space: &FixedPointSpace,
    bundles: &[EquivariantBundle],
    poly: &ChernPolynomial,
) -> Result<Rational> {
    Ok(bott_residue_detailed(space, bundles, poly)?.value)
}

pub fn bott_residue_detailed(
    space: &FixedPointSpace,
    bundles: &[EquivariantBundle],
    poly: &ChernPolynomial,
) -> Result<Residue> {
    if poly.degree() as usize != space.dim() {
        return Err(Error::DegreeMismatch(format!(
            "polynomial has weighted degree {}, space has dimension {}",
            poly.degree(),
            space.dim()
        )));
    }
    let values = evaluate_everywhere(space, bundles, poly)?;
    let parts = contributions(space, &values)?;
    let total = total_of(&parts, space)?;
    let value = total.constant_value()?;
    Ok(Residue {
        contributions: parts,
        total,
        value,
    })
}

/// Explicit localization: `beta_p = alpha|_p / e(p)` for every fixed point.
pub fn localize_class(
    action: &ProjectiveSpaceAction,
    alpha: &EquivariantClass,
) -> Result<LocalizationTable> {
    let space = action.fixed_points()?;
    let entries = (0..=action.dim())
        .into_par_iter()
        .map(|i| {
            let id = ProjectiveSpaceAction::point_id(i);
            let r = action.restrict(alpha, i)?;
            let e = euler_class(&space, &id)?;
            Ok((id, LocalizedClass::from_poly(r).div_factored(&e)))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    LocalizationTable::new(space, entries)
}

/// Outcome of reconstructing a class from its localization table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationCheck {
    pub passed: bool,
    /// `sum_p beta_p [p] - alpha`, multiplied through by the common
    /// denominator and reduced.
    pub residual: EquivariantClass,
}

/// Checks `sum_p beta_p * [p] = alpha` exactly after clearing denominators.
pub fn verify_localization(
    action: &ProjectiveSpaceAction,
    alpha: &EquivariantClass,
    table: &LocalizationTable,
) -> Result<LocalizationCheck> {
    let den = LocalizedClass::common_denominator(table.entries().iter().map(|(_, v)| v));
    let den_poly = den
        .iter()
        .fold(MultiPoly::one(action.torus_vars()), |acc, (chi, &m)| {
            (0..m).fold(acc, |a, _| a.mul_character(chi))
        });
    let mut lhs = EquivariantClass::new(action, MultiPoly::zero(action.class_vars()))?;
    for (id, beta) in table.entries() {
        let i = action.point_index(id)?;
        let term = action
            .point_class(i)?
            .mul_poly(&beta.numerator_over(&den))?;
        lhs = lhs.try_add(&term)?;
    }
    let rhs = alpha.mul_poly(&den_poly)?;
    let residual = lhs.try_sub(&rhs)?;
    Ok(LocalizationCheck {
        passed: residual.is_zero(),
        residual,
    })
}

/// Per-point result of the support check in [`singular_chern_number`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingRecord {
    pub point: String,
    pub restriction: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularResidue {
    pub residue: Residue,
    /// Restrictions of `gamma` at ambient fixed points outside `X`; all zero
    /// when the computation succeeds.
    pub vanishing: Vec<VanishingRecord>,
}

/// Chern number on a possibly singular invariant `X ⊂ P^n` presented by
/// `gamma = f_*[X]_T` and the ambient fixed points lying on `X`.
///
/// `bundles` need only be defined at the points of `on_x`.
pub fn singular_chern_number(
    action: &ProjectiveSpaceAction,
    gamma: &EquivariantClass,
    on_x: &[usize],
    bundles: &[EquivariantBundle],
    poly: &ChernPolynomial,
    dim_x: usize,
) -> Result<Rational> {
    Ok(
        singular_residue_detailed(action, gamma, on_x, bundles, poly, dim_x)?
            .residue
            .value,
    )
}

pub fn singular_residue_detailed(
    action: &ProjectiveSpaceAction,
    gamma: &EquivariantClass,
    on_x: &[usize],
    bundles: &[EquivariantBundle],
    poly: &ChernPolynomial,
    dim_x: usize,
) -> Result<SingularResidue> {
    let n = action.dim();
    if dim_x > n {
        return Err(Error::DegreeMismatch(format!(
            "dim X = {dim_x} exceeds ambient dimension {n}"
        )));
    }
    if !gamma.poly().is_homogeneous_of((n - dim_x) as u32) {
        return Err(Error::DegreeMismatch(format!(
            "class is not homogeneous of codimension {}",
            n - dim_x
        )));
    }
    if poly.degree() as usize != dim_x {
        return Err(Error::DegreeMismatch(format!(
            "polynomial has weighted degree {}, dim X = {dim_x}",
            poly.degree()
        )));
    }
    let space = action.fixed_points()?;
    for &i in on_x {
        action.weight(i)?;
    }

    let mut vanishing = Vec::new();
    for i in (0..=n).filter(|i| !on_x.contains(i)) {
        let r = action.restrict(gamma, i)?;
        let id = ProjectiveSpaceAction::point_id(i);
        if !r.is_zero() {
            return Err(Error::VanishingCheckFailed {
                point: id,
                value: r.to_string(),
            });
        }
        vanishing.push(VanishingRecord {
            point: id,
            restriction: r,
        });
    }

    let parts = on_x
        .par_iter()
        .map(|&i| {
            let id = ProjectiveSpaceAction::point_id(i);
            let p = poly.eval_at(bundles, space.vars(), &id)?;
            let g = action.restrict(gamma, i)?;
            let e = euler_class(&space, &id)?;
            Ok((id, LocalizedClass::from_poly(&p * &g).div_factored(&e)))
        })
        .collect::<Result<Vec<_>>>()?;
    let total = total_of(&parts, &space)?;
    let value = total.constant_value()?;
    Ok(SingularResidue {
        residue: Residue {
            contributions: parts,
            total,
            value,
        },
        vanishing,
    })
}

/// Peels off linear factors from the candidate list until a constant is
/// left.
fn factor_into_characters(p: &MultiPoly, candidates: &[Character]) -> Option<FactoredClass> {
    let mut rest = p.clone();
    let mut factors = Vec::new();
    loop {
        if let Some(c) = rest.as_constant() {
            return FactoredClass::new(c, factors).ok();
        }
        let next = candidates
            .iter()
            .find_map(|chi| rest.divide_by_character(chi).ok().map(|q| (chi, q)));
        match next {
            Some((chi, q)) => {
                factors.push(chi.clone());
                rest = q;
            }
            None => return None,
        }
    }
}

fn pivot_candidates(action: &ProjectiveSpaceAction) -> Vec<Character> {
    let r = action.rank();
    let w = action.weights();
    let mut out: Vec<Character> = (0..r).map(|k| Character::unit(r, k)).collect();
    out.extend(w.iter().cloned());
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            out.push(&w[i] - &w[j]);
        }
    }
    let mut prim: Vec<Character> = out
        .into_iter()
        .filter_map(|c| c.primitive_part().map(|(_, p)| p))
        .collect();
    prim.sort();
    prim.dedup();
    prim
}

/// Solves `sum_k c_k * basis[k] = target` by back-substitution on the
/// leading h-coefficients, which must be distinct in h-degree and factor into
/// characters.
pub fn expand_in_basis(
    basis: &[EquivariantClass],
    target: &EquivariantClass,
) -> Result<Vec<LocalizedClass>> {
    let action = target.action();
    let tv = action.torus_vars();
    let candidates = pivot_candidates(action);

    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by_key(|&k| std::cmp::Reverse(basis[k].h_degree()));
    for w in order.windows(2) {
        if basis[w[0]].h_degree() == basis[w[1]].h_degree() {
            return Err(Error::Invalid(
                "basis elements must have distinct h-degrees".into(),
            ));
        }
    }
    let n = action.dim() as u32;
    let mut residual: Vec<LocalizedClass> = (0..=n)
        .map(|d| LocalizedClass::from_poly(target.h_coefficient(d)))
        .collect();
    let mut coeffs = vec![LocalizedClass::zero(tv); basis.len()];
    for &k in &order {
        let b = &basis[k];
        if b.action() != action {
            return Err(Error::Invalid("basis class over a different action".into()));
        }
        if b.is_zero() {
            return Err(Error::Invalid("zero basis element".into()));
        }
        let d = b.h_degree();
        let pivot_poly = b.h_coefficient(d);
        let pivot = factor_into_characters(&pivot_poly, &candidates)
            .ok_or_else(|| Error::NonFactorablePivot(pivot_poly.to_string()))?;
        let c = residual[d as usize].div_factored(&pivot);
        for (e, slot) in residual.iter_mut().enumerate() {
            let bc = b.h_coefficient(e as u32);
            if bc.is_zero() {
                continue;
            }
            *slot = slot.try_sub(&c.mul_poly(&bc)?)?;
        }
        coeffs[k] = c;
    }
    if let Some(bad) = residual.iter().find(|r| !r.is_zero()) {
        return Err(Error::Inconsistent(bad.to_string()));
    }
    Ok(coeffs)
}
