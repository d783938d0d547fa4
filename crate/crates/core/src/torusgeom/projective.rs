use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::symalg::{elem_sym_all, Character, MultiPoly, Rational, Vars};

use super::fixed::{FixedPoint, FixedPointSpace};

/// A torus of rank `r` acting linearly on `P^n` with weights `a_0..a_n`.
///
/// The equivariant Chow ring is presented as `Q[t_1..t_r][h] / prod(h + a_i)`;
/// restriction to the fixed point `p_i` sends `h` to `-a_i`.
#[derive(Clone, Debug)]
pub struct ProjectiveSpaceAction(Arc<ActionData>);

#[derive(Debug)]
struct ActionData {
    rank: usize,
    weights: Vec<Character>,
    class_vars: Arc<Vars>,
    torus_vars: Arc<Vars>,
    // e_k(a_0..a_n) in the class variables, k = 0..=n+1
    relation_coeffs: Vec<MultiPoly>,
}

impl PartialEq for ProjectiveSpaceAction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.rank == other.0.rank && self.0.weights == other.0.weights)
    }
}

impl Eq for ProjectiveSpaceAction {}

impl ProjectiveSpaceAction {
    pub fn new(rank: usize, weights: Vec<Character>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Invalid(
                "projective space needs at least one weight".into(),
            ));
        }
        if let Some(w) = weights.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                found: w.rank(),
            });
        }
        let class_vars = Vars::with_extras(rank, &["h"]);
        let relation_coeffs = elem_sym_all(&class_vars, &weights)?;
        Ok(ProjectiveSpaceAction(Arc::new(ActionData {
            rank,
            weights,
            class_vars,
            torus_vars: Vars::torus(rank),
            relation_coeffs,
        })))
    }

    /// Convenience constructor from raw integer vectors.
    pub fn from_vecs(rank: usize, weights: &[&[i64]]) -> Result<Self> {
        Self::new(
            rank,
            weights.iter().map(|w| Character::new(w.to_vec())).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// Dimension `n` of `P^n`.
    pub fn dim(&self) -> usize {
        self.0.weights.len() - 1
    }

    pub fn weights(&self) -> &[Character] {
        &self.0.weights
    }

    pub fn weight(&self, i: usize) -> Result<&Character> {
        self.0.weights.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            max: self.dim(),
        })
    }

    /// Variables `t1..tr, h` of the presented ring.
    pub fn class_vars(&self) -> &Arc<Vars> {
        &self.0.class_vars
    }

    pub fn torus_vars(&self) -> &Arc<Vars> {
        &self.0.torus_vars
    }

    pub fn h_index(&self) -> usize {
        self.0.rank
    }

    pub fn point_id(i: usize) -> String {
        format!("p{i}")
    }

    /// Inverse of [`point_id`](Self::point_id).
    pub fn point_index(&self, id: &str) -> Result<usize> {
        id.strip_prefix('p')
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&i| i <= self.dim() && Self::point_id(i) == id)
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))
    }

    pub fn check_distinct(&self) -> Result<()> {
        let w = &self.0.weights;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] == w[j] {
                    return Err(Error::RepeatedWeights(format!("a_{i} = a_{j} = {}", w[i])));
                }
            }
        }
        Ok(())
    }

    /// `prod_i (h + a_i)` in the class variables.
    pub fn relation(&self) -> MultiPoly {
        let h = self.h();
        self.0
            .weights
            .iter()
            .fold(MultiPoly::one(self.class_vars()), |acc, a| {
                &acc * &(&h + &self.char_poly(a))
            })
    }

    fn h(&self) -> MultiPoly {
        MultiPoly::var(self.class_vars(), self.h_index())
    }

    fn char_poly(&self, chi: &Character) -> MultiPoly {
        MultiPoly::from_character(self.class_vars(), chi).expect("rank checked at construction")
    }

    /// Normal form modulo the monic relation: h-degree at most `n`.
    fn reduce_poly(&self, p: &MultiPoly) -> MultiPoly {
        let n = self.dim() as u32;
        let hi = self.h_index();
        if p.degree_in(hi) <= n {
            return p.clone();
        }
        let parts = p.coefficients_in(hi);
        let top = *parts.keys().next_back().unwrap();
        let zero = MultiPoly::zero(self.class_vars());
        let mut coeffs: Vec<MultiPoly> = (0..=top)
            .map(|d| parts.get(&d).cloned().unwrap_or_else(|| zero.clone()))
            .collect();
        // h^{n+1} = -sum_{k>=1} e_k h^{n+1-k}
        for d in (n + 1..=top).rev() {
            let c = std::mem::replace(&mut coeffs[d as usize], zero.clone());
            if c.is_zero() {
                continue;
            }
            for k in 1..=n + 1 {
                let e = &self.0.relation_coeffs[k as usize];
                let idx = (d - k) as usize;
                coeffs[idx] = &coeffs[idx] - &(&c * e);
            }
        }
        let h = self.h();
        let mut out = zero;
        let mut hp = MultiPoly::one(self.class_vars());
        for c in coeffs.iter().take(n as usize + 1) {
            out = &out + &(c * &hp);
            hp = &hp * &h;
        }
        out
    }

    /// `projective_fixed_points`: one point per coordinate line, tangent
    /// characters `a_j - a_i` for `j != i`.
    pub fn fixed_points(&self) -> Result<FixedPointSpace> {
        self.check_distinct()?;
        let w = &self.0.weights;
        let points = (0..w.len())
            .map(|i| FixedPoint {
                id: Self::point_id(i),
                tangent: (0..w.len())
                    .filter(|&j| j != i)
                    .map(|j| &w[j] - &w[i])
                    .collect(),
            })
            .collect();
        FixedPointSpace::new(self.rank(), points)
    }

    /// Substitutes `h := -a_i` and returns the result in the torus variables.
    pub fn restrict(&self, c: &EquivariantClass, i: usize) -> Result<MultiPoly> {
        if c.action != *self {
            return Err(Error::Invalid("class belongs to a different action".into()));
        }
        let a = self.weight(i)?;
        let img = -&self.char_poly(a);
        let sub = c.poly.substitute(self.h_index(), &img);
        Ok(MultiPoly::from_terms(
            self.torus_vars(),
            sub.terms()
                .map(|(m, k)| (m[..self.rank()].to_vec(), k.clone())),
        ))
    }

    /// `prod_{j != i} (h + a_j)`.
    pub fn point_class(&self, i: usize) -> Result<EquivariantClass> {
        self.weight(i)?;
        let h = self.h();
        let p = self
            .0
            .weights
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(MultiPoly::one(self.class_vars()), |acc, (_, a)| {
                &acc * &(&h + &self.char_poly(a))
            });
        EquivariantClass::new(self, p)
    }

    /// `prod (d_i h + chi_i)` for a complete intersection of invariant
    /// hypersurfaces of degree `d_i` and weight `chi_i`.
    pub fn hypersurface_class(&self, degrees: &[(u32, Character)]) -> Result<EquivariantClass> {
        let h = self.h();
        let mut p = MultiPoly::one(self.class_vars());
        for (d, chi) in degrees {
            if chi.rank() != self.rank() {
                return Err(Error::RankMismatch {
                    expected: self.rank(),
                    found: chi.rank(),
                });
            }
            let f = &h.scale(&Rational::from_integer((*d).into())) + &self.char_poly(chi);
            p = &p * &f;
        }
        EquivariantClass::new(self, p)
    }

    /// Fixed-point data of a smooth invariant hypersurface of degree `d` and
    /// weight `chi_f` through the listed coordinate points: the ambient
    /// tangent multiset minus the normal weight `-d a_p + chi_f`.
    pub fn hypersurface_fixed_locus(
        &self,
        d: u32,
        chi_f: &Character,
        on_x: &[usize],
    ) -> Result<FixedPointSpace> {
        let ambient = self.fixed_points()?;
        let mut points = Vec::with_capacity(on_x.len());
        for &i in on_x {
            let a = self.weight(i)?;
            let nu = &a.scaled(-(d as i64)) + chi_f;
            let id = Self::point_id(i);
            if nu.is_zero() {
                return Err(Error::ZeroNormalWeight(id));
            }
            let mut tangent = ambient.points()[i].tangent.clone();
            match tangent.iter().position(|c| *c == nu) {
                Some(pos) => {
                    tangent.remove(pos);
                }
                None => {
                    return Err(Error::NormalWeightAbsent {
                        point: id,
                        weight: nu.to_string(),
                    })
                }
            }
            points.push(FixedPoint { id, tangent });
        }
        FixedPointSpace::new(self.rank(), points)
    }
}

/// An element of the presented equivariant Chow ring of `P^n`, kept reduced
/// (h-degree at most `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantClass {
    poly: MultiPoly,
    action: ProjectiveSpaceAction,
}

impl EquivariantClass {
    /// Reduces `poly` (over the action's class variables) into normal form.
    pub fn new(action: &ProjectiveSpaceAction, poly: MultiPoly) -> Result<Self> {
        if poly.vars() != action.class_vars() {
            return Err(Error::VariableMismatch {
                left: poly.vars().to_string(),
                right: action.class_vars().to_string(),
            });
        }
        Ok(EquivariantClass {
            poly: action.reduce_poly(&poly),
            action: action.clone(),
        })
    }

    pub fn one(action: &ProjectiveSpaceAction) -> Self {
        EquivariantClass {
            poly: MultiPoly::one(action.class_vars()),
            action: action.clone(),
        }
    }

    /// The hyperplane class `h`.
    pub fn hyperplane(action: &ProjectiveSpaceAction) -> Self {
        Self::new(action, action.h()).expect("class variables")
    }

    /// A torus class `chi`, pulled back from the point.
    pub fn from_character(action: &ProjectiveSpaceAction, chi: &Character) -> Result<Self> {
        Self::new(action, MultiPoly::from_character(action.class_vars(), chi)?)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn action(&self) -> &ProjectiveSpaceAction {
        &self.action
    }

    pub fn h_degree(&self) -> u32 {
        self.poly.degree_in(self.action.h_index())
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Re-applies reduction; a no-op on constructed classes.
    pub fn reduce(&self) -> Self {
        EquivariantClass {
            poly: self.action.reduce_poly(&self.poly),
            action: self.action.clone(),
        }
    }

    fn same_action(&self, other: &Self) -> Result<()> {
        if self.action == other.action {
            Ok(())
        } else {
            Err(Error::Invalid("classes belong to different actions".into()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_action(other)?;
        Self::new(&self.action, &self.poly + &other.poly)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_action(other)?;
        Self::new(&self.action, &self.poly - &other.poly)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_action(other)?;
        Self::new(&self.action, &self.poly * &other.poly)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        EquivariantClass {
            poly: self.poly.scale(c),
            action: self.action.clone(),
        }
    }

    /// Multiplies by a polynomial in the torus variables (or class variables).
    pub fn mul_poly(&self, p: &MultiPoly) -> Result<Self> {
        let p = if p.vars() == self.action.torus_vars() {
            self.lift_torus(p)
        } else {
            p.clone()
        };
        Self::new(&self.action, p.try_mul(&self.poly)?)
    }

    fn lift_torus(&self, p: &MultiPoly) -> MultiPoly {
        MultiPoly::from_terms(
            self.action.class_vars(),
            p.terms().map(|(m, c)| {
                let mut m2 = m.clone();
                m2.push(0);
                (m2, c.clone())
            }),
        )
    }

    /// Coefficient of `h^k` as a polynomial in the torus variables.
    pub fn h_coefficient(&self, k: u32) -> MultiPoly {
        let r = self.action.rank();
        MultiPoly::from_terms(
            self.action.torus_vars(),
            self.poly
                .terms()
                .filter(|(m, _)| m[r] == k)
                .map(|(m, c)| (m[..r].to_vec(), c.clone())),
        )
    }
}

impl fmt::Display for EquivariantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}
