use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::symalg::{Character, Vars};

/// An isolated fixed point together with the characters of its tangent space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub id: String,
    pub tangent: Vec<Character>,
}

/// A smooth T-variety with isolated fixed points, recorded extensionally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointSpace {
    rank: usize,
    dim: usize,
    points: Vec<FixedPoint>,
    vars: Arc<Vars>,
}

impl FixedPointSpace {
    /// Checks that all tangent multisets have the same size, every character
    /// is nonzero of the given rank, and ids are unique.
    pub fn new(rank: usize, points: Vec<FixedPoint>) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.tangent.len());
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p.id.as_str()) {
                return Err(Error::Invalid(format!("duplicate point id `{}`", p.id)));
            }
            if p.tangent.len() != dim {
                return Err(Error::DegreeMismatch(format!(
                    "point `{}` has {} tangent weights, expected {dim}",
                    p.id,
                    p.tangent.len()
                )));
            }
            for chi in &p.tangent {
                if chi.rank() != rank {
                    return Err(Error::RankMismatch {
                        expected: rank,
                        found: chi.rank(),
                    });
                }
                if chi.is_zero() {
                    return Err(Error::ZeroCharacter);
                }
            }
        }
        Ok(FixedPointSpace {
            rank,
            dim,
            points,
            vars: Vars::torus(rank),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Common size of the tangent multisets.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The torus variables `t1..tr` in which all restrictions live.
    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p.id == id)
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))
    }

    pub fn point(&self, id: &str) -> Result<&FixedPoint> {
        Ok(&self.points[self.index_of(id)?])
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.points.iter().map(|p| p.id.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(id: &str, t: &[&[i64]]) -> FixedPoint {
        FixedPoint {
            id: id.into(),
            tangent: t.iter().map(|c| Character::new(c.to_vec())).collect(),
        }
    }

    #[test]
    fn validation() {
        assert!(FixedPointSpace::new(1, vec![pt("a", &[&[1]]), pt("b", &[&[-1]])]).is_ok());
        assert_eq!(
            FixedPointSpace::new(1, vec![pt("a", &[&[0]])]),
            Err(Error::ZeroCharacter)
        );
        assert!(matches!(
            FixedPointSpace::new(1, vec![pt("a", &[&[1]]), pt("b", &[])]),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(matches!(
            FixedPointSpace::new(1, vec![pt("a", &[&[1]]), pt("a", &[&[1]])]),
            Err(Error::Invalid(_))
        ));
    }
}
