use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;

/// An element of the character lattice of a rank-r torus: the linear form
/// `sum_k coeffs[k] * t_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(Vec<i64>);

impl Character {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Character(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Character(vec![0; rank])
    }

    /// The coordinate character `t_{k+1}`.
    pub fn unit(rank: usize, k: usize) -> Self {
        let mut c = vec![0; rank];
        c[k] = 1;
        Character(c)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Splits `self = scale * primitive` where `primitive` has content one and
    /// a positive leading entry. Returns `None` for the zero character.
    pub fn primitive_part(&self) -> Option<(i64, Character)> {
        let lead = *self.0.iter().find(|&&c| c != 0)?;
        let g = self.0.iter().fold(0i64, |g, &c| g.gcd(&c));
        let scale = if lead < 0 { -g } else { g };
        Some((scale, Character(self.0.iter().map(|c| c / scale).collect())))
    }

    pub fn scaled(&self, k: i64) -> Character {
        Character(self.0.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, point: &[i64]) -> i128 {
        self.0
            .iter()
            .zip(point)
            .map(|(&c, &x)| c as i128 * x as i128)
            .sum()
    }
}

impl From<Vec<i64>> for Character {
    fn from(v: Vec<i64>) -> Self {
        Character(v)
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        assert_eq!(self.rank(), rhs.rank(), "character rank mismatch");
        Character(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        assert_eq!(self.rank(), rhs.rank(), "character rank mismatch");
        Character(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scaled(-1)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "t{}", k + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_part_fixes_sign_and_content() {
        let (s, p) = Character::new(vec![0, -4, 6]).primitive_part().unwrap();
        assert_eq!(s, -2);
        assert_eq!(p, Character::new(vec![0, 2, -3]));
        assert!(Character::zero(3).primitive_part().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Character::new(vec![1, -1]).to_string(), "t1 - t2");
        assert_eq!(Character::new(vec![0, -3]).to_string(), "-3*t2");
        assert_eq!(Character::zero(2).to_string(), "0");
    }
}
