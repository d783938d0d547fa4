//! Torus actions on projective space: fixed points, the presented
//! equivariant Chow ring, restriction to fixed points, and classes of
//! invariant hypersurfaces.
//!
//! Sign conventions: relation `prod(h + a_i)`, restriction `h -> -a_i`,
//! point class `prod_{j != i}(h + a_j)`, tangent weights `a_j - a_i`,
//! hypersurface class `d h + chi`.

mod fixed;
mod projective;

pub use fixed::{FixedPoint, FixedPointSpace};
pub use projective::{EquivariantClass, ProjectiveSpaceAction};

use crate::error::Result;
use crate::symalg::{Character, MultiPoly};

pub fn projective_fixed_points(action: &ProjectiveSpaceAction) -> Result<FixedPointSpace> {
    action.fixed_points()
}

pub fn reduce_class(c: &EquivariantClass) -> EquivariantClass {
    c.reduce()
}

pub fn restrict_class(c: &EquivariantClass, point: usize) -> Result<MultiPoly> {
    c.action().restrict(c, point)
}

pub fn point_class(action: &ProjectiveSpaceAction, point: usize) -> Result<EquivariantClass> {
    action.point_class(point)
}

pub fn hypersurface_class(
    action: &ProjectiveSpaceAction,
    degrees: &[(u32, Character)],
) -> Result<EquivariantClass> {
    action.hypersurface_class(degrees)
}

pub fn hypersurface_fixed_locus(
    action: &ProjectiveSpaceAction,
    d: u32,
    chi_f: &Character,
    on_x: &[usize],
) -> Result<FixedPointSpace> {
    action.hypersurface_fixed_locus(d, chi_f, on_x)
}
