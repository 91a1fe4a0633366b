use std::collections::HashSet;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::ToricError;
use crate::{Integer, LatticeVector};

/// Primitive ray generators of a complete fan in `Zⁿ`.
///
/// Non-primitive inputs are divided by the gcd of their coordinates and
/// [`RaySet::was_normalized`] is set. The dual polytope is always defined
/// through the primitive generators, so only the direction of an input ray
/// matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RaySet {
    rays: Vec<LatticeVector>,
    dim: usize,
    normalized: bool,
}

impl RaySet {
    pub fn new(rays: Vec<LatticeVector>) -> Result<Self, ToricError> {
        let dim = rays.first().ok_or(ToricError::EmptyRaySet)?.dim();
        if dim == 0 {
            return Err(ToricError::RayDimensionMismatch { index: 0, expected: 1, found: 0 });
        }
        let mut normalized = false;
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(rays.len());
        for (index, ray) in rays.into_iter().enumerate() {
            if ray.dim() != dim {
                return Err(ToricError::RayDimensionMismatch { index, expected: dim, found: ray.dim() });
            }
            if ray.is_zero() {
                return Err(ToricError::ZeroRay(index));
            }
            let (primitive, changed) = primitive_part(ray);
            normalized |= changed;
            if !seen.insert(primitive.clone()) {
                return Err(ToricError::DuplicateRay(primitive.to_string()));
            }
            out.push(primitive);
        }
        Ok(RaySet { rays: out, dim, normalized })
    }

    pub fn from_i64(rays: &[&[i64]]) -> Result<Self, ToricError> {
        Self::new(
            rays.iter()
                .map(|r| LatticeVector::new(r.iter().map(|&x| Integer::from(x)).collect()))
                .collect(),
        )
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// True if some input ray was not primitive and got divided by its gcd.
    pub fn was_normalized(&self) -> bool {
        self.normalized
    }

    pub fn contains(&self, ray: &LatticeVector) -> bool {
        self.rays.contains(ray)
    }

    pub fn position(&self, ray: &LatticeVector) -> Option<usize> {
        self.rays.iter().position(|r| r == ray)
    }
}

/// Divides out the gcd of the coordinates; the flag reports whether anything
/// changed.
pub(crate) fn primitive_part(v: LatticeVector) -> (LatticeVector, bool) {
    let g = v.iter().fold(Integer::zero(), |g, x| g.gcd(x));
    if g.is_one() || g.is_zero() {
        (v, false)
    } else {
        (v.map(|x| x / &g), true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_non_primitive() {
        let rays = RaySet::from_i64(&[&[2, 0], &[0, 3], &[-1, -1]]).unwrap();
        assert!(rays.was_normalized());
        assert_eq!(rays.rays(), RaySet::from_i64(&[&[1, 0], &[0, 1], &[-1, -1]]).unwrap().rays());
        assert!(!RaySet::from_i64(&[&[1, 0], &[0, 1], &[-1, -1]]).unwrap().was_normalized());
    }

    #[test]
    fn rejects_invalid_rays() {
        assert_eq!(RaySet::from_i64(&[]), Err(ToricError::EmptyRaySet));
        assert_eq!(RaySet::from_i64(&[&[1, 0], &[0, 0]]), Err(ToricError::ZeroRay(1)));
        assert!(matches!(
            RaySet::from_i64(&[&[1, 0], &[0, 1, 0]]),
            Err(ToricError::RayDimensionMismatch { index: 1, .. })
        ));
        assert!(matches!(
            RaySet::from_i64(&[&[1, 0], &[3, 0]]),
            Err(ToricError::DuplicateRay(_))
        ));
    }
}
