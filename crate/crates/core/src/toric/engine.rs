use num_traits::{One, Zero};

use super::group::GroupAction;
use super::rays::RaySet;
use super::ToricError;
use crate::geometry::{fixed_subspace, GeometryError, HPolytope, HalfSpace, Vector};
use crate::{LatticeVector, Rational, RationalPolytope, RationalVector};

/// Result of the toric threshold computation.
///
/// `witness_vertex` and `witness_ray` attain `max_pairing`; among all
/// maximizing pairs the lexicographically smallest is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricLctReport {
    pub lct: Rational,
    pub max_pairing: Rational,
    pub witness_vertex: RationalVector,
    pub witness_ray: LatticeVector,
}

fn to_rational(v: &LatticeVector) -> RationalVector {
    v.map(|x| Rational::from_integer(x.clone()))
}

/// `Δ = {w : ⟨w, v⟩ ≥ -1 for every ray v}`.
pub fn dual_polytope(rays: &RaySet) -> RationalPolytope {
    let minus_one = -Rational::one();
    let halfspaces = rays
        .rays()
        .iter()
        .map(|v| HalfSpace::new(to_rational(v), minus_one.clone()).expect("rays are nonzero"))
        .collect();
    HPolytope::new(halfspaces).expect("rays share one dimension")
}

/// Threshold of the toric variety of `rays`, equivariant for `group` if
/// given.
///
/// With a group the dual polytope is restricted to the fixed subspace of the
/// contragredient action: halfspaces are rewritten in coordinates of a fixed
/// basis, vertices are found there and mapped back.
pub fn toric_lct(rays: &RaySet, group: Option<&GroupAction>) -> Result<ToricLctReport, ToricError> {
    let delta = dual_polytope(rays);
    let vertices: Vec<RationalVector> = match group.filter(|g| !g.is_trivial()) {
        None => delta
            .enumerate_vertices()
            .map_err(|e| match e {
                GeometryError::Unbounded => ToricError::FanNotComplete,
                other => other.into(),
            })?
            .into_iter()
            .collect(),
        Some(g) => {
            if !delta.is_bounded() {
                return Err(ToricError::FanNotComplete);
            }
            g.check_preserves(rays)?;
            let transposes: Vec<_> = g.elements().iter().map(|e| e.transpose()).collect();
            let basis = fixed_subspace(&transposes)?;
            fixed_vertices(rays, &basis)?
        }
    };

    let ray_vectors: Vec<(RationalVector, &LatticeVector)> =
        rays.rays().iter().map(|v| (to_rational(v), v)).collect();
    let mut best: Option<(Rational, &RationalVector, &LatticeVector)> = None;
    for w in &vertices {
        for (vq, v) in &ray_vectors {
            let pairing = w.dot(vq);
            let better = match &best {
                None => true,
                Some((m, bw, bv)) => pairing > *m || (pairing == *m && (w, *v) < (*bw, *bv)),
            };
            if better {
                best = Some((pairing, w, v));
            }
        }
    }
    let (max_pairing, w, v) = best.expect("at least one vertex and one ray");
    Ok(ToricLctReport {
        lct: Rational::one() / (Rational::one() + max_pairing.clone()),
        max_pairing,
        witness_vertex: w.clone(),
        witness_ray: v.clone(),
    })
}

/// Vertices of `Δ ∩ span(basis)`, returned in ambient coordinates.
fn fixed_vertices(rays: &RaySet, basis: &[RationalVector]) -> Result<Vec<RationalVector>, ToricError> {
    let n = rays.dim();
    if basis.is_empty() {
        return Ok(vec![Vector::zeros(n)]);
    }
    let minus_one = -Rational::one();
    let restricted: Vec<HalfSpace<Rational>> = rays
        .rays()
        .iter()
        .map(|v| {
            let v = to_rational(v);
            Vector::new(basis.iter().map(|b| b.dot(&v)).collect::<Vec<_>>())
        })
        // Rays orthogonal to the fixed space impose 0 ≥ -1.
        .filter(|normal: &RationalVector| !normal.is_zero())
        .map(|normal| HalfSpace::new(normal, minus_one.clone()).expect("nonzero normal"))
        .collect();
    let local = HPolytope::new(restricted).map_err(|e| match e {
        GeometryError::NoHalfspaces => ToricError::FanNotComplete,
        other => other.into(),
    })?;
    let vertices = local.enumerate_vertices().map_err(|e| match e {
        GeometryError::Unbounded => ToricError::FanNotComplete,
        other => other.into(),
    })?;
    Ok(vertices
        .into_iter()
        .map(|y| {
            y.iter()
                .zip(basis)
                .fold(Vector::zeros(n), |acc: RationalVector, (c, b)| acc.add(&b.scale(c)))
        })
        .collect())
}

impl ToricLctReport {
    /// True iff the reported maximum is zero, i.e. the fixed part of the dual
    /// polytope is the origin.
    pub fn is_symmetric(&self) -> bool {
        self.max_pairing.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::projective_space_fan;
    use crate::{ratio, IntMatrix};

    #[test]
    fn projective_plane() {
        let report = toric_lct(&projective_space_fan(2).unwrap(), None).unwrap();
        assert_eq!(report.lct, ratio(1, 3));
        assert_eq!(report.max_pairing, ratio(2, 1));
        assert_eq!(report.witness_vertex.dot(&to_rational(&report.witness_ray)), report.max_pairing);
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // Maximum 2 is attained at (-1,2)·(0,1), (2,-1)·(1,0), (-1,-1)·(-1,-1);
        // the smallest vertex is (-1,-1).
        let report = toric_lct(&projective_space_fan(2).unwrap(), None).unwrap();
        assert_eq!(report.witness_vertex, Vector::new(vec![ratio(-1, 1), ratio(-1, 1)]));
        assert_eq!(report.witness_ray, LatticeVector::new(vec![(-1).into(), (-1).into()]));
    }

    #[test]
    fn symmetric_line() {
        let p1 = projective_space_fan(1).unwrap();
        let g = GroupAction::generated_by(&[IntMatrix::from_i64_rows(&[&[-1]]).unwrap()]).unwrap();
        let report = toric_lct(&p1, Some(&g)).unwrap();
        assert_eq!(report.lct, ratio(1, 1));
        assert!(report.is_symmetric());
        assert_eq!(toric_lct(&p1, None).unwrap().lct, ratio(1, 2));
    }

    #[test]
    fn weighted_plane() {
        let rays = RaySet::from_i64(&[&[1, 0], &[0, 1], &[-1, -2]]).unwrap();
        let report = toric_lct(&rays, None).unwrap();
        assert_eq!(report.lct, ratio(1, 4));
        assert_eq!(report.max_pairing, ratio(3, 1));
        // (3,-1)·(1,0) and (-1,-1)·(-1,-2) both reach 3.
        assert_eq!(report.witness_vertex, Vector::new(vec![ratio(-1, 1), ratio(-1, 1)]));
        assert_eq!(report.witness_ray, LatticeVector::new(vec![(-1).into(), (-2).into()]));
    }

    #[test]
    fn incomplete_fan() {
        let rays = RaySet::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(toric_lct(&rays, None), Err(ToricError::FanNotComplete));
    }

    #[test]
    fn partial_symmetry_keeps_a_line() {
        // Swapping the two coordinates of P² fixes the diagonal w1 = w2, on
        // which Δ is the segment from (-1,-1) to (1/2,1/2).
        let p2 = projective_space_fan(2).unwrap();
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let g = GroupAction::generated_by(&[swap]).unwrap();
        let report = toric_lct(&p2, Some(&g)).unwrap();
        assert_eq!(report.max_pairing, ratio(2, 1));
        assert_eq!(report.lct, ratio(1, 3));
    }

    #[test]
    fn invariant_space_uses_the_transpose() {
        // P(1,1,2) with the involution swapping (1,0) and (-1,-2). The fixed
        // line in M is spanned by (1,-1), not by the fixed ray (0,1).
        let fan = RaySet::from_i64(&[&[1, 0], &[-1, -2], &[0, 1]]).unwrap();
        let g = IntMatrix::from_i64_rows(&[&[-1, 0], &[-2, 1]]).unwrap();
        let g = GroupAction::generated_by(&[g]).unwrap();
        let report = toric_lct(&fan, Some(&g)).unwrap();
        assert_eq!(report.max_pairing, ratio(1, 1));
        assert_eq!(report.lct, ratio(1, 2));
        assert_eq!(toric_lct(&fan, None).unwrap().lct, ratio(1, 4));
    }

    #[test]
    fn group_must_preserve_rays() {
        let p2 = projective_space_fan(2).unwrap();
        let neg = IntMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]]).unwrap();
        let g = GroupAction::generated_by(&[neg]).unwrap();
        assert_eq!(toric_lct(&p2, Some(&g)).unwrap_err().name(), "GroupDoesNotPreserveFan");
    }
}
