//! Constructors for the fans that come up most often.

use num_traits::Zero;

use super::rays::{primitive_part, RaySet};
use super::ToricError;
use crate::closed_forms::is_well_formed;
use crate::geometry::linalg::rank;
use crate::geometry::smith_normal_form;
use crate::{IntMatrix, Integer, LatticeVector, Rational};

/// `e₁, …, eₙ, -(e₁ + … + eₙ)`.
pub fn projective_space_fan(n: usize) -> Result<RaySet, ToricError> {
    if n == 0 {
        return Err(ToricError::InvalidArgument("projective space needs n >= 1".into()));
    }
    let mut rays: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    rays.push(LatticeVector::new(vec![Integer::from(-1); n]));
    RaySet::new(rays)
}

/// Fan of the product: rays of `a` padded on the right, then rays of `b`
/// padded on the left.
pub fn product_fan(a: &RaySet, b: &RaySet) -> RaySet {
    let (da, db) = (a.dim(), b.dim());
    let left = a.rays().iter().map(|v| {
        let mut c = v.coords().to_vec();
        c.resize(da + db, Integer::zero());
        LatticeVector::new(c)
    });
    let right = b.rays().iter().map(|v| {
        let mut c = vec![Integer::zero(); da];
        c.extend_from_slice(v.coords());
        LatticeVector::new(c)
    });
    RaySet::new(left.chain(right).collect()).expect("product of valid ray sets is valid")
}

/// Fan of `P_{Pⁿ}(O ⊕ O(-a₁) ⊕ … ⊕ O(-a_k))` in `Z^{k+n}`.
///
/// Fiber rays `e₁ … e_k` and `-(e₁ + … + e_k)`, base rays
/// `e_{k+1} … e_{k+n}`, and the twisted ray `(-a₁, …, -a_k, -1, …, -1)`.
pub fn projectivized_bundle_fan(n: usize, twists: &[u64]) -> Result<RaySet, ToricError> {
    let k = twists.len();
    if n == 0 || k == 0 {
        return Err(ToricError::InvalidArgument(
            "projectivized bundle needs base dimension >= 1 and at least one twist".into(),
        ));
    }
    let dim = k + n;
    let mut rays: Vec<LatticeVector> = (0..k).map(|i| LatticeVector::unit(dim, i)).collect();
    let mut fiber_sum = vec![Integer::zero(); dim];
    for c in fiber_sum.iter_mut().take(k) {
        *c = Integer::from(-1);
    }
    rays.push(LatticeVector::new(fiber_sum));
    rays.extend((k..dim).map(|i| LatticeVector::unit(dim, i)));
    let twisted = twists
        .iter()
        .map(|&a| -Integer::from(a))
        .chain(std::iter::repeat(Integer::from(-1)).take(n))
        .collect();
    rays.push(LatticeVector::new(twisted));
    RaySet::new(rays)
}

/// `1 / (1 + max{k, n + Σ aᵢ})`.
pub fn bundle_lct_closed_form(n: usize, twists: &[u64]) -> Result<Rational, ToricError> {
    if n == 0 || twists.is_empty() {
        return Err(ToricError::InvalidArgument(
            "projectivized bundle needs base dimension >= 1 and at least one twist".into(),
        ));
    }
    let k = twists.len() as u64;
    let m = k.max(n as u64 + twists.iter().sum::<u64>());
    Ok(Rational::new(1.into(), (1 + m).into()))
}

/// Adds the primitive part of the sum of `subset` as a new ray.
///
/// This is the blow-up of the torus-invariant subvariety of the cone spanned
/// by `subset`. Only the rays are tracked, so the caller is responsible for
/// `subset` actually spanning a cone of the fan.
pub fn star_subdivide(rays: &RaySet, subset: &[LatticeVector]) -> Result<RaySet, ToricError> {
    if subset.is_empty() {
        return Err(ToricError::DegenerateSubdivision("empty subset".into()));
    }
    for v in subset {
        if !rays.contains(v) {
            return Err(ToricError::DegenerateSubdivision(format!("({v}) is not a ray of the fan")));
        }
    }
    let rows: Vec<Vec<Rational>> = subset
        .iter()
        .map(|v| v.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    if rank(&rows, rays.dim()) < subset.len() {
        return Err(ToricError::DegenerateSubdivision("subset is linearly dependent".into()));
    }
    let sum = subset
        .iter()
        .skip(1)
        .fold(subset[0].clone(), |acc, v| acc.add(v));
    let (new_ray, _) = primitive_part(sum);
    if rays.contains(&new_ray) {
        return Err(ToricError::DegenerateSubdivision(format!("({new_ray}) is already a ray")));
    }
    let mut all = rays.rays().to_vec();
    all.push(new_ray);
    RaySet::new(all)
}

/// Fan of the weighted projective space `P(a₀, …, aₙ)` in `Zⁿ`.
///
/// The lattice is `Z^{n+1} / Z·(a₀, …, aₙ)`. A Smith decomposition
/// `U · a = e₁` of the weight column gives the quotient map as the last `n`
/// rows of `U`, and the rays are the images of the standard basis, so that
/// `Σ aᵢ vᵢ = 0`. Ray `i` corresponds to weight `i`.
pub fn wps_fan(weights: &[u64]) -> Result<RaySet, ToricError> {
    if !is_well_formed(weights) {
        return Err(ToricError::NotWellFormed(weights.to_vec()));
    }
    let column: Vec<Vec<Integer>> = weights.iter().map(|&a| vec![Integer::from(a)]).collect();
    let smith = smith_normal_form(&IntMatrix::from_rows(column)?);
    let n = weights.len() - 1;
    // Well-formed weights are coprime, so d = (1, 0, …, 0)ᵀ and v = (1).
    debug_assert_eq!(smith.diagonal(), vec![Integer::from(1)]);
    debug_assert!(smith.v.is_identity());
    let rays = (0..=n)
        .map(|i| LatticeVector::new((1..=n).map(|r| smith.u.get(r, i).clone()).collect()))
        .collect();
    RaySet::new(rays)
}
