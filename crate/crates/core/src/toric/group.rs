use std::collections::{BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use num_traits::{One, Signed};

use super::rays::RaySet;
use super::ToricError;
use crate::geometry::linalg::rank;
use crate::geometry::{solve_square_system, Matrix, Vector};
use crate::{IntMatrix, Rational};

/// Closure of generated groups stops with an error beyond this many elements.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// A finite group of lattice automorphisms of `Zⁿ`.
///
/// Elements act on the lattice of rays by `v ↦ g · v`; the induced action on
/// the dual space is the contragredient one, so its fixed points are those of
/// the transposes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    elements: Vec<IntMatrix>,
    dim: usize,
}

fn check_element(g: &IntMatrix, dim: usize) -> Result<(), ToricError> {
    if !g.is_square() || g.rows() != dim {
        return Err(ToricError::GroupDimensionMismatch {
            expected: dim,
            found: g.rows().max(g.cols()),
        });
    }
    if !g.is_unimodular() {
        return Err(ToricError::NotUnimodular(g.to_string()));
    }
    Ok(())
}

impl GroupAction {
    pub fn trivial(dim: usize) -> Self {
        GroupAction {
            elements: vec![IntMatrix::identity(dim)],
            dim,
        }
    }

    /// Takes the complete element list of a group and verifies that it is
    /// closed under products.
    pub fn new(elements: Vec<IntMatrix>) -> Result<Self, ToricError> {
        let dim = elements
            .first()
            .ok_or_else(|| ToricError::GroupNotClosed("no elements".into()))?
            .rows();
        for g in &elements {
            check_element(g, dim)?;
        }
        let set: BTreeSet<IntMatrix> = elements.into_iter().collect();
        for a in &set {
            for b in &set {
                let ab = a.mul(b)?;
                if !set.contains(&ab) {
                    return Err(ToricError::GroupNotClosed(format!(
                        "product of {a} and {b} is {ab}, which is not listed"
                    )));
                }
            }
        }
        // A finite product-closed set of invertible matrices contains the identity.
        debug_assert!(set.contains(&IntMatrix::identity(dim)));
        Ok(GroupAction {
            elements: set.into_iter().collect(),
            dim,
        })
    }

    pub fn generated_by(gens: &[IntMatrix]) -> Result<Self, ToricError> {
        Self::generated_by_with_cap(gens, DEFAULT_GROUP_CAP)
    }

    /// Closes `gens` under products by breadth-first iteration.
    pub fn generated_by_with_cap(gens: &[IntMatrix], cap: usize) -> Result<Self, ToricError> {
        let dim = gens
            .first()
            .ok_or_else(|| ToricError::InvalidArgument("no group generators".into()))?
            .rows();
        for g in gens {
            check_element(g, dim)?;
        }
        let identity = IntMatrix::identity(dim);
        let mut seen: HashSet<IntMatrix> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(h) = queue.pop_front() {
            for g in gens {
                let next = g.mul(&h)?;
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(ToricError::GroupNotClosed(format!(
                            "generated group exceeds {cap} elements"
                        )));
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut elements: Vec<IntMatrix> = seen.into_iter().collect();
        elements.sort();
        Ok(GroupAction { elements, dim })
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Every element must map the ray set onto itself.
    pub fn check_preserves(&self, rays: &RaySet) -> Result<(), ToricError> {
        if self.dim != rays.dim() {
            return Err(ToricError::GroupDimensionMismatch {
                expected: rays.dim(),
                found: self.dim,
            });
        }
        for g in &self.elements {
            for v in rays.rays() {
                if !rays.contains(&g.mul_vector(v)?) {
                    return Err(ToricError::GroupDoesNotPreserveFan(g.to_string()));
                }
            }
        }
        Ok(())
    }
}

/// The group of all lattice automorphisms that permute the rays.
///
/// A linear map permuting the rays is determined by the images of any `n`
/// independent rays, so every injective assignment of those is tried.
pub fn fan_automorphisms(rays: &RaySet) -> Result<GroupAction, ToricError> {
    let n = rays.dim();
    let as_rational = |v: &Vector<crate::Integer>| -> Vec<Rational> {
        v.iter().map(|x| Rational::from_integer(x.clone())).collect()
    };

    let mut basis: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, v) in rays.rays().iter().enumerate() {
        rows.push(as_rational(v));
        if rank(&rows, n) == rows.len() {
            basis.push(i);
        } else {
            rows.pop();
        }
        if basis.len() == n {
            break;
        }
    }
    if basis.len() < n {
        return Err(ToricError::FanNotComplete);
    }

    // Columns of `b` are the chosen rays; `b_inv` is its exact inverse.
    let b = Matrix::from_rows(rows)?.transpose();
    let mut inv_cols = Vec::with_capacity(n);
    for i in 0..n {
        let col = solve_square_system(&b, &Vector::unit(n, i))?
            .expect("independent rays form an invertible matrix");
        inv_cols.push(col.into_coords());
    }
    let b_inv = Matrix::from_rows(inv_cols)?.transpose();

    let mut found = BTreeSet::new();
    for images in (0..rays.len()).permutations(n) {
        let image_rows: Vec<Vec<Rational>> = images.iter().map(|&j| as_rational(&rays.rays()[j])).collect();
        let c = Matrix::from_rows(image_rows)?.transpose();
        let g = c.mul(&b_inv)?;
        if g.entries().iter().any(|x| !x.is_integer()) {
            continue;
        }
        let g: IntMatrix = g.map(|x| x.to_integer());
        if !g.determinant()?.abs().is_one() {
            continue;
        }
        let permutes = rays
            .rays()
            .iter()
            .all(|v| g.mul_vector(v).map_or(false, |w| rays.contains(&w)));
        if permutes {
            found.insert(g);
        }
    }
    GroupAction::new(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::projective_space_fan;

    #[test]
    fn sign_group_of_line() {
        let neg = IntMatrix::from_i64_rows(&[&[-1]]).unwrap();
        let g = GroupAction::generated_by(&[neg.clone()]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(GroupAction::new(vec![IntMatrix::identity(1), neg]).unwrap(), g);
    }

    #[test]
    fn unclosed_element_list() {
        let rot = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]).unwrap();
        let err = GroupAction::new(vec![IntMatrix::identity(2), rot]).unwrap_err();
        assert_eq!(err.name(), "GroupNotClosed");
    }

    #[test]
    fn rejects_non_unimodular() {
        let doubling = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]).unwrap();
        assert_eq!(GroupAction::generated_by(&[doubling]).unwrap_err().name(), "NotUnimodular");
    }

    #[test]
    fn infinite_generated_group_hits_cap() {
        let shear = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap();
        let err = GroupAction::generated_by_with_cap(&[shear], 50).unwrap_err();
        assert_eq!(err.name(), "GroupNotClosed");
    }

    #[test]
    fn symmetry_groups_of_projective_spaces() {
        // Ray permutations of Pⁿ form the symmetric group on n + 1 letters.
        assert_eq!(fan_automorphisms(&projective_space_fan(1).unwrap()).unwrap().order(), 2);
        assert_eq!(fan_automorphisms(&projective_space_fan(2).unwrap()).unwrap().order(), 6);
        assert_eq!(fan_automorphisms(&projective_space_fan(3).unwrap()).unwrap().order(), 24);
    }

    #[test]
    fn cube_symmetries() {
        let cube = RaySet::from_i64(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])
            .unwrap();
        assert_eq!(fan_automorphisms(&cube).unwrap().order(), 48);
    }

    #[test]
    fn preservation_check() {
        let p2 = projective_space_fan(2).unwrap();
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        GroupAction::generated_by(&[swap]).unwrap().check_preserves(&p2).unwrap();
        let neg = IntMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]]).unwrap();
        let err = GroupAction::generated_by(&[neg]).unwrap().check_preserves(&p2).unwrap_err();
        assert_eq!(err.name(), "GroupDoesNotPreserveFan");
    }
}
