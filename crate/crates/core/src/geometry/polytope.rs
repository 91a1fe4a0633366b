//! Halfspace representations and exhaustive exact vertex enumeration.
//!
//! Ambient dimensions here are small, so every independent `dim`-subset of
//! constraints is solved exactly instead of running a double-description
//! pass. Subsets are walked depth-first while the chosen rows are kept in
//! reduced row echelon form; a row that depends on its prefix prunes the
//! whole branch.

use std::collections::BTreeSet;

use super::linalg::rank;
use super::vector::Vector;
use super::GeometryError;
use crate::scalar::ExactField;

/// `{w : ⟨normal, w⟩ ≥ offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace<T> {
    normal: Vector<T>,
    offset: T,
}

impl<T: ExactField> HalfSpace<T> {
    pub fn new(normal: Vector<T>, offset: T) -> Result<Self, GeometryError> {
        if normal.dim() == 0 || normal.is_zero() {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(HalfSpace { normal, offset })
    }

    pub fn normal(&self) -> &Vector<T> {
        &self.normal
    }

    pub fn offset(&self) -> &T {
        &self.offset
    }

    pub fn contains(&self, w: &Vector<T>) -> bool {
        self.normal.dot(w) >= self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope<T> {
    halfspaces: Vec<HalfSpace<T>>,
    dim: usize,
}

impl<T: ExactField> HPolytope<T> {
    pub fn new(halfspaces: Vec<HalfSpace<T>>) -> Result<Self, GeometryError> {
        let dim = halfspaces
            .first()
            .ok_or(GeometryError::NoHalfspaces)?
            .normal
            .dim();
        if let Some(h) = halfspaces.iter().find(|h| h.normal.dim() != dim) {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: h.normal.dim(),
            });
        }
        Ok(HPolytope { halfspaces, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace<T>] {
        &self.halfspaces
    }

    pub fn contains(&self, w: &Vector<T>) -> bool {
        self.halfspaces.iter().all(|h| h.contains(w))
    }

    fn normal_rows(&self) -> Vec<Vec<T>> {
        self.halfspaces
            .iter()
            .map(|h| h.normal.coords().to_vec())
            .collect()
    }

    /// Calls `visit` once per subset of `size` halfspaces with linearly
    /// independent normals, passing the reduced echelon form of the subset.
    fn for_each_independent_subset(&self, size: usize, visit: &mut dyn FnMut(&Echelon<T>)) {
        let rows: Vec<Vec<T>> = self
            .halfspaces
            .iter()
            .map(|h| {
                let mut row = h.normal.coords().to_vec();
                row.push(h.offset.clone());
                row
            })
            .collect();
        extend_subsets(&rows, 0, size, &Echelon { rows: Vec::new(), pivots: Vec::new(), dim: self.dim }, visit);
    }

    /// True iff the recession cone `{d : ⟨a, d⟩ ≥ 0 for every normal a}` is
    /// `{0}`, i.e. the normals positively span the ambient space.
    ///
    /// If the normals have full rank the recession cone is pointed, so it is
    /// nontrivial exactly when it has an extreme ray. Every extreme ray is cut
    /// out by `dim - 1` independent tight normals; all such candidates and
    /// their negatives are tested.
    pub fn is_bounded(&self) -> bool {
        let rows = self.normal_rows();
        if rank(&rows, self.dim) < self.dim {
            return false;
        }
        let feasible_direction = |d: &Vector<T>| {
            self.halfspaces
                .iter()
                .all(|h| !h.normal.dot(d).is_negative())
        };
        let mut bounded = true;
        self.for_each_independent_subset(self.dim - 1, &mut |e| {
            if bounded {
                let d = e.kernel_vector();
                let neg = d.map(|x| -x.clone());
                bounded = !(feasible_direction(&d) || feasible_direction(&neg));
            }
        });
        bounded
    }

    /// All vertices of a bounded polytope, deduplicated exactly.
    pub fn enumerate_vertices(&self) -> Result<BTreeSet<Vector<T>>, GeometryError> {
        if !self.is_bounded() {
            return Err(GeometryError::Unbounded);
        }
        let mut vertices = BTreeSet::new();
        self.for_each_independent_subset(self.dim, &mut |e| {
            let point = e.solution();
            if !vertices.contains(&point) && self.contains(&point) {
                vertices.insert(point);
            }
        });
        if vertices.is_empty() {
            return Err(GeometryError::EmptyPolytope);
        }
        Ok(vertices)
    }
}

/// Reduced row echelon form of a set of independent augmented rows
/// `[normal | offset]`; `pivots[i]` is the leading column of `rows[i]`.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    dim: usize,
}

impl<T: ExactField> Echelon<T> {
    /// The echelon form with `row` appended, or `None` if its normal part
    /// lies in the span of the current rows.
    fn with_row(&self, row: &[T]) -> Option<Self> {
        let mut r = row.to_vec();
        for (basis, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, b) in r.iter_mut().zip(basis) {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        let p = (0..self.dim).find(|&c| !r[c].is_zero())?;
        let lead = r[p].clone();
        for x in r.iter_mut() {
            *x = x.clone() / lead.clone();
        }
        let mut rows = self.rows.clone();
        for basis in rows.iter_mut() {
            if !basis[p].is_zero() {
                let f = basis[p].clone();
                for (x, y) in basis.iter_mut().zip(&r) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        rows.push(r);
        let mut pivots = self.pivots.clone();
        pivots.push(p);
        Some(Echelon { rows, pivots, dim: self.dim })
    }

    /// Unique point where every row is tight; needs `dim` rows.
    fn solution(&self) -> Vector<T> {
        let mut x = vec![T::zero(); self.dim];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            x[p] = row[self.dim].clone();
        }
        Vector::new(x)
    }

    /// Spanning vector of the normals' kernel; needs `dim - 1` rows.
    fn kernel_vector(&self) -> Vector<T> {
        let free = (0..self.dim).find(|c| !self.pivots.contains(c)).expect("one free column");
        let mut d = vec![T::zero(); self.dim];
        d[free] = T::one();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            d[p] = -row[free].clone();
        }
        Vector::new(d)
    }
}

fn extend_subsets<T: ExactField>(
    rows: &[Vec<T>],
    start: usize,
    size: usize,
    current: &Echelon<T>,
    visit: &mut dyn FnMut(&Echelon<T>),
) {
    if current.rows.len() == size {
        visit(current);
        return;
    }
    let needed = size - current.rows.len();
    for i in start..=rows.len().saturating_sub(needed) {
        if let Some(next) = current.with_row(&rows[i]) {
            extend_subsets(rows, i + 1, size, &next, visit);
        }
    }
}
