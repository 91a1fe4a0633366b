use std::fmt;
use std::ops::Index;

use num_traits::{Num, Zero};

/// A coordinate vector.
///
/// Ordering is lexicographic on coordinates, which is what the engine uses
/// for deterministic tie-breaking.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector<T>(Vec<T>);

impl<T> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Vector(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<T> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Vector<U> {
        Vector(self.0.iter().map(f).collect())
    }
}

impl<T: Clone + Num> Vector<T> {
    pub fn zeros(dim: usize) -> Self {
        Vector(vec![T::zero(); dim])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = T::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Standard pairing. Panics on dimension mismatch.
    pub fn dot(&self, other: &Self) -> T {
        assert_eq!(self.dim(), other.dim(), "pairing of vectors of different dimension");
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn scale(&self, factor: &T) -> Self {
        Vector(self.0.iter().map(|a| a.clone() * factor.clone()).collect())
    }
}

impl<T> From<Vec<T>> for Vector<T> {
    fn from(coords: Vec<T>) -> Self {
        Vector(coords)
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<'a, T> IntoIterator for &'a Vector<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Renders as comma-separated coordinates without spaces, e.g. `3,-1/2`.
impl<T: fmt::Display> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
