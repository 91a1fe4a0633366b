//! Scalar abstraction for the geometry kernel.
//!
//! Everything the kernel does (elimination, feasibility tests, vertex
//! deduplication) relies on exact equality and exact sign, so only exact
//! ordered fields qualify. Floating point types are deliberately not
//! admitted.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact ordered field.
pub trait ExactField: Clone + Ord + Hash + Debug + Display + Num + Signed {
    /// Embeds a machine integer.
    fn from_i64(value: i64) -> Self;
}

impl<T> ExactField for Ratio<T>
where
    T: Clone + Integer + Signed + Hash + Debug + Display + From<i64>,
{
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(T::from(value))
    }
}
