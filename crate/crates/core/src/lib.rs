//! Exact global log canonical thresholds.
//!
//! The crate is layered bottom-up:
//!
//! * [`geometry`]: exact linear algebra, halfspace polytopes, Smith normal
//!   form. Generic over any [`ExactField`].
//! * [`toric`]: fans given by their ray generators, the dual polytope and the
//!   threshold `1 / (1 + max ⟨w, v⟩)`, optionally restricted to the points
//!   fixed by a finite group of lattice automorphisms.
//! * [`closed_forms`]: direct formulas that need no fan data.
//! * [`db`]: the table of all 105 families of smooth Fano threefolds.
//!
//! All values are exact fractions; nothing is ever rounded.

pub mod closed_forms;
pub mod db;
pub mod geometry;
mod scalar;
pub mod toric;

pub use scalar::ExactField;

/// Exact arbitrary-precision fraction.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Point of the dual space.
pub type RationalVector = geometry::Vector<Rational>;
/// Point of the lattice `Zⁿ`.
pub type LatticeVector = geometry::Vector<Integer>;
pub type RationalHalfSpace = geometry::HalfSpace<Rational>;
pub type RationalPolytope = geometry::HPolytope<Rational>;
pub use geometry::IntMatrix;

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: Integer = num.parse().ok()?;
    let den: Integer = den.parse().ok()?;
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Shorthand for building small fractions.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
