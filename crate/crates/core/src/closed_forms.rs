//! Closed-form thresholds that need no fan data.
//!
//! Each evaluator returns an exact fraction. Inputs outside the regime where
//! a formula is known are rejected rather than guessed.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::{ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("weights {0:?} are not well-formed")]
    NotWellFormed(Vec<u64>),
    #[error("no closed form in this regime: {0}")]
    OutOfRegime(String),
    #[error("unsupported del Pezzo descriptor: {0}")]
    UnsupportedDescriptor(String),
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl ClosedFormError {
    pub fn name(&self) -> &'static str {
        match self {
            ClosedFormError::NotWellFormed(_) => "NotWellFormed",
            ClosedFormError::OutOfRegime(_) => "OutOfRegime",
            ClosedFormError::UnsupportedDescriptor(_) => "UnsupportedDescriptor",
            ClosedFormError::UnknownKey(_) => "UnknownKey",
            ClosedFormError::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

/// Every choice of all-but-one weight is coprime.
pub fn is_well_formed(weights: &[u64]) -> bool {
    if weights.len() < 2 || weights.contains(&0) {
        return false;
    }
    (0..weights.len()).all(|skip| {
        weights
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .fold(0u64, |g, (_, &w)| g.gcd(&w))
            == 1
    })
}

/// Threshold of a well-formed weighted projective space: smallest weight
/// over the total weight.
pub fn wps_lct(weights: &[u64]) -> Result<Rational, ClosedFormError> {
    if !is_well_formed(weights) {
        return Err(ClosedFormError::NotWellFormed(weights.to_vec()));
    }
    let smallest = *weights.iter().min().unwrap();
    let total: u64 = weights.iter().sum();
    Ok(Rational::new(smallest.into(), total.into()))
}

/// Smooth hypersurface of degree `degree < ambient` in `P^ambient`.
pub fn hypersurface_lct(ambient: u64, degree: u64) -> Result<Rational, ClosedFormError> {
    if ambient < 2 || degree < 1 {
        return Err(ClosedFormError::InvalidArgument(format!(
            "need ambient >= 2 and degree >= 1, got ambient={ambient} degree={degree}"
        )));
    }
    if degree >= ambient {
        return Err(ClosedFormError::OutOfRegime(format!(
            "degree {degree} >= ambient dimension {ambient}; only member-dependent bounds are known"
        )));
    }
    Ok(Rational::new(1.into(), (ambient + 1 - degree).into()))
}

/// Smooth double cover: degree `2d` hypersurface in `P(1^{n+1}, d)`, valid
/// for `2 <= d <= n - 1`.
pub fn double_cover_lct(ambient: u64, degree: u64) -> Result<Rational, ClosedFormError> {
    if degree < 2 || degree + 1 > ambient {
        return Err(ClosedFormError::OutOfRegime(format!(
            "need 2 <= d <= n-1, got n={ambient} d={degree}"
        )));
    }
    Ok(Rational::new(1.into(), (ambient + 1 - degree).into()))
}

fn check_exponents(exponents: &[u64]) -> Result<(), ClosedFormError> {
    if exponents.is_empty() || exponents.contains(&0) {
        return Err(ClosedFormError::InvalidArgument(
            "exponents must be a nonempty list of positive integers".into(),
        ));
    }
    Ok(())
}

/// Complex singularity exponent of the monomial `∏ zᵢ^{mᵢ}`.
pub fn monomial_cse(exponents: &[u64]) -> Result<Rational, ClosedFormError> {
    check_exponents(exponents)?;
    let largest = *exponents.iter().max().unwrap();
    Ok(Rational::new(1.into(), largest.into()))
}

/// Complex singularity exponent of `Σ zᵢ^{mᵢ}`: `min(1, Σ 1/mᵢ)`.
pub fn fermat_cse(exponents: &[u64]) -> Result<Rational, ClosedFormError> {
    check_exponents(exponents)?;
    let sum = exponents
        .iter()
        .fold(Rational::zero(), |acc, &m| acc + Rational::new(1.into(), m.into()));
    Ok(sum.min(Rational::one()))
}

fn check_unit_interval(value: &Rational) -> Result<(), ClosedFormError> {
    if *value <= Rational::zero() || *value > Rational::one() {
        return Err(ClosedFormError::InvalidArgument(format!(
            "threshold {value} outside (0, 1]"
        )));
    }
    Ok(())
}

/// Threshold of a product of two canonical Gorenstein Fano varieties.
pub fn product_lct(a: &Rational, b: &Rational) -> Result<Rational, ClosedFormError> {
    check_unit_interval(a)?;
    check_unit_interval(b)?;
    Ok(a.clone().min(b.clone()))
}

/// Threshold of `P¹ × X` for a log terminal Fano `X`.
pub fn p1_product_lct(a: &Rational) -> Result<Rational, ClosedFormError> {
    check_unit_interval(a)?;
    Ok(a.clone().min(ratio(1, 2)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree8Type {
    /// `P¹ × P¹`.
    Product,
    /// The blow-up of `P²` at a point.
    Nonproduct,
}

impl FromStr for Degree8Type {
    type Err = ClosedFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "product" => Ok(Degree8Type::Product),
            "nonproduct" => Ok(Degree8Type::Nonproduct),
            other => Err(ClosedFormError::InvalidArgument(format!(
                "degree-8 type must be `product` or `nonproduct`, got `{other}`"
            ))),
        }
    }
}

/// A del Pezzo surface, smooth or with one node, described by the data its
/// threshold depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DelPezzoDescriptor {
    pub degree: u8,
    pub degree8_type: Option<Degree8Type>,
    pub nodes: u8,
    /// Degree 1: the anticanonical system contains a cuspidal curve.
    pub has_cuspidal_anticanonical: bool,
    /// Degree 2: the anticanonical system contains a tacnodal curve.
    pub has_tacnodal_anticanonical: bool,
    /// Degree 3: the cubic surface has an Eckardt point.
    pub has_eckardt_point: bool,
}

impl DelPezzoDescriptor {
    pub fn smooth(degree: u8) -> Self {
        DelPezzoDescriptor {
            degree,
            degree8_type: None,
            nodes: 0,
            has_cuspidal_anticanonical: false,
            has_tacnodal_anticanonical: false,
            has_eckardt_point: false,
        }
    }

    pub fn validate(&self) -> Result<(), ClosedFormError> {
        let unsupported = |msg: String| Err(ClosedFormError::UnsupportedDescriptor(msg));
        let d = self.degree;
        if !(1..=9).contains(&d) {
            return unsupported(format!("degree {d} outside 1..9"));
        }
        if self.nodes > 1 {
            return unsupported(format!("{} nodes", self.nodes));
        }
        if self.nodes == 1 && !(4..=6).contains(&d) {
            return unsupported(format!("one-node surfaces are covered only in degrees 4, 5, 6, not {d}"));
        }
        if self.has_cuspidal_anticanonical && d != 1 {
            return unsupported("cuspidal flag is meaningful only in degree 1".into());
        }
        if self.has_tacnodal_anticanonical && d != 2 {
            return unsupported("tacnodal flag is meaningful only in degree 2".into());
        }
        if self.has_eckardt_point && d != 3 {
            return unsupported("Eckardt flag is meaningful only in degree 3".into());
        }
        match (d, self.degree8_type) {
            (8, None) => unsupported("degree 8 needs a product/nonproduct type".into()),
            (8, Some(_)) => Ok(()),
            (_, Some(_)) => unsupported("degree-8 type given for another degree".into()),
            _ => Ok(()),
        }
    }
}

pub fn del_pezzo_lct(d: &DelPezzoDescriptor) -> Result<Rational, ClosedFormError> {
    d.validate()?;
    if d.nodes == 1 {
        return Ok(match d.degree {
            6 => ratio(1, 3),
            5 | 4 => ratio(1, 2),
            _ => unreachable!("validated"),
        });
    }
    Ok(match d.degree {
        1 if d.has_cuspidal_anticanonical => ratio(5, 6),
        1 => ratio(1, 1),
        2 if d.has_tacnodal_anticanonical => ratio(3, 4),
        2 => ratio(5, 6),
        3 if d.has_eckardt_point => ratio(2, 3),
        3 => ratio(3, 4),
        4 => ratio(2, 3),
        5 | 6 => ratio(1, 2),
        8 if d.degree8_type == Some(Degree8Type::Product) => ratio(1, 2),
        7 | 8 | 9 => ratio(1, 3),
        _ => unreachable!("validated"),
    })
}

/// Du Val singularity types occurring on cubic surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CubicSingularity {
    A1,
    A2,
    A3,
    A4,
    A5,
    D4,
    D5,
    E6,
}

impl CubicSingularity {
    pub const ALL: [CubicSingularity; 8] = [
        CubicSingularity::A1,
        CubicSingularity::A2,
        CubicSingularity::A3,
        CubicSingularity::A4,
        CubicSingularity::A5,
        CubicSingularity::D4,
        CubicSingularity::D5,
        CubicSingularity::E6,
    ];
}

impl fmt::Display for CubicSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CubicSingularity {
    type Err = ClosedFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CubicSingularity::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ClosedFormError::InvalidArgument(format!("unknown singularity type `{s}`")))
    }
}

/// Multiset of singularities of a singular cubic surface, kept sorted.
///
/// Realizability of the configuration is not checked; unrealizable inputs
/// fall through to the generic value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicSingularityMultiset(Vec<CubicSingularity>);

impl CubicSingularityMultiset {
    pub fn new(mut points: Vec<CubicSingularity>) -> Result<Self, ClosedFormError> {
        if points.is_empty() {
            return Err(ClosedFormError::InvalidArgument(
                "a singular cubic has at least one singular point".into(),
            ));
        }
        points.sort();
        Ok(CubicSingularityMultiset(points))
    }

    pub fn points(&self) -> &[CubicSingularity] {
        &self.0
    }

    fn count(&self, t: CubicSingularity) -> usize {
        self.0.iter().filter(|&&p| p == t).count()
    }

    fn is_exactly(&self, t: CubicSingularity) -> bool {
        self.0 == [t]
    }
}

impl FromStr for CubicSingularityMultiset {
    type Err = ClosedFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let points = s
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(points)
    }
}

/// Threshold of a singular cubic surface with canonical singularities.
///
/// Rules are applied in order, so the more specific configurations win:
/// `{A1}`, then `A5` or `{D5}`, then `{E6}`, then `A4`, `{D4}` or two `A2`,
/// and otherwise the generic value.
pub fn cubic_surface_lct(s: &CubicSingularityMultiset) -> Rational {
    use CubicSingularity::*;
    if s.is_exactly(A1) {
        ratio(2, 3)
    } else if s.count(A5) > 0 || s.is_exactly(D5) {
        ratio(1, 4)
    } else if s.is_exactly(E6) {
        ratio(1, 6)
    } else if s.count(A4) > 0 || s.is_exactly(D4) || s.count(A2) >= 2 {
        ratio(1, 3)
    } else {
        ratio(1, 2)
    }
}

/// Equivariant thresholds known from the literature for specific
/// group actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquivariantKey {
    DelPezzoQuinticS5,
    DelPezzoQuinticA5,
    FermatCubicAut,
    PlaneValentinerA6,
}

impl EquivariantKey {
    pub const ALL: [EquivariantKey; 4] = [
        EquivariantKey::DelPezzoQuinticS5,
        EquivariantKey::DelPezzoQuinticA5,
        EquivariantKey::FermatCubicAut,
        EquivariantKey::PlaneValentinerA6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EquivariantKey::DelPezzoQuinticS5 => "dP5_S5",
            EquivariantKey::DelPezzoQuinticA5 => "dP5_A5",
            EquivariantKey::FermatCubicAut => "FermatCubic_Aut",
            EquivariantKey::PlaneValentinerA6 => "P2_A6",
        }
    }
}

impl FromStr for EquivariantKey {
    type Err = ClosedFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EquivariantKey::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| ClosedFormError::UnknownKey(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantValue {
    pub value: Rational,
    pub citation: &'static str,
}

pub fn known_equivariant_lct(key: EquivariantKey) -> EquivariantValue {
    let (value, citation) = match key {
        EquivariantKey::DelPezzoQuinticS5 => (
            ratio(2, 1),
            "smooth quintic del Pezzo surface under its full automorphism group S5",
        ),
        EquivariantKey::DelPezzoQuinticA5 => (
            ratio(2, 1),
            "smooth quintic del Pezzo surface under the alternating subgroup A5",
        ),
        EquivariantKey::FermatCubicAut => (
            ratio(4, 1),
            "Fermat cubic surface under its automorphism group (Z/3)^3 x S4",
        ),
        EquivariantKey::PlaneValentinerA6 => (
            ratio(2, 1),
            "projective plane under the Valentiner action of A6",
        ),
    };
    EquivariantValue { value, citation }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wps_values() {
        assert_eq!(wps_lct(&[1, 1, 1, 1]).unwrap(), ratio(1, 4));
        assert_eq!(wps_lct(&[1, 1, 2, 6, 9]).unwrap(), ratio(1, 19));
        assert_eq!(wps_lct(&[3, 1, 1]).unwrap(), ratio(1, 5));
        assert_eq!(wps_lct(&[2, 2, 3]), Err(ClosedFormError::NotWellFormed(vec![2, 2, 3])));
        assert!(wps_lct(&[1]).is_err());
    }

    #[test]
    fn well_formedness() {
        assert!(is_well_formed(&[1, 1, 2, 3]));
        assert!(is_well_formed(&[2, 3, 5]));
        assert!(!is_well_formed(&[1, 2, 2]));
        assert!(!is_well_formed(&[1, 0, 1]));
    }

    #[test]
    fn hypersurfaces() {
        assert_eq!(hypersurface_lct(4, 2).unwrap(), ratio(1, 3));
        assert_eq!(hypersurface_lct(3, 1).unwrap(), ratio(1, 3));
        assert!(matches!(hypersurface_lct(4, 4), Err(ClosedFormError::OutOfRegime(_))));
        assert!(matches!(hypersurface_lct(1, 1), Err(ClosedFormError::InvalidArgument(_))));
    }

    #[test]
    fn double_covers() {
        assert_eq!(double_cover_lct(4, 3).unwrap(), ratio(1, 2));
        assert_eq!(double_cover_lct(5, 2).unwrap(), ratio(1, 4));
        assert!(matches!(double_cover_lct(3, 3), Err(ClosedFormError::OutOfRegime(_))));
        assert!(matches!(double_cover_lct(5, 1), Err(ClosedFormError::OutOfRegime(_))));
    }

    #[test]
    fn singularity_exponents() {
        assert_eq!(monomial_cse(&[1, 1, 1]).unwrap(), ratio(1, 1));
        assert_eq!(monomial_cse(&[2, 3]).unwrap(), ratio(1, 3));
        assert_eq!(monomial_cse(&[5]).unwrap(), ratio(1, 5));
        assert_eq!(fermat_cse(&[2, 2]).unwrap(), ratio(1, 1));
        assert_eq!(fermat_cse(&[2, 3, 7]).unwrap(), ratio(41, 42));
        assert_eq!(fermat_cse(&[4]).unwrap(), ratio(1, 4));
        assert!(fermat_cse(&[]).is_err());
        assert!(monomial_cse(&[3, 0]).is_err());
    }

    #[test]
    fn products() {
        assert_eq!(product_lct(&ratio(1, 3), &ratio(1, 2)).unwrap(), ratio(1, 3));
        assert_eq!(product_lct(&ratio(3, 7), &ratio(3, 7)).unwrap(), ratio(3, 7));
        assert_eq!(product_lct(&ratio(1, 1), &ratio(2, 3)).unwrap(), ratio(2, 3));
        assert_eq!(p1_product_lct(&ratio(2, 3)).unwrap(), ratio(1, 2));
        assert_eq!(p1_product_lct(&ratio(1, 3)).unwrap(), ratio(1, 3));
        assert_eq!(p1_product_lct(&ratio(1, 2)).unwrap(), ratio(1, 2));
        assert!(product_lct(&ratio(0, 1), &ratio(1, 2)).is_err());
        assert!(p1_product_lct(&ratio(3, 2)).is_err());
    }

    #[test]
    fn del_pezzo_cases() {
        assert_eq!(del_pezzo_lct(&DelPezzoDescriptor::smooth(5)).unwrap(), ratio(1, 2));
        assert_eq!(del_pezzo_lct(&DelPezzoDescriptor::smooth(1)).unwrap(), ratio(1, 1));
        let nodal = |degree| DelPezzoDescriptor {
            nodes: 1,
            ..DelPezzoDescriptor::smooth(degree)
        };
        assert_eq!(del_pezzo_lct(&nodal(6)).unwrap(), ratio(1, 3));
        assert_eq!(del_pezzo_lct(&nodal(4)).unwrap(), ratio(1, 2));
        assert_eq!(del_pezzo_lct(&nodal(5)).unwrap(), ratio(1, 2));
        assert!(matches!(
            del_pezzo_lct(&nodal(7)),
            Err(ClosedFormError::UnsupportedDescriptor(_))
        ));
        // Singular cubics belong to the cubic classifier.
        assert!(del_pezzo_lct(&nodal(3)).is_err());
        assert!(del_pezzo_lct(&DelPezzoDescriptor::smooth(8)).is_err());
        let eckardt_on_quartic = DelPezzoDescriptor {
            has_eckardt_point: true,
            ..DelPezzoDescriptor::smooth(4)
        };
        assert!(del_pezzo_lct(&eckardt_on_quartic).is_err());
    }

    #[test]
    fn cubic_cases() {
        let lct = |s: &str| cubic_surface_lct(&s.parse().unwrap());
        assert_eq!(lct("A1"), ratio(2, 3));
        assert_eq!(lct("A4"), ratio(1, 3));
        assert_eq!(lct("A4,A1"), ratio(1, 3));
        assert_eq!(lct("A1,A1"), ratio(1, 2));
        assert_eq!(lct("E6"), ratio(1, 6));
        assert_eq!(lct("D5"), ratio(1, 4));
        assert_eq!(lct("A5,A1"), ratio(1, 4));
        assert_eq!(lct("D4"), ratio(1, 3));
        assert_eq!(lct("A2,A2"), ratio(1, 3));
        assert_eq!(lct("A2,A2,A2"), ratio(1, 3));
        assert_eq!(lct("A3,A1,A1"), ratio(1, 2));
        assert!("".parse::<CubicSingularityMultiset>().is_err());
        assert!("B7".parse::<CubicSingularityMultiset>().is_err());
    }

    #[test]
    fn equivariant_table() {
        let v = |k: &str| known_equivariant_lct(k.parse().unwrap()).value;
        assert_eq!(v("dP5_S5"), ratio(2, 1));
        assert_eq!(v("dP5_A5"), ratio(2, 1));
        assert_eq!(v("FermatCubic_Aut"), ratio(4, 1));
        assert_eq!(v("P2_A6"), ratio(2, 1));
        assert!(matches!("K3_Z2".parse::<EquivariantKey>(), Err(ClosedFormError::UnknownKey(_))));
    }
}
