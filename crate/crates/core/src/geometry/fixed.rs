use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::linalg::nullspace;
use super::matrix::IntMatrix;
use super::vector::Vector;
use super::GeometryError;

/// Basis of `{x : g · x = x for every g in gens}`.
///
/// An empty result means the common fixed space is `{0}`.
pub fn fixed_subspace(gens: &[IntMatrix]) -> Result<Vec<Vector<BigRational>>, GeometryError> {
    let first = gens.first().ok_or(GeometryError::NoGenerators)?;
    let dim = first.rows();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in gens {
        if !g.is_square() {
            return Err(GeometryError::NotSquare {
                rows: g.rows(),
                cols: g.cols(),
            });
        }
        if g.rows() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: g.rows(),
            });
        }
        let shifted = g.sub(&IntMatrix::identity(dim))?;
        for r in 0..dim {
            let row = shifted.row(r);
            if row.iter().all(BigInt::is_zero) {
                continue;
            }
            rows.push(row.iter().map(|x| BigRational::from_integer(x.clone())).collect());
        }
    }
    Ok(nullspace(&rows, dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn identity_fixes_everything() {
        let basis = fixed_subspace(&[IntMatrix::identity(3)]).unwrap();
        assert_eq!(basis, (0..3).map(|i| Vector::unit(3, i)).collect::<Vec<_>>());
    }

    #[test]
    fn swap_fixes_diagonal() {
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(fixed_subspace(&[swap]).unwrap(), vec![Vector::new(vec![q(1), q(1)])]);
    }

    #[test]
    fn negation_fixes_nothing() {
        let neg = IntMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]]).unwrap();
        assert!(fixed_subspace(&[neg]).unwrap().is_empty());
    }

    #[test]
    fn common_kernel_of_several() {
        // Swap of the first two coordinates and negation of the third.
        let swap = IntMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        let flip = IntMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]).unwrap();
        assert_eq!(
            fixed_subspace(&[swap, flip]).unwrap(),
            vec![Vector::new(vec![q(1), q(1), q(0)])]
        );
    }

    #[test]
    fn mismatched_dimensions() {
        let a = IntMatrix::identity(2);
        let b = IntMatrix::identity(3);
        assert!(matches!(fixed_subspace(&[a, b]), Err(GeometryError::DimensionMismatch { .. })));
        assert_eq!(fixed_subspace(&[]), Err(GeometryError::NoGenerators));
    }
}
