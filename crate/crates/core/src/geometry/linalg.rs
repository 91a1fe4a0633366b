//! Exact Gaussian elimination over an [`ExactField`].

use super::matrix::Matrix;
use super::vector::Vector;
use super::GeometryError;
use crate::scalar::ExactField;

/// Solves `a · x = b` exactly.
///
/// Returns `Ok(None)` when `a` is singular.
pub fn solve_square_system<T: ExactField>(
    a: &Matrix<T>,
    b: &Vector<T>,
) -> Result<Option<Vector<T>>, GeometryError> {
    if !a.is_square() {
        return Err(GeometryError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if b.dim() != n {
        return Err(GeometryError::DimensionMismatch {
            expected: n,
            found: b.dim(),
        });
    }

    // Augmented system, eliminated to reduced row echelon form in place.
    let mut m: Vec<Vec<T>> = (0..n)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();

    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(None);
        };
        m.swap(col, pivot);
        let inv = T::one() / m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=n {
                    let delta = factor.clone() * m[col][c].clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
            }
        }
    }
    Ok(Some(Vector::new(m.into_iter().map(|mut row| row.pop().unwrap()).collect())))
}

pub fn determinant<T: ExactField>(a: &Matrix<T>) -> Result<T, GeometryError> {
    if !a.is_square() {
        return Err(GeometryError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut m: Vec<Vec<T>> = (0..n).map(|r| a.row(r).to_vec()).collect();
    let mut det = T::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(T::zero());
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det = det * m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / m[col][col].clone();
            for c in col..n {
                let delta = factor.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - delta;
            }
        }
    }
    Ok(det)
}

/// Reduced row echelon form of `rows` (each of length `cols`), together with
/// the pivot column of every nonzero row.
pub fn rref<T: ExactField>(rows: &[Vec<T>], cols: usize) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][col].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for c in col..cols {
                    let delta = factor.clone() * m[r][c].clone();
                    m[i][c] = m[i][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<T: ExactField>(rows: &[Vec<T>], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// Basis of `{x : row · x = 0 for every row}`, one vector per free column.
pub fn nullspace<T: ExactField>(rows: &[Vec<T>], cols: usize) -> Vec<Vector<T>> {
    let (reduced, pivots) = rref(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![T::zero(); cols];
            x[f] = T::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            Vector::new(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn mat(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_solve() {
        let x = solve_square_system(&mat(&[&[1, 0], &[0, 1]]), &Vector::new(vec![q(3, 1), q(-1, 2)]))
            .unwrap()
            .unwrap();
        assert_eq!(x, Vector::new(vec![q(3, 1), q(-1, 2)]));
    }

    #[test]
    fn singular_solve_is_absent() {
        let x = solve_square_system(&mat(&[&[1, 1], &[1, 1]]), &Vector::new(vec![q(0, 1), q(1, 1)]))
            .unwrap();
        assert!(x.is_none());
    }

    #[test]
    fn two_by_two_solve_back_substitutes() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let b = Vector::new(vec![q(1, 1), q(0, 1)]);
        let x = solve_square_system(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vector(&x).unwrap(), b);
        assert_eq!(x, Vector::new(vec![q(3, 5), q(-1, 5)]));
    }

    #[test]
    fn dimension_mismatch() {
        let err = solve_square_system(&mat(&[&[1, 0], &[0, 1]]), &Vector::new(vec![q(1, 1)]));
        assert!(matches!(err, Err(GeometryError::DimensionMismatch { .. })));
        let err = solve_square_system(&mat(&[&[1, 0]]), &Vector::new(vec![q(1, 1)]));
        assert!(matches!(err, Err(GeometryError::NotSquare { .. })));
    }

    #[test]
    fn works_over_machine_ratios() {
        use num_rational::Ratio;
        let a: Matrix<Ratio<i64>> =
            Matrix::from_rows(vec![vec![Ratio::from(2), Ratio::from(1)], vec![Ratio::from(1), Ratio::from(3)]])
                .unwrap();
        let x = solve_square_system(&a, &Vector::new(vec![Ratio::from(1), Ratio::from(0)]))
            .unwrap()
            .unwrap();
        assert_eq!(x[0], Ratio::new(3, 5));
        assert_eq!(determinant(&a).unwrap(), Ratio::from(5));
    }

    #[test]
    fn nullspace_of_swap_minus_identity() {
        let basis = nullspace(&[vec![q(-1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]], 2);
        assert_eq!(basis, vec![Vector::new(vec![q(1, 1), q(1, 1)])]);
    }

    #[test]
    fn determinant_sign_and_zero() {
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])).unwrap(), q(-1, 1));
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])).unwrap(), q(0, 1));
        assert_eq!(rank(&[vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]], 2), 1);
    }
}
