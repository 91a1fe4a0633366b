//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// and satisfying `d[0][0] | d[1][1] | …`.
///
/// Rectangular inputs are accepted; `u` is `rows × rows` and `v` is
/// `cols × cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

// Row/column operations applied simultaneously to the working matrix and to
// the accumulated transforms.
struct Work {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// row[target] -= factor · row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols() {
                let delta = factor * m.get(source, c);
                *m.get_mut(target, c) -= delta;
            }
        }
    }

    /// col[target] -= factor · col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for r in 0..m.rows() {
                let delta = factor * m.get(r, source);
                *m.get_mut(r, target) -= delta;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols() {
                let x = m.get_mut(i, c);
                *x = -x.clone();
            }
        }
    }

    /// Position of the smallest nonzero |entry| in the trailing block.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.a.rows() {
            for c in t..self.a.cols() {
                let x = self.a.get(r, c);
                if x.is_zero() {
                    continue;
                }
                if best.map_or(true, |(br, bc)| x.abs() < self.a.get(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
    };

    for t in 0..rows.min(cols) {
        loop {
            let Some((pr, pc)) = w.smallest_in_block(t) else {
                // Remaining block is zero.
                return finish(w);
            };
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            let mut clean = true;
            for r in t + 1..rows {
                let q = w.a.get(r, t).div_floor(w.a.get(t, t));
                if !q.is_zero() {
                    w.add_row(r, t, &q);
                }
                if !w.a.get(r, t).is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                let q = w.a.get(t, c).div_floor(w.a.get(t, t));
                if !q.is_zero() {
                    w.add_col(c, t, &q);
                }
                if !w.a.get(t, c).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            // Pivot row and column are clear; enforce divisibility of the
            // remaining block by folding an offending row into row t.
            let pivot = w.a.get(t, t).clone();
            let offending = (t + 1..rows)
                .find(|&r| (t + 1..cols).any(|c| !w.a.get(r, c).is_multiple_of(&pivot)));
            match offending {
                Some(r) => w.add_row(t, r, &BigInt::from(-1)),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
    }
    finish(w)
}

fn finish(w: Work) -> SmithDecomposition {
    SmithDecomposition {
        u: w.u,
        d: w.a,
        v: w.v,
    }
}
