//! Exact linear solves by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::Rational;
use crate::{Error, Result};

/// Solve `A·X = B` for square integer `A` and integer right-hand sides `B`
/// (`n × m`), returning the exact rational solution.
///
/// Forward elimination is Bareiss' one-step fraction-free scheme, so every
/// intermediate entry is an integer minor of `[A | B]`; only the final back
/// substitution leaves the integers.
pub fn solve_fraction_free(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    assert_eq!(b.len(), n, "row count mismatch");
    let m = b.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| {
            assert_eq!(ra.len(), n, "matrix must be square");
            ra.iter().chain(rb).cloned().collect()
        })
        .collect();

    let mut prev = BigInt::from(1);
    for k in 0..n {
        let pivot = (k..n)
            .find(|&i| !rows[i][k].is_zero())
            .ok_or(Error::Singular)?;
        rows.swap(k, pivot);
        let (top, bottom) = rows.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n + m {
                row[j] = (&row[j] * &pivot_row[k] - &factor * &pivot_row[j]) / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = rows[k][k].clone();
    }

    let mut x = vec![vec![Rational::zero(); m]; n];
    for c in 0..m {
        for i in (0..n).rev() {
            let mut acc = Rational::from_integer(rows[i][n + c].clone());
            for j in i + 1..n {
                if !rows[i][j].is_zero() {
                    acc -= Rational::from_integer(rows[i][j].clone()) * &x[j][c];
                }
            }
            x[i][c] = acc / Rational::from_integer(rows[i][i].clone());
        }
    }
    Ok(x)
}

/// Exact inverse of a square integer matrix.
pub fn invert(a: &[Vec<BigInt>]) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    let identity: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    solve_fraction_free(a, &identity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn solves_small_system() {
        // 2x + y = 3, x + 3y = 5  =>  x = 4/5, y = 7/5
        let x = solve_fraction_free(&mat(&[&[2, 1], &[1, 3]]), &mat(&[&[3], &[5]])).unwrap();
        assert_eq!(x, vec![vec![ratio(4, 5)], vec![ratio(7, 5)]]);
    }

    #[test]
    fn needs_pivoting() {
        let inv = invert(&mat(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(
            inv,
            vec![
                vec![ratio(0, 1), ratio(1, 1)],
                vec![ratio(1, 1), ratio(0, 1)]
            ]
        );
    }

    #[test]
    fn singular() {
        assert_eq!(invert(&mat(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let a = mat(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        let inv = invert(&a).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s = (0..3).fold(Rational::zero(), |acc, k| {
                    acc + Rational::from_integer(a[i][k].clone()) * &inv[k][j]
                });
                assert_eq!(s, ratio(i64::from(i == j), 1));
            }
        }
    }
}
