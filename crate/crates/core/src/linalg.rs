//! Fraction-free (Bareiss) elimination over an exact field.

use crate::scalar::Scalar;

/// Row echelon form of `m` by Bareiss elimination, with the pivot columns.
///
/// Entries stay polynomial in the input entries; every division is exact.
pub fn echelon<T: Scalar>(m: &[Vec<T>]) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut a: Vec<Vec<T>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let v = (a[r][c].clone() * a[i][j].clone() - a[i][c].clone() * a[r][j].clone()) / prev.clone();
                a[i][j] = v;
            }
            a[i][c] = T::zero();
        }
        // entries left of the pivot in later rows are already zero
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Scalar>(m: &[Vec<T>]) -> usize {
    echelon(m).1.len()
}

/// Basis of `{ v : m v = 0 }`, one vector per free column, with a 1 in that
/// column.
pub fn nullspace<T: Scalar>(m: &[Vec<T>], cols: usize) -> Vec<Vec<T>> {
    let (e, pivots) = echelon(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (row, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = T::zero();
                for j in (pc + 1)..cols {
                    acc = acc + e[row][j].clone() * v[j].clone();
                }
                v[pc] = -(acc / e[row][pc].clone());
            }
            v
        })
        .collect()
}

/// Determinant of a square matrix.
pub fn determinant<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return T::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                a[i][j] = (a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone()) / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return T::one();
    }
    sign * a[n - 1][n - 1].clone()
}

/// `m v`.
pub fn apply<T: Scalar>(m: &[Vec<T>], v: &[T]) -> Vec<T> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Rational;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_cases() {
        let m = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&m), 1);
        assert_eq!(nullspace(&m, 2), vec![vec![int(-2), int(1)]]);
        assert_eq!(determinant(&m), int(0));
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(&mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), int(6));
        assert!(nullspace(&mat(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }

    /// Rank by plain Gauss-Jordan with field division.
    fn rank_oracle(m: &[Vec<Rational>]) -> usize {
        let mut a = m.to_vec();
        let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| a[i][c] != int(0)) else { continue };
            a.swap(r, p);
            let piv = a[r][c].clone();
            for j in 0..cols {
                a[r][j] = &a[r][j] / &piv;
            }
            for i in 0..rows {
                if i != r {
                    let f = a[i][c].clone();
                    for j in 0..cols {
                        let v = &a[i][j] - &(&f * &a[r][j]);
                        a[i][j] = v;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
        (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
                .prop_map(|m| m.into_iter().map(|row| row.into_iter().map(int).collect()).collect())
        })
    }

    proptest! {
        #[test]
        fn nullity_matches_rank(m in arb_matrix()) {
            let cols = m[0].len();
            let ns = nullspace(&m, cols);
            prop_assert_eq!(rank(&m), rank_oracle(&m));
            prop_assert_eq!(ns.len(), cols - rank_oracle(&m));
            for v in &ns {
                prop_assert!(apply(&m, v).iter().all(|x| *x == int(0)));
            }
        }
    }
}
