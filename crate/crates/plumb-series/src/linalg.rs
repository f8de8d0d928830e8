//! Exact integer/rational linear algebra on small dense matrices.
//!
//! Everything here is sized for plumbing graphs (tens of vertices): exact
//! determinants of the leading principal blocks, a rational matrix inverse,
//! and Smith normal form invariant factors. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant of one square integer matrix via fraction-free elimination
/// with row pivoting (Bareiss). Exact for any input.
fn determinant(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact division (Bareiss invariant)
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Determinants of all leading principal submatrices, `1x1` up to `n x n`.
pub fn leading_principal_minors(mat: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = mat.len();
    (1..=n)
        .map(|k| {
            let block: Vec<Vec<BigInt>> =
                mat[..k].iter().map(|row| row[..k].to_vec()).collect();
            determinant(&block)
        })
        .collect()
}

/// Checks negative definiteness through minor signs: the k-th leading
/// principal minor must have sign `(-1)^k`. Returns the first violating
/// index (1-based) if any.
pub fn negative_definite_witness(minors: &[BigInt]) -> Option<usize> {
    for (i, minor) in minors.iter().enumerate() {
        let k = i + 1;
        let ok = if k % 2 == 1 {
            minor.is_negative()
        } else {
            minor.is_positive()
        };
        if !ok {
            return Some(k);
        }
    }
    None
}

/// Exact inverse of a nonsingular integer matrix (Gauss-Jordan over the
/// rationals with partial pivoting). Panics on singular input; callers check
/// the determinant first.
pub fn invert(mat: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = mat.len();
    let mut a: Vec<Vec<BigRational>> = mat
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .expect("matrix is singular");
        a.swap(k, pivot_row);
        inv.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for j in 0..n {
            a[k][j] /= pivot.clone();
            inv[k][j] /= pivot.clone();
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..n {
                let s = &factor * &a[k][j];
                a[i][j] -= s;
                let s = &factor * &inv[k][j];
                inv[i][j] -= s;
            }
        }
    }
    inv
}

/// Smith normal form invariant factors of an integer matrix, normalized
/// positive and in divisibility order `d1 | d2 | ...`. Zero rows/columns of
/// the diagonal produce trailing zeros (cannot happen for nonsingular
/// input).
pub fn smith_invariant_factors(mat: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let n = rows.min(cols);

    for t in 0..n {
        loop {
            // Find the entry of smallest nonzero magnitude in the remaining
            // block and move it to the (t, t) corner.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => a[i][j].abs() < a[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break; // the rest of the block is zero
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }

            // Reduce the pivot row and column.
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = div_round(&a[i][t], &a[t][t]);
                    for j in t..cols {
                        let s = &q * &a[t][j];
                        a[i][j] -= s;
                    }
                    dirty = dirty || !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = div_round(&a[t][j], &a[t][t]);
                    for row in a.iter_mut().take(rows).skip(t) {
                        let s = &q * &row[t];
                        row[j] -= s;
                    }
                    dirty = dirty || !a[t][j].is_zero();
                }
            }
            if dirty {
                continue; // remainders became new, smaller pivot candidates
            }

            // Pivot row/column are clear. Enforce divisibility: the pivot
            // must divide every remaining entry, else fold the offender in.
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let add = a[i][j].clone();
                        a[t][j] += add;
                    }
                }
                None => break,
            }
        }
    }

    (0..n).map(|t| a[t][t].abs()).collect()
}

/// Rounded division used by the Smith reduction (quotient minimizing the
/// remainder magnitude).
fn div_round(num: &BigInt, den: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_rem(num, den);
    if &r.abs() * &two > den.abs() {
        if (r.is_negative()) == (den.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(mat: &[&[i64]]) -> Vec<Vec<BigInt>> {
        mat.iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn minors_of_chain_of_minus_twos() {
        // Chain of k vertices all with weight -2 has determinant (-1)^k (k+1).
        let m = big(&[
            &[-2, 1, 0],
            &[1, -2, 1],
            &[0, 1, -2],
        ]);
        let minors = leading_principal_minors(&m);
        assert_eq!(minors, vec![BigInt::from(-2), BigInt::from(3), BigInt::from(-4)]);
        assert_eq!(negative_definite_witness(&minors), None);
    }

    #[test]
    fn positive_weight_is_flagged() {
        let m = big(&[&[1]]);
        let minors = leading_principal_minors(&m);
        assert_eq!(negative_definite_witness(&minors), Some(1));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = vec![vec![-2i64, 1, 0], vec![1, -2, 1], vec![0, 1, -2]];
        let inv = invert(&m);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = BigRational::zero();
                for (k, inv_row) in inv.iter().enumerate() {
                    acc += BigRational::from_integer(BigInt::from(m[i][k])) * &inv_row[j];
                }
                let expect = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(acc, expect);
            }
        }
    }

    #[test]
    fn smith_factors_of_diagonalizable_forms() {
        // det 12 chain-with-branches form: invariant factor 12 (cyclic).
        let m = big(&[
            &[-2, 1, 0, 0, 0, 0],
            &[1, -2, 1, 0, 1, 0],
            &[0, 1, -2, 1, 0, 1],
            &[0, 0, 1, -2, 0, 0],
            &[0, 1, 0, 0, -2, 0],
            &[0, 0, 1, 0, 0, -5],
        ]);
        let f = smith_invariant_factors(&m);
        let nontrivial: Vec<_> = f.iter().filter(|x| **x > BigInt::one()).collect();
        assert_eq!(nontrivial, vec![&BigInt::from(12)]);

        // 4-star of -2's: Z/2 + Z/2.
        let m = big(&[
            &[-2, 1, 1, 1],
            &[1, -2, 0, 0],
            &[1, 0, -2, 0],
            &[1, 0, 0, -2],
        ]);
        let f = smith_invariant_factors(&m);
        let nontrivial: Vec<_> = f.into_iter().filter(|x| *x > BigInt::one()).collect();
        assert_eq!(nontrivial, vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn smith_factors_divisibility_chain() {
        let m = big(&[&[2, 0], &[0, 3]]);
        let f = smith_invariant_factors(&m);
        assert_eq!(f, vec![BigInt::one(), BigInt::from(6)]);
    }
}
