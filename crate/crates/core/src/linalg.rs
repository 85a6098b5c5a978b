//! Exact linear algebra on the small dense matrices used throughout
//! (n <= 4 in practice): rational Gauss-Jordan and integer adjugates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn identity(n: usize) -> RatMatrix {
    (0..n)
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
        .collect()
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![BigRational::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &RatMatrix, v: &[BigRational]) -> Vec<BigRational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn transpose(a: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let m = a[0].len();
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn det(a: &RatMatrix) -> BigRational {
    let mut m = a.to_vec();
    let n = m.len();
    let mut sign = BigRational::one();
    let mut result = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            sign = -sign;
        }
        let p = m[col][col].clone();
        result *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    result * sign
}

/// Solves A x = b for square A; `SingularBasis` when A is singular.
pub fn solve(a: &RatMatrix, b: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::SingularBasis)?;
        m.swap(pivot, col);
        let p = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=n {
                    let sub = &factor * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

pub fn inverse(a: &RatMatrix) -> Result<RatMatrix> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        cols.push(solve(a, &e)?);
    }
    Ok(transpose(&cols))
}

// ---------------------------------------------------------------------------
// Integer matrices (i64 entries, i128 intermediates)

pub type IntMatrix = Vec<Vec<i64>>;

pub fn int_identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn int_mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc: i128 = 0;
            for l in 0..k {
                acc += a[i][l] as i128 * b[l][j] as i128;
            }
            out[i][j] = i64::try_from(acc).expect("integer matrix entry overflow");
        }
    }
    out
}

pub fn int_mat_vec(a: &IntMatrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| {
            let acc: i128 = row.iter().zip(v).map(|(&x, &y)| x as i128 * y as i128).sum();
            i64::try_from(acc).expect("integer vector entry overflow")
        })
        .collect()
}

pub fn int_transpose(a: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = a[0].len();
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

pub fn int_det(a: &IntMatrix) -> i128 {
    match a.len() {
        0 => 1,
        1 => a[0][0] as i128,
        2 => a[0][0] as i128 * a[1][1] as i128 - a[0][1] as i128 * a[1][0] as i128,
        3 => {
            let m = |i: usize, j: usize| a[i][j] as i128;
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        }
        _ => {
            // cofactor expansion along the first row
            let n = a.len();
            let mut acc: i128 = 0;
            for j in 0..n {
                if a[0][j] == 0 {
                    continue;
                }
                let minor: IntMatrix = (1..n)
                    .map(|r| (0..n).filter(|&c| c != j).map(|c| a[r][c]).collect())
                    .collect();
                let term = a[0][j] as i128 * int_det(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Inverse of a matrix with determinant +-1, via the adjugate; stays integral.
pub fn unimodular_inverse(a: &IntMatrix) -> Result<IntMatrix> {
    let n = a.len();
    let d = int_det(a);
    if d != 1 && d != -1 {
        return Err(Error::NotUnimodular);
    }
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: IntMatrix = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| a[r][c]).collect())
                .collect();
            let cof = int_det(&minor) * if (i + j) % 2 == 0 { 1 } else { -1 };
            // adjugate transposes the cofactor matrix
            adj[j][i] = i64::try_from(cof * d).expect("adjugate overflow");
        }
    }
    Ok(adj)
}

pub fn int_to_rat_matrix(a: &IntMatrix) -> RatMatrix {
    a.iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect()
}

pub fn rat_is_integer_matrix(a: &RatMatrix) -> bool {
    a.iter().flatten().all(|x| x.is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn solve_and_inverse() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(5), rat(3)]];
        let x = solve(&a, &[rat(4), rat(11)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert_eq!(det(&a), rat(1));
    }

    #[test]
    fn singular_detected() {
        let a = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert!(solve(&a, &[rat(1), rat(1)]).is_err());
        assert_eq!(det(&a), rat(0));
    }

    #[test]
    fn rational_det_with_fractions() {
        let a = vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(1, 5), ratio(1, 7)]];
        assert_eq!(det(&a), ratio(1, 14) - ratio(1, 15));
    }

    #[test]
    fn unimodular_inverse_round_trips() {
        let a = vec![vec![2, 1, 0], vec![1, 1, 0], vec![3, 0, 1]];
        let inv = unimodular_inverse(&a).unwrap();
        assert_eq!(int_mat_mul(&a, &inv), int_identity(3));
        let bad = vec![vec![2, 0], vec![0, 1]];
        assert!(unimodular_inverse(&bad).is_err());
    }
}
