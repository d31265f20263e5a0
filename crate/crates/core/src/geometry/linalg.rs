//! Exact dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Exact determinant of a square rational matrix.
///
/// Rows are cleared of denominators first, then the integer matrix is reduced
/// with fraction-free (Bareiss) elimination so that no gcd is taken per step.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        debug_assert_eq!(row.len(), n);
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        m.push(
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect(),
        );
        scale *= lcm;
    }
    Rational::new(bareiss(&mut m), scale)
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Reduced row echelon form in place; returns the pivot column of each
/// non-zero row, in order.
pub fn rref(m: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let factor = r[col].clone();
                for (x, p) in r[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rank(vectors: &[Vec<Rational>], dim: usize) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m, dim).len()
}

/// A non-zero vector orthogonal to every input vector, if the inputs do not
/// span the whole space.
pub fn null_vector(vectors: &[Vec<Rational>], dim: usize) -> Option<Vec<Rational>> {
    let mut m = vectors.to_vec();
    let pivots = rref(&mut m, dim);
    let free = (0..dim).find(|c| !pivots.contains(c))?;
    let mut n = vec![Rational::zero(); dim];
    n[free] = Rational::one();
    for (row, &p) in pivots.iter().enumerate() {
        n[p] = -m[row][free].clone();
    }
    Some(n)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|row| row.iter().map(|&x| r(x, 1)).collect())
            .collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&ints(&[&[2, 0], &[0, 3]])), r(6, 1));
        assert_eq!(determinant(&ints(&[&[0, 1], &[1, 0]])), r(-1, 1));
        assert_eq!(determinant(&ints(&[&[1, 2], &[2, 4]])), r(0, 1));
        assert_eq!(
            determinant(&ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            r(4, 1)
        );
        assert_eq!(determinant(&[]), r(1, 1));
    }

    #[test]
    fn determinant_with_fractions() {
        let m = vec![vec![r(1, 2), r(1, 3)], vec![r(1, 5), r(1, 7)]];
        // 1/14 - 1/15 = 1/210
        assert_eq!(determinant(&m), r(1, 210));
    }

    #[test]
    fn null_vector_is_orthogonal() {
        let vs = ints(&[&[1, 2, 3], &[0, 1, 1]]);
        let n = null_vector(&vs, 3).unwrap();
        assert!(n.iter().any(|x| !x.is_zero()));
        for v in &vs {
            assert!(dot(v, &n).is_zero());
        }
        assert!(null_vector(&ints(&[&[1, 0], &[0, 1]]), 2).is_none());
        assert_eq!(rank(&ints(&[&[1, 1], &[2, 2]]), 2), 1);
    }
}
