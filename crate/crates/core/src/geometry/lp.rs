//! Exact phase-one simplex used to decide whether a finite set of vectors
//! positively spans the whole space.

use num_traits::{One, Signed, Zero};

use super::linalg::{dot, null_vector, rank};
use super::Rational;

/// Returns a non-zero `n` with `n . p <= 0` for every input vector `p`, or
/// `None` when the vectors positively span `R^dim` (no such `n` exists).
///
/// When the vectors span a proper subspace, `n` is orthogonal to all of them.
/// Otherwise the question is the infeasibility of
/// `sum mu_j p_j = -sum p_j, mu >= 0` (a strictly positive combination
/// summing to zero), and `n` is read off the optimal phase-one duals.
pub fn cone_separator(vectors: &[Vec<Rational>], dim: usize) -> Option<Vec<Rational>> {
    if dim == 0 {
        return None;
    }
    if rank(vectors, dim) < dim {
        return null_vector(vectors, dim);
    }
    let n_cols = vectors.len();
    let width = n_cols + dim + 1;
    let rhs_col = width - 1;

    let mut target = vec![Rational::zero(); dim];
    for v in vectors {
        for (t, x) in target.iter_mut().zip(v) {
            *t -= x;
        }
    }

    // Row i: s_i * (sum_j p_j[i] mu_j) + a_i = s_i * target[i], s_i chosen so
    // the right-hand side is non-negative.
    let mut row_sign = vec![Rational::one(); dim];
    let mut tableau = vec![vec![Rational::zero(); width]; dim];
    for i in 0..dim {
        if target[i].is_negative() {
            row_sign[i] = -Rational::one();
        }
        for (j, v) in vectors.iter().enumerate() {
            tableau[i][j] = &row_sign[i] * &v[i];
        }
        tableau[i][n_cols + i] = Rational::one();
        tableau[i][rhs_col] = &row_sign[i] * &target[i];
    }
    // Phase-one costs: 1 on artificials.
    let cost = |col: usize| -> Rational {
        if col >= n_cols && col < n_cols + dim {
            Rational::one()
        } else {
            Rational::zero()
        }
    };
    let mut basis: Vec<usize> = (n_cols..n_cols + dim).collect();

    loop {
        // Bland's rule: lowest-index column with negative reduced cost.
        let entering = (0..n_cols + dim).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut reduced = cost(j);
            for (i, &b) in basis.iter().enumerate() {
                reduced -= cost(b) * &tableau[i][j];
            }
            reduced.is_negative()
        });
        let Some(col) = entering else { break };

        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..dim {
            if tableau[i][col].is_positive() {
                let ratio = &tableau[i][rhs_col] / &tableau[i][col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so some row always limits.
        let (row, _) = leave.expect("phase-one simplex is bounded");
        pivot(&mut tableau, row, col);
        basis[row] = col;
    }

    let objective = basis
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (i, &b)| acc + cost(b) * &tableau[i][rhs_col]);
    if objective.is_zero() {
        return None;
    }

    // Duals y = c_B^T B^{-1}; B^{-1} sits under the artificial columns.
    let normal: Vec<Rational> = (0..dim)
        .map(|k| {
            let y = basis
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (i, &b)| {
                    acc + cost(b) * &tableau[i][n_cols + k]
                });
            y * &row_sign[k]
        })
        .collect();
    debug_assert!(vectors.iter().all(|p| !dot(&normal, p).is_positive()));
    debug_assert!(dot(&normal, &target).is_positive());
    Some(normal)
}

fn pivot(tableau: &mut [Vec<Rational>], row: usize, col: usize) {
    let inv = tableau[row][col].recip();
    for x in tableau[row].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = tableau[row].clone();
    for (i, r) in tableau.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let factor = r[col].clone();
        for (x, p) in r.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    fn check(vectors: &[Vec<Rational>], n: &[Rational]) {
        assert!(n.iter().any(|x| !x.is_zero()));
        for p in vectors {
            assert!(!dot(n, p).is_positive());
        }
    }

    #[test]
    fn positively_spanning_sets_have_no_separator() {
        let square = vec![v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])];
        assert!(cone_separator(&square, 2).is_none());
        let tri = vec![v(&[1, 0]), v(&[-1, 1]), v(&[-1, -1])];
        assert!(cone_separator(&tri, 2).is_none());
        let line = vec![v(&[3]), v(&[-2])];
        assert!(cone_separator(&line, 1).is_none());
    }

    #[test]
    fn pointed_cones_get_a_separator() {
        let quadrant = vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        check(&quadrant, &cone_separator(&quadrant, 2).unwrap());
        let halfplane = vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, -1]), v(&[5, -2])];
        let n = cone_separator(&halfplane, 2).unwrap();
        check(&halfplane, &n);
        let octant = vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[-1, 2, 2])];
        check(&octant, &cone_separator(&octant, 3).unwrap());
    }

    #[test]
    fn degenerate_sets_use_the_orthogonal_complement() {
        let flat = vec![v(&[1, 1, 0]), v(&[-1, -1, 0]), v(&[2, 0, 0]), v(&[-2, 0, 0])];
        let n = cone_separator(&flat, 3).unwrap();
        for p in &flat {
            assert!(dot(&n, p).is_zero());
        }
        assert!(cone_separator(&[], 2).is_some());
        assert!(cone_separator(&[], 0).is_none());
    }
}
