//! Small dense solves used by the corner-subset enumeration.

use alloc::vec::Vec;

/// Solves `m · x = rhs` for a square row-major `m` of side `n` by Gaussian
/// elimination with partial pivoting. Returns `None` when a pivot falls
/// below `1e-13` times the largest entry.
pub(crate) fn solve(mut m: Vec<f64>, mut rhs: Vec<f64>, n: usize) -> Option<Vec<f64>> {
    debug_assert_eq!(m.len(), n * n);
    debug_assert_eq!(rhs.len(), n);
    let scale = m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return None;
    }
    let eps = 1e-13 * scale;
    for col in 0..n {
        let (pivot, best) = (col..n)
            .map(|r| (r, m[r * n + col].abs()))
            .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= eps {
            return None;
        }
        if pivot != col {
            for k in 0..n {
                m.swap(col * n + k, pivot * n + k);
            }
            rhs.swap(col, pivot);
        }
        let inv = 1.0 / m[col * n + col];
        for r in col + 1..n {
            let f = m[r * n + col] * inv;
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                m[r * n + k] -= f * m[col * n + k];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    let mut x = alloc::vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for k in row + 1..n {
            acc -= m[row * n + k] * x[k];
        }
        x[row] = acc / m[row * n + row];
    }
    Some(x)
}

/// Least-squares solution of an overdetermined `rows × cols` system via the
/// normal equations.
pub(crate) fn least_squares(a: &[f64], y: &[f64], rows: usize, cols: usize) -> Option<Vec<f64>> {
    let mut ata = alloc::vec![0.0; cols * cols];
    let mut aty = alloc::vec![0.0; cols];
    for i in 0..cols {
        for j in 0..cols {
            ata[i * cols + j] = (0..rows).map(|r| a[r * cols + i] * a[r * cols + j]).sum();
        }
        aty[i] = (0..rows).map(|r| a[r * cols + i] * y[r]).sum();
    }
    solve(ata, aty, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn solves_pivoted_system() {
        let x = solve(vec![0.0, 2.0, 1.0, 1.0], vec![4.0, 3.0], 2).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-15 && (x[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn singular_is_none() {
        assert!(solve(vec![1.0, 2.0, 2.0, 4.0], vec![1.0, 2.0], 2).is_none());
    }

    #[test]
    fn least_squares_consistent_system() {
        // rows: x = 1, y = 2, x + y = 3
        let a = [1.0, 0.0, 0.0, 1.0, 1.0, 1.0];
        let x = least_squares(&a, &[1.0, 2.0, 3.0], 3, 2).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 2.0).abs() < 1e-12);
    }
}
