//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.
//!
//! Sweeps rotate away off-diagonal entries in a fixed row-major order
//! until the off-diagonal Frobenius norm drops below
//! `1e-12 * (1 + ||A||_F)`. Deterministic: no pivot selection, no
//! randomization. Adequate and unconditionally stable at the orders this
//! crate works with.

/// Eigenvalues of a symmetric matrix (row-major, `n x n`), sorted
/// non-increasing, together with the convergence threshold reached,
/// which bounds the absolute eigenvalue error.
pub fn symmetric_eigenvalues(matrix: &[f64], n: usize) -> (Vec<f64>, f64) {
    debug_assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = 1e-12 * (1.0 + frob);

    let mut sweeps = 0;
    while off_diagonal_norm(&a, n) > threshold {
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        // Quadratic convergence makes this unreachable for symmetric
        // input; guard against NaN poisoning from bad callers.
        assert!(sweeps < 100, "Jacobi iteration failed to converge");
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.partial_cmp(x).unwrap());
    (values, threshold)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sum.sqrt()
}

/// One Jacobi rotation annihilating a[p][q], applied symmetrically.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    // Stable tangent of the rotation angle: the smaller root of
    // t^2 + 2 t theta - 1 = 0.
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    let app = a[p * n + p];
    let aqq = a[q * n + q];
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r != p && r != q {
            let arp = a[r * n + p];
            let arq = a[r * n + q];
            a[r * n + p] = arp - s * (arq + tau * arp);
            a[p * n + r] = a[r * n + p];
            a[r * n + q] = arq + s * (arp - tau * arq);
            a[q * n + r] = a[r * n + q];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_passthrough() {
        let m = [3.0, 0.0, 0.0, 1.0];
        let (vals, _) = symmetric_eigenvalues(&m, 2);
        assert_eq!(vals, vec![3.0, 1.0]);
    }

    #[test]
    fn two_by_two() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1.
        let m = [2.0, 1.0, 1.0, 2.0];
        let (vals, tol) = symmetric_eigenvalues(&m, 2);
        assert!((vals[0] - 3.0).abs() < 1e-10 && (vals[1] - 1.0).abs() < 1e-10);
        assert!(tol < 1e-10);
    }

    #[test]
    fn trace_preserved() {
        let m = [4.0, 1.0, 2.0, 1.0, 3.0, 0.5, 2.0, 0.5, 1.0];
        let (vals, _) = symmetric_eigenvalues(&m, 3);
        let trace: f64 = vals.iter().sum();
        assert!((trace - 8.0).abs() < 1e-9);
        assert!(vals[0] >= vals[1] && vals[1] >= vals[2]);
    }

    #[test]
    fn empty_and_single() {
        let (vals, _) = symmetric_eigenvalues(&[5.0], 1);
        assert_eq!(vals, vec![5.0]);
    }
}
