//! Small dense linear algebra: enough for 4x4 density matrices and the
//! Slater determinants of the checker. Everything here is O(n^3) on tiny
//! matrices, so plain cyclic Jacobi and partial-pivot LU are used.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::Real;

/// Dense 4x4 complex matrix, row-major.
pub type CMat4<T> = [[Complex<T>; 4]; 4];

pub fn cmat4_zero<T: Real>() -> CMat4<T> {
    [[Complex::zero(); 4]; 4]
}

pub fn cmat4_mul<T: Real>(a: &CMat4<T>, b: &CMat4<T>) -> CMat4<T> {
    let mut out = cmat4_zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Complex::zero();
            for k in 0..4 {
                acc = acc + a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Eigen-decomposition of a real symmetric matrix (row-major, `n x n`).
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as the columns of a row-major matrix.
pub fn symmetric_eigen<T: Real>(matrix: &[T], n: usize) -> (Vec<T>, Vec<T>) {
    assert_eq!(matrix.len(), n * n, "matrix must be n x n");
    let mut a = matrix.to_vec();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }

    let scale = a.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let threshold = scale * T::epsilon() * T::lit(0.25);
    for _sweep in 0..100 {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[p * n + q].abs());
            }
        }
        if off <= threshold || off.is_zero() {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.is_zero() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (T::lit(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i * n + i]
            .partial_cmp(&a[j * n + j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![T::zero(); n * n];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col] = v[row * n + src];
        }
    }
    (values, vectors)
}

/// Real symmetric embedding `[[Re, -Im], [Im, Re]]` of a Hermitian matrix.
/// Its spectrum is the Hermitian spectrum with every eigenvalue doubled.
fn real_embedding<T: Real>(h: &CMat4<T>) -> Vec<T> {
    let n = 8;
    let mut m = vec![T::zero(); n * n];
    for i in 0..4 {
        for j in 0..4 {
            // symmetrize against roundoff in the input
            let z = (h[i][j] + h[j][i].conj()) * T::lit(0.5);
            m[i * n + j] = z.re;
            m[i * n + (j + 4)] = -z.im;
            m[(i + 4) * n + j] = z.im;
            m[(i + 4) * n + (j + 4)] = z.re;
        }
    }
    m
}

/// Ascending eigenvalues of a 4x4 Hermitian matrix.
pub fn hermitian_eigenvalues<T: Real>(h: &CMat4<T>) -> [T; 4] {
    let (values, _) = symmetric_eigen(&real_embedding(h), 8);
    // eigenvalues arrive in degenerate pairs
    [
        (values[0] + values[1]) * T::lit(0.5),
        (values[2] + values[3]) * T::lit(0.5),
        (values[4] + values[5]) * T::lit(0.5),
        (values[6] + values[7]) * T::lit(0.5),
    ]
}

/// Applies `f` to the spectrum of a 4x4 Hermitian matrix.
pub fn hermitian_function<T: Real>(h: &CMat4<T>, f: impl Fn(T) -> T) -> CMat4<T> {
    let n = 8;
    let (values, vectors) = symmetric_eigen(&real_embedding(h), n);
    let mut out = vec![T::zero(); n * n];
    for (k, &lambda) in values.iter().enumerate() {
        let fk = f(lambda);
        for i in 0..n {
            let vik = vectors[i * n + k] * fk;
            for j in 0..n {
                out[i * n + j] = out[i * n + j] + vik * vectors[j * n + k];
            }
        }
    }
    let mut result = cmat4_zero();
    for i in 0..4 {
        for j in 0..4 {
            result[i][j] = Complex::new(out[i * n + j], out[(i + 4) * n + j]);
        }
    }
    result
}

/// Determinant of a square complex matrix (row-major) by LU with partial pivoting.
pub fn complex_determinant<T: Real>(matrix: &[Complex<T>], n: usize) -> Complex<T> {
    assert_eq!(matrix.len(), n * n, "matrix must be n x n");
    if n == 0 {
        return Complex::one();
    }
    let mut a = matrix.to_vec();
    let mut det = Complex::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                a[i * n + col]
                    .norm()
                    .partial_cmp(&a[j * n + col].norm())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("non-empty range");
        if a[pivot * n + col].is_zero() {
            return Complex::zero();
        }
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det = det * p;
        for row in (col + 1)..n {
            let factor = a[row * n + col] / p;
            if factor.is_zero() {
                continue;
            }
            for k in col..n {
                let upd = a[col * n + k] * factor;
                a[row * n + k] = a[row * n + k] - upd;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn jacobi_diagonalizes_symmetric() {
        let m = [4.0, 1.0, 0.5, 1.0, 3.0, 0.2, 0.5, 0.2, 1.0];
        let (vals, vecs) = symmetric_eigen(&m, 3);
        for k in 0..3 {
            for i in 0..3 {
                let mv: f64 = (0..3).map(|j| m[i * 3 + j] * vecs[j * 3 + k]).sum();
                assert_abs_diff_eq!(mv, vals[k] * vecs[i * 3 + k], epsilon = 1e-12);
            }
        }
        assert!(vals[0] <= vals[1] && vals[1] <= vals[2]);
        let trace: f64 = vals.iter().sum();
        assert_abs_diff_eq!(trace, 8.0, epsilon = 1e-12);
    }

    #[test]
    fn hermitian_spectrum_of_pauli_y_block() {
        let mut h = cmat4_zero::<f64>();
        h[0][1] = c(0.0, -1.0);
        h[1][0] = c(0.0, 1.0);
        h[2][2] = c(2.0, 0.0);
        h[3][3] = c(-3.0, 0.0);
        let ev = hermitian_eigenvalues(&h);
        let expected = [-3.0, -1.0, 1.0, 2.0];
        for (a, b) in ev.iter().zip(expected) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn hermitian_square_root_squares_back() {
        let mut h = cmat4_zero::<f64>();
        h[0][0] = c(0.4, 0.0);
        h[1][1] = c(0.3, 0.0);
        h[2][2] = c(0.2, 0.0);
        h[3][3] = c(0.1, 0.0);
        h[0][1] = c(0.1, 0.05);
        h[1][0] = c(0.1, -0.05);
        let s = hermitian_function(&h, |x| x.max(0.0).sqrt());
        let back = cmat4_mul(&s, &s);
        for i in 0..4 {
            for j in 0..4 {
                assert_abs_diff_eq!(back[i][j].re, h[i][j].re, epsilon = 1e-12);
                assert_abs_diff_eq!(back[i][j].im, h[i][j].im, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = [c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0), c(3.0, 0.5)];
        let expected = m[0] * m[3] - m[1] * m[2];
        let det = complex_determinant(&m, 2);
        assert_abs_diff_eq!(det.re, expected.re, epsilon = 1e-14);
        assert_abs_diff_eq!(det.im, expected.im, epsilon = 1e-14);
        assert_eq!(complex_determinant::<f64>(&[], 0), Complex::one());
    }

    #[test]
    fn determinant_of_permutation_is_signed() {
        let o = c(1.0, 0.0);
        let z = c(0.0, 0.0);
        let swap = [z, o, z, o, z, z, z, z, o];
        assert_abs_diff_eq!(complex_determinant(&swap, 3).re, -1.0, epsilon = 1e-15);
    }
}
