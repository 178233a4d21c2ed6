use num_complex::Complex;

use crate::error::Result;
use crate::fockspace::{LocalState, SiteRdm};
use crate::linalg::{cmat4_mul, cmat4_zero, hermitian_eigenvalues, hermitian_function, CMat4};
use crate::scalar::Real;

/// Closed-form up/down concurrence of the spin-balanced paired site matrix:
/// `2 max(zeta - |n/2 - d|, 0)`.
pub fn concurrence_x<T: Real>(n: T, d: T, zeta: T) -> T {
    let c = zeta - (n * T::lit(0.5) - d).abs();
    T::lit(2.0) * c.max(T::zero())
}

/// Site basis reordered as two-qubit states `|up-qubit, down-qubit>` in the
/// order |00>, |01>, |10>, |11>.
const QUBIT_ORDER: [LocalState; 4] = [
    LocalState::Hole,
    LocalState::Down,
    LocalState::Up,
    LocalState::Double,
];

/// Wootters concurrence of a site matrix read as a state of an up-spin
/// qubit and a down-spin qubit.
///
/// `C = max(0, l1 - l2 - l3 - l4)` where the `l` are the decreasing square
/// roots of the eigenvalues of `sqrt(rho) rho~ sqrt(rho)` and
/// `rho~ = (Y x Y) rho* (Y x Y)`.
pub fn wootters_concurrence<T: Real>(rdm: &SiteRdm<T>) -> Result<T> {
    rdm.validate()?;
    let mut rho: CMat4<T> = cmat4_zero();
    for (i, a) in QUBIT_ORDER.iter().enumerate() {
        for (j, b) in QUBIT_ORDER.iter().enumerate() {
            rho[i][j] = rdm.get(*a, *b);
        }
    }
    // sigma_y x sigma_y is real: anti-diagonal (-1, 1, 1, -1)
    let mut yy = cmat4_zero::<T>();
    yy[0][3] = Complex::new(-T::one(), T::zero());
    yy[1][2] = Complex::new(T::one(), T::zero());
    yy[2][1] = Complex::new(T::one(), T::zero());
    yy[3][0] = Complex::new(-T::one(), T::zero());
    let mut conj = rho;
    for row in conj.iter_mut() {
        for z in row.iter_mut() {
            *z = z.conj();
        }
    }
    let flipped = cmat4_mul(&cmat4_mul(&yy, &conj), &yy);
    let root = hermitian_function(&rho, |x| x.max(T::zero()).sqrt());
    let r = cmat4_mul(&cmat4_mul(&root, &flipped), &root);
    let mut lambdas = hermitian_eigenvalues(&r).map(|mu| mu.max(T::zero()).sqrt());
    lambdas.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    let c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    Ok(c.max(T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{site_rdm, DensityParams};
    use approx::assert_abs_diff_eq;

    #[test]
    fn closed_form_values() {
        assert_eq!(concurrence_x(1.0, 0.25, 0.0), 0.0);
        assert_abs_diff_eq!(concurrence_x(1.0, 0.34, 0.3), 0.28, epsilon = 1e-15);
        let z = (2f64.sqrt() - 1.0) / 2.0;
        assert_abs_diff_eq!(concurrence_x(1.0, 0.25 + z * z, z), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn bell_state_is_maximal() {
        // (|hole> + |double>)/sqrt2 = (|00> + |11>)/sqrt2
        let mut m = cmat4_zero::<f64>();
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            m[a][b] = Complex::new(0.5, 0.0);
        }
        let r = SiteRdm::new(m).unwrap();
        assert_abs_diff_eq!(wootters_concurrence(&r).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn diagonal_states_are_separable() {
        let r = SiteRdm::from_diagonal([0.4, 0.1, 0.3, 0.2]).unwrap();
        assert_abs_diff_eq!(wootters_concurrence(&r).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn x_state_matches_closed_form() {
        let p = DensityParams::symmetric(1.0, 0.34, 0.3).unwrap();
        let c = wootters_concurrence(&site_rdm(&p).unwrap()).unwrap();
        assert_abs_diff_eq!(c, 0.28, epsilon = 1e-12);
    }
}
