//! Maximal-spin one-hole multiplet.
//!
//! The site matrix of the member with `l` down spins on `N` sites is
//! diagonal with weights `(1/N, 0, 1 - (l+1)/N, l/N)`. The long-quoted
//! closed form `(8(l+1)/3N)(1 - l/N)` for its mixedness is larger than what
//! those weights give by exactly `8/(3N^2)`; both are exposed so callers can
//! see which one they are using.

use crate::scalar::Real;

use super::params::NagaokaParams;

/// Mixedness of one multiplet member, evaluated two ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NagaokaEpsilon<T> {
    /// From the site-matrix weights. This is the correct value.
    pub direct: T,
    /// The published closed form `(8(l+1)/3N)(1 - l/N)`.
    pub paper_form: T,
}

/// Site-matrix weights in (hole, double, up, down) order.
pub fn nagaoka_eigenvalues<T: Real>(params: &NagaokaParams) -> [T; 4] {
    let n = T::from_usize_exact(params.sites());
    let l = T::from_usize_exact(params.down());
    [
        T::one() / n,
        T::zero(),
        T::one() - (l + T::one()) / n,
        l / n,
    ]
}

pub fn nagaoka_epsilon<T: Real>(params: &NagaokaParams) -> NagaokaEpsilon<T> {
    let purity = nagaoka_eigenvalues::<T>(params)
        .iter()
        .fold(T::zero(), |acc, p| acc + *p * *p);
    let direct = T::lit(4.0 / 3.0) * (T::one() - purity);
    let n = T::from_usize_exact(params.sites());
    let l = T::from_usize_exact(params.down());
    let paper_form = T::lit(8.0) * (l + T::one()) / (T::lit(3.0) * n) * (T::one() - l / n);
    NagaokaEpsilon { direct, paper_form }
}

/// `paper_form - direct`, which is `8/(3N^2)` for every `l`.
pub fn nagaoka_discrepancy<T: Real>(sites: usize) -> T {
    let n = T::from_usize_exact(sites);
    T::lit(8.0) / (T::lit(3.0) * n * n)
}

/// Integer `l` maximizing the direct mixedness (smallest on ties) together
/// with that maximum.
pub fn nagaoka_max<T: Real>(sites: usize) -> Option<(usize, T)> {
    let mut best: Option<(usize, T)> = None;
    for l in 0..sites.checked_sub(1)? + 1 {
        let p = NagaokaParams::new(sites, l).ok()?;
        let e = nagaoka_epsilon::<T>(&p).direct;
        if best.is_none_or(|(_, b)| e > b) {
            best = Some((l, e));
        }
    }
    best
}

/// The published maximum `(2/3)(1 + 1/N)^2`.
pub fn nagaoka_paper_max<T: Real>(sites: usize) -> T {
    let r = T::one() + T::one() / T::from_usize_exact(sites);
    T::lit(2.0 / 3.0) * r * r
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn two_sites_no_down_spin() {
        let p = NagaokaParams::new(2, 0).unwrap();
        let e = nagaoka_epsilon::<f64>(&p);
        assert_abs_diff_eq!(e.direct, 2.0 / 3.0, epsilon = 1e-15);
        assert_eq!(nagaoka_eigenvalues::<f64>(&p), [0.5, 0.0, 0.5, 0.0]);
    }

    #[test]
    fn discrepancy_is_constant_in_l() {
        for n in 2..=64usize {
            let gap = nagaoka_discrepancy::<f64>(n);
            for l in 0..n {
                let e = nagaoka_epsilon::<f64>(&NagaokaParams::new(n, l).unwrap());
                assert_abs_diff_eq!(e.paper_form - e.direct, gap, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn paper_max_is_paper_form_at_half_integer_l() {
        // (8(l+1)/3N)(1 - l/N) at l = (N-1)/2 reduces to (2/3)(1+1/N)^2
        for n in [3usize, 5, 9, 21] {
            let l = (n - 1) / 2;
            let e = nagaoka_epsilon::<f64>(&NagaokaParams::new(n, l).unwrap());
            assert_abs_diff_eq!(e.paper_form, nagaoka_paper_max::<f64>(n), epsilon = 1e-14);
        }
    }

    #[test]
    fn direct_max_location() {
        assert_eq!(nagaoka_max::<f64>(5).unwrap().0, 2);
        let (l, _) = nagaoka_max::<f64>(6).unwrap();
        assert!(l == 2 || l == 3);
        assert!(nagaoka_max::<f64>(0).is_none());
    }

    #[test]
    fn large_lattice_limit_is_spin_only_ceiling() {
        let n = 100_000;
        let e = nagaoka_epsilon::<f64>(&NagaokaParams::new(n, n / 2).unwrap());
        assert_abs_diff_eq!(e.direct, 2.0 / 3.0, epsilon = 1e-4);
    }
}
