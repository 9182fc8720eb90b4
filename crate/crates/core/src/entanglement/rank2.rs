//! Rank-2 mixtures `rho = p |phi1><phi1| + (1 - p) |phi2><phi2|` with
//!
//! ```text
//! |phi1> =  x1/√2 (|010> - |011>) + x2/√2 (|100> + |101>)
//! |phi2> = -x2/√2 (|010> - |011>) + x1/√2 (|100> + |101>)
//! ```
//!
//! and their characteristic-curve three-tangle.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{cis, cr, Real, C};
use crate::tensor::{DensityMatrix, StateVector};

const FAMILY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rank2Family<T: Real> {
    x1: T,
    x2: T,
    p: T,
}

impl<T: Real> Rank2Family<T> {
    /// `x1` in `[0, 1]`, `p` in `[0, 1]`; `x2 = sqrt(1 - x1²)`.
    pub fn new(x1: T, p: T) -> Result<Self> {
        let slack = T::tol(FAMILY_TOLERANCE);
        if !(x1 >= -slack && x1 <= T::one() + slack) {
            return Err(Error::InvalidParameter(format!("x1 = {x1} outside [0, 1]")));
        }
        if !(p >= -slack && p <= T::one() + slack) {
            return Err(Error::InvalidParameter(format!("p = {p} outside [0, 1]")));
        }
        let x1 = x1.max(T::zero()).min(T::one());
        Ok(Self {
            x1,
            x2: (T::one() - x1 * x1).max(T::zero()).sqrt(),
            p: p.max(T::zero()).min(T::one()),
        })
    }

    /// Builds the family from unnormalized weights `(a1, a2)` on the two
    /// basis patterns; signs are dropped since flipping either one is a local
    /// phase on qubit A.
    pub fn from_weights(a1: T, a2: T, p: T) -> Result<Self> {
        let norm = (a1 * a1 + a2 * a2).sqrt();
        if norm == T::zero() {
            return Err(Error::InvalidParameter("zero weights".into()));
        }
        Self::new(a1.abs() / norm, p)
    }

    pub fn x1(&self) -> T {
        self.x1
    }

    pub fn x2(&self) -> T {
        self.x2
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn with_p(&self, p: T) -> Result<Self> {
        Self::new(self.x1, p)
    }

    /// `(|phi1>, |phi2>)`
    pub fn components(&self) -> (StateVector<T>, StateVector<T>) {
        let h = T::FRAC_1_SQRT_2();
        let pattern = |u: T, v: T| {
            let mut a = vec![C::zero(); 8];
            a[0b010] = cr(u * h);
            a[0b011] = cr(-u * h);
            a[0b100] = cr(v * h);
            a[0b101] = cr(v * h);
            StateVector::normalized(a).expect("unit weights")
        };
        (pattern(self.x1, self.x2), pattern(-self.x2, self.x1))
    }

    pub fn density(&self) -> DensityMatrix<T> {
        let (phi1, phi2) = self.components();
        DensityMatrix::mixture(&[(self.p, phi1), (T::one() - self.p, phi2)])
            .expect("convex combination of orthonormal states")
    }

    /// `(y1, y2)` of `|Z(p, theta)> = sqrt(p)|phi1> - e^{i theta} sqrt(1-p)|phi2>
    /// = y1 (|010> - |011>) + y2 (|100> + |101>)`.
    pub fn superposition_amplitudes(&self, theta: T) -> (C<T>, C<T>) {
        let h = cr(T::FRAC_1_SQRT_2());
        let sp = self.p.sqrt();
        let sq = (T::one() - self.p).sqrt();
        let e = cis(theta);
        let y1 = (cr(sp * self.x1) + e * cr(sq * self.x2)) * h;
        let y2 = (cr(sp * self.x2) - e * cr(sq * self.x1)) * h;
        (y1, y2)
    }

    pub fn superposition(&self, theta: T) -> StateVector<T> {
        let (y1, y2) = self.superposition_amplitudes(theta);
        let mut a = vec![C::zero(); 8];
        a[0b010] = y1;
        a[0b011] = -y1;
        a[0b100] = y2;
        a[0b101] = y2;
        StateVector::normalized(a).expect("nonzero superposition")
    }

    /// Characteristic curve `tau3(Z(p, theta)) = 16 |y1 y2|²`.
    pub fn characteristic(&self, theta: T) -> T {
        let (y1, y2) = self.superposition_amplitudes(theta);
        T::lit(16.0) * (y1 * y2).norm_sqr()
    }

    /// `f(p) = min[tau3(Z(p, 0)), tau3(Z(p, pi))]`, the minimum over all
    /// `theta`: the curve depends on `theta` through `-B cos 2θ - E cos θ`
    /// with `B >= 0`, which is concave in `cos θ`.
    pub fn minimal_characteristic(&self) -> T {
        self.characteristic(T::zero()).min(self.characteristic(T::PI()))
    }

    /// `(p-, p+) = ½ [1 ∓ |x1² - x2²|]`, the zeros of `f`.
    pub fn p_bounds(&self) -> (T, T) {
        let half = T::lit(0.5);
        let gap = (self.x1 * self.x1 - self.x2 * self.x2).abs();
        (half * (T::one() - gap), half * (T::one() + gap))
    }

    /// Convex hull of `f`: `f(p)` outside `[p-, p+]`, zero inside.
    ///
    /// This hull is not an upper bound on the convex roof for this family:
    /// on the two-dimensional range of `rho` the pure-state tangle is
    /// `1 - w²` (with `w` the Bloch component along `|phi1>`-`|phi2>` rotated
    /// onto the basis patterns), whose convex roof is
    /// `4 x1² x2² (2p - 1)²`. The two agree at `p ∈ {0, 1}`.
    pub fn three_tangle(&self) -> T {
        let (lo, hi) = self.p_bounds();
        if self.p >= lo && self.p <= hi {
            T::zero()
        } else {
            self.minimal_characteristic()
        }
    }

    /// `4 x1² x2²`, the tangle of either component.
    pub fn endpoint_tangle(&self) -> T {
        T::lit(4.0) * self.x1 * self.x1 * self.x2 * self.x2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::three_tangle_pure;
    use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

    fn fam(x1: f64, p: f64) -> Rank2Family<f64> {
        Rank2Family::new(x1, p).unwrap()
    }

    /// Expanded polynomial form of the characteristic curve.
    fn expanded(x1: f64, p: f64, theta: f64) -> f64 {
        let x2 = (1.0 - x1 * x1).sqrt();
        let q = 1.0 - p;
        4.0 * ((p * p + q * q - 2.0 * p * q * (2.0 * theta).cos()) * x1 * x1 * x2 * x2
            + p * q * (x1 * x1 - x2 * x2).powi(2)
            - 2.0 * (p * q).sqrt() * (2.0 * p - 1.0) * x1 * x2 * (x1 * x1 - x2 * x2) * theta.cos())
    }

    #[test]
    fn components_have_endpoint_tangle() {
        for x1 in [0.0, 0.3, 0.6, FRAC_1_SQRT_2, 1.0] {
            let f = fam(x1, 0.5);
            let (phi1, phi2) = f.components();
            assert!((three_tangle_pure(&phi1).unwrap() - f.endpoint_tangle()).abs() < 1e-14);
            assert!((three_tangle_pure(&phi2).unwrap() - f.endpoint_tangle()).abs() < 1e-14);
            assert!(phi1.inner(&phi2).norm() < 1e-15);
        }
    }

    #[test]
    fn endpoints_of_p() {
        for x1 in [0.1, 0.3, 0.8] {
            for theta in [0.0, 0.9, PI, 4.0] {
                for p in [0.0, 1.0] {
                    let f = fam(x1, p);
                    assert!((f.characteristic(theta) - f.endpoint_tangle()).abs() < 1e-14);
                }
            }
            assert!((fam(x1, 1.0).minimal_characteristic() - fam(x1, 1.0).endpoint_tangle()).abs() < 1e-14);
            assert!((fam(x1, 1.0).three_tangle() - fam(x1, 1.0).endpoint_tangle()).abs() < 1e-14);
        }
    }

    #[test]
    fn closed_form_matches_expansion_and_pure_tangle() {
        for x1 in [0.05, 0.3, 0.55, 0.8, 0.99] {
            for p in [0.0, 0.13, 0.5, 0.77, 1.0] {
                for k in 0..32 {
                    let theta = k as f64 * 0.2;
                    let f = fam(x1, p);
                    let closed = f.characteristic(theta);
                    assert!((closed - expanded(x1, p, theta)).abs() < 1e-12);
                    let z = f.superposition(theta);
                    let (y1, y2) = f.superposition_amplitudes(theta);
                    let norm_sq = 2.0 * (y1.norm_sqr() + y2.norm_sqr());
                    let pure = three_tangle_pure(&z).unwrap() * norm_sq * norm_sq;
                    assert!((closed - pure).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn p_bounds_examples() {
        let (lo, hi) = fam(FRAC_1_SQRT_2, 0.2).p_bounds();
        assert!((lo - 0.5).abs() < 1e-15 && (hi - 0.5).abs() < 1e-15);
        assert_eq!(fam(1.0, 0.2).p_bounds(), (0.0, 1.0));
        let (lo, hi) = fam(0.6, 0.2).p_bounds();
        assert!((lo - 0.36).abs() < 1e-15 && (hi - 0.64).abs() < 1e-15);
    }

    #[test]
    fn f_vanishes_at_bounds() {
        for i in 0..=100 {
            let x1 = i as f64 / 100.0;
            let base = fam(x1, 0.5);
            let (lo, hi) = base.p_bounds();
            assert!(base.with_p(lo).unwrap().minimal_characteristic() <= 1e-10, "x1={x1}");
            assert!(base.with_p(hi).unwrap().minimal_characteristic() <= 1e-10, "x1={x1}");
        }
    }

    #[test]
    fn f_is_the_theta_minimum() {
        for x1 in [0.3, 0.8] {
            for i in 0..=50 {
                let f = fam(x1, i as f64 / 50.0);
                let grid_min = (0..629)
                    .map(|k| f.characteristic(k as f64 * TAU / 628.0))
                    .fold(f64::INFINITY, f64::min);
                assert!((f.minimal_characteristic() - grid_min).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn hull_is_zero_between_bounds_and_below_f() {
        for x1 in [0.1, 0.3, 0.8] {
            let base = fam(x1, 0.5);
            let (lo, hi) = base.p_bounds();
            for i in 0..=200 {
                let f = base.with_p(i as f64 / 200.0).unwrap();
                assert!(f.three_tangle() <= f.minimal_characteristic() + 1e-15);
                if f.p() >= lo && f.p() <= hi {
                    assert_eq!(f.three_tangle(), 0.0);
                }
            }
        }
    }

    #[test]
    fn hull_is_convex_outside_bounds() {
        for x1 in [0.05, 0.2, 0.3, 0.6, 0.8, 0.95] {
            let base = fam(x1, 0.5);
            let (lo, hi) = base.p_bounds();
            for (a, b) in [(0.0, lo), (hi, 1.0)] {
                let n = 200;
                let h = (b - a) / n as f64;
                let vals: Vec<f64> = (0..=n)
                    .map(|i| base.with_p(a + h * i as f64).unwrap().three_tangle())
                    .collect();
                for w in vals.windows(3) {
                    assert!(w[0] - 2.0 * w[1] + w[2] >= -1e-9, "x1={x1}");
                }
            }
        }
    }

    #[test]
    fn density_is_rank_two() {
        let rho = fam(0.3, 0.7).density();
        let spec = crate::tensor::hermitian_eig(rho.matrix()).unwrap();
        assert_eq!(spec.rank(), 2);
        assert!((spec.eigenvalues()[0] - 0.7).abs() < 1e-14);
    }

    #[test]
    fn parameter_validation() {
        assert!(Rank2Family::new(1.2, 0.5).is_err());
        assert!(Rank2Family::new(0.5, -0.1).is_err());
        let f = Rank2Family::<f64>::from_weights(-3.0, 4.0, 0.9).unwrap();
        assert!((f.x1() - 0.6).abs() < 1e-15 && (f.x2() - 0.8).abs() < 1e-15);
    }
}
