use crate::error::Result;
use crate::scalar::{cr, Real, C};
use crate::tensor::{hermitian_eig, DensityMatrix, StateVector};

use super::concurrence::concurrence_mixed;
use super::negativity::{one_to_rest_negativities, pairwise_negativities, residuals};
use super::rank2::Rank2Family;
use super::tangle::three_tangle_pure;

const PURE_MARGINAL_TOLERANCE: f64 = 1e-10;
const SPAN_TOLERANCE: f64 = 1e-9;
const REPORT_CLAMP: f64 = 1e-10;

/// One value per qubit pair.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Pairwise<T> {
    pub ab: T,
    pub ac: T,
    pub bc: T,
}

/// One value per qubit.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PerQubit<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Copy> Pairwise<T> {
    pub fn to_array(&self) -> [T; 3] {
        [self.ab, self.ac, self.bc]
    }
}

impl<T: Copy> PerQubit<T> {
    pub fn to_array(&self) -> [T; 3] {
        [self.a, self.b, self.c]
    }
}

/// Entanglement summary of a three-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementRecord<T: Real> {
    /// `None` when the state is mixed and outside every case with a known
    /// closed form.
    pub three_tangle: Option<T>,
    pub pi_tangle: T,
    pub pairwise_concurrences: Pairwise<T>,
    pub pairwise_negativities: Pairwise<T>,
    pub one_to_rest_negativities: PerQubit<T>,
    /// Set when the three-tangle came from the rank-2 family closed form.
    pub rank2: Option<Rank2Family<T>>,
}

impl<T: Real> EntanglementRecord<T> {
    /// Copy with floating-point noise below zero reported as zero.
    pub fn clamped(&self) -> Self {
        let cl = |x: T| clamp_noise(x);
        let pair = |p: Pairwise<T>| Pairwise {
            ab: cl(p.ab),
            ac: cl(p.ac),
            bc: cl(p.bc),
        };
        Self {
            three_tangle: self.three_tangle.map(cl),
            pi_tangle: cl(self.pi_tangle),
            pairwise_concurrences: pair(self.pairwise_concurrences),
            pairwise_negativities: pair(self.pairwise_negativities),
            one_to_rest_negativities: PerQubit {
                a: cl(self.one_to_rest_negativities.a),
                b: cl(self.one_to_rest_negativities.b),
                c: cl(self.one_to_rest_negativities.c),
            },
            rank2: self.rank2,
        }
    }

    /// `N²_{X(rest)} - sum of N²_XY` for each qubit `X`.
    pub fn monogamy_residuals(&self) -> PerQubit<T> {
        residuals(&self.one_to_rest_negativities, &self.pairwise_negativities)
    }

    pub fn satisfies_monogamy(&self, tol: T) -> bool {
        self.monogamy_residuals().to_array().iter().all(|&r| r >= -tol)
    }
}

/// Values within `1e-10` below zero become zero; anything else is kept.
pub fn clamp_noise<T: Real>(x: T) -> T {
    if x < T::zero() && x >= -T::tol(REPORT_CLAMP) {
        T::zero()
    } else {
        x
    }
}

/// Input to [`analyze_three_qubit`].
#[derive(Debug, Clone, Copy)]
pub enum ThreeQubitState<'a, T: Real> {
    Pure(&'a StateVector<T>),
    Mixed(&'a DensityMatrix<T>),
}

impl<'a, T: Real> From<&'a StateVector<T>> for ThreeQubitState<'a, T> {
    fn from(s: &'a StateVector<T>) -> Self {
        Self::Pure(s)
    }
}

impl<'a, T: Real> From<&'a DensityMatrix<T>> for ThreeQubitState<'a, T> {
    fn from(rho: &'a DensityMatrix<T>) -> Self {
        Self::Mixed(rho)
    }
}

/// Computes every measure in [`EntanglementRecord`].
///
/// For mixed input the three-tangle is filled in when:
/// - the state has rank one (pure-state tangle of its support),
/// - some single-qubit marginal is pure (every decomposition is then
///   biseparable, so the tangle is zero), or
/// - the state has rank two with support inside
///   `span{(|010> - |011>)/√2, (|100> + |101>)/√2}`, where the
///   [`Rank2Family`] closed form applies after a local phase on qubit A.
pub fn analyze_three_qubit<'a, T: Real>(input: impl Into<ThreeQubitState<'a, T>>) -> Result<EntanglementRecord<T>> {
    let (rho, pure) = match input.into() {
        ThreeQubitState::Pure(s) => {
            three_tangle_pure(s)?;
            (s.to_density(), Some(s))
        }
        ThreeQubitState::Mixed(rho) => (rho.clone(), None),
    };
    let negs = one_to_rest_negativities(&rho)?;
    let pair_negs = pairwise_negativities(&rho)?;
    let res = residuals(&negs, &pair_negs);
    let conc = |keep: [usize; 2]| concurrence_mixed(&rho.reduce_to(&keep)?);
    let pairwise_concurrences = Pairwise {
        ab: conc([0, 1])?,
        ac: conc([0, 2])?,
        bc: conc([1, 2])?,
    };
    let (three_tangle, rank2) = match pure {
        Some(s) => (Some(three_tangle_pure(s)?), None),
        None => mixed_three_tangle(&rho)?,
    };
    Ok(EntanglementRecord {
        three_tangle,
        pi_tangle: (res.a + res.b + res.c) / T::lit(3.0),
        pairwise_concurrences,
        pairwise_negativities: pair_negs,
        one_to_rest_negativities: negs,
        rank2,
    })
}

/// Basis patterns `(|010> - |011>)/√2` and `(|100> + |101>)/√2`.
pub(crate) fn family_basis<T: Real>() -> [Vec<C<T>>; 2] {
    let h = T::FRAC_1_SQRT_2();
    let mut v1 = vec![cr(T::zero()); 8];
    v1[0b010] = cr(h);
    v1[0b011] = cr(-h);
    let mut v2 = vec![cr(T::zero()); 8];
    v2[0b100] = cr(h);
    v2[0b101] = cr(h);
    [v1, v2]
}

fn dot<T: Real>(u: &[C<T>], v: &[C<T>]) -> C<T> {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

/// Three-tangle of a mixed three-qubit state when one of the known cases
/// applies; see [`analyze_three_qubit`].
pub fn mixed_three_tangle<T: Real>(rho: &DensityMatrix<T>) -> Result<(Option<T>, Option<Rank2Family<T>>)> {
    let spec = hermitian_eig(rho.matrix())?;
    let rank = spec.rank();
    if rank == 1 {
        let top = StateVector::normalized(spec.eigenvector(0))?;
        return Ok((Some(three_tangle_pure(&top)?), None));
    }
    for q in 0..3 {
        let marginal = rho.reduce_to(&[q])?;
        if marginal.purity() >= T::one() - T::tol(PURE_MARGINAL_TOLERANCE) {
            return Ok((Some(T::zero()), None));
        }
    }
    if rank == 2 {
        let [v1, v2] = family_basis::<T>();
        let inside = (0..2).all(|i| {
            let e = spec.eigenvector(i);
            let outside = T::one() - dot(&v1, &e).norm_sqr() - dot(&v2, &e).norm_sqr();
            outside <= T::tol(SPAN_TOLERANCE)
        });
        if inside {
            let e = spec.eigenvector(0);
            let fam = Rank2Family::from_weights(dot(&v1, &e).norm(), dot(&v2, &e).norm(), spec.eigenvalues()[0])?;
            return Ok((Some(fam.three_tangle()), Some(fam)));
        }
    }
    Ok((None, None))
}
