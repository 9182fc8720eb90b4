use num_traits::{One, Zero};

use super::{index, ComplexMatrix, DensityMatrix};
use crate::error::{Error, Result};
use crate::scalar::{cr, Real, C};

const NORM_TOLERANCE: f64 = 1e-12;

/// Normalized pure state of `num_qubits` qubits (big-endian basis order).
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Real> {
    num_qubits: usize,
    amplitudes: Vec<C<T>>,
}

impl<T: Real> StateVector<T> {
    /// Wraps amplitudes that are already normalized.
    pub fn new(amplitudes: Vec<C<T>>) -> Result<Self> {
        let num_qubits = index::qubit_count(amplitudes.len()).ok_or(Error::DimensionMismatch {
            expected: amplitudes.len().next_power_of_two(),
            actual: amplitudes.len(),
        })?;
        let norm_sqr: T = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - T::one()).abs() > T::tol(NORM_TOLERANCE) {
            return Err(Error::NotNormalized(norm_sqr.to_f64_lossy()));
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(mut amplitudes: Vec<C<T>>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm == T::zero() {
            return Err(Error::NotNormalized(0.0));
        }
        for z in &mut amplitudes {
            *z /= cr(norm);
        }
        Self::new(amplitudes)
    }

    /// Real amplitudes, rescaled to unit norm.
    pub fn from_real(amplitudes: &[T]) -> Result<Self> {
        Self::normalized(amplitudes.iter().map(|&x| cr(x)).collect())
    }

    pub fn basis(num_qubits: usize, idx: usize) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if idx >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {idx} out of range for {num_qubits} qubits"
            )));
        }
        let mut amplitudes = vec![C::zero(); dim];
        amplitudes[idx] = C::one();
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn zero(num_qubits: usize) -> Self {
        Self::basis(num_qubits, 0).expect("index 0 always valid")
    }

    /// Skips the normalization check; callers guarantee unitarity.
    pub(crate) fn from_raw(num_qubits: usize, amplitudes: Vec<C<T>>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << num_qubits);
        Self {
            num_qubits,
            amplitudes,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C<T>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, idx: usize) -> C<T> {
        self.amplitudes[idx]
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `<self|other>`
    pub fn inner(&self, other: &Self) -> C<T> {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn probability(&self, idx: usize) -> T {
        self.amplitudes[idx].norm_sqr()
    }

    /// `self ⊗ other`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self::from_raw(self.num_qubits + other.num_qubits, amplitudes)
    }

    pub fn projector(&self) -> ComplexMatrix<T> {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }

    pub fn to_density(&self) -> DensityMatrix<T> {
        DensityMatrix::from_pure(self)
    }

    /// Largest amplitude difference after removing the global phase that best
    /// aligns `self` with `reference`.
    pub fn phase_aligned_distance(&self, reference: &Self) -> T {
        let overlap = self.inner(reference);
        let phase = if overlap.norm() > T::zero() {
            overlap / cr(overlap.norm())
        } else {
            C::one()
        };
        self.amplitudes
            .iter()
            .zip(&reference.amplitudes)
            .map(|(a, b)| (a * phase - b).norm())
            .fold(T::zero(), T::max)
    }
}
