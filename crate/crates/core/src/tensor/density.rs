use num_traits::Zero;

use super::{hermitian_eig, index, ComplexMatrix, StateVector};
use crate::error::{Error, Result};
use crate::scalar::{Real, C};

const HERMITIAN_TOLERANCE: f64 = 1e-12;
const TRACE_TOLERANCE: f64 = 1e-12;
const NEGATIVE_EIGENVALUE_TOLERANCE: f64 = 1e-10;

/// Hermitian, unit-trace, positive-semidefinite operator on a product of
/// subsystems. Subsystem 0 is the most significant factor.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T: Real> {
    dims: Vec<usize>,
    matrix: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    /// Validates and wraps `matrix` as a state on subsystems of sizes `dims`.
    pub fn new(dims: Vec<usize>, matrix: ComplexMatrix<T>) -> Result<Self> {
        matrix.require_square()?;
        let total: usize = dims.iter().product();
        if dims.is_empty() || dims.contains(&0) || total != matrix.rows() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                actual: total,
            });
        }
        if !matrix.is_hermitian(T::tol(HERMITIAN_TOLERANCE)) {
            return Err(Error::InvalidDensityMatrix("not hermitian"));
        }
        let trace = matrix.trace();
        if (trace.re - T::one()).abs() > T::tol(TRACE_TOLERANCE)
            || trace.im.abs() > T::tol(TRACE_TOLERANCE)
        {
            return Err(Error::InvalidDensityMatrix("trace is not one"));
        }
        let spec = hermitian_eig(&matrix)?;
        let min = spec.eigenvalues().last().copied().unwrap_or(T::zero());
        if min < -T::tol(NEGATIVE_EIGENVALUE_TOLERANCE) {
            return Err(Error::InvalidDensityMatrix("negative eigenvalue"));
        }
        Ok(Self { dims, matrix })
    }

    /// Density matrix of `n` qubits.
    pub fn qubits(matrix: ComplexMatrix<T>) -> Result<Self> {
        let n = index::qubit_count(matrix.rows()).ok_or(Error::DimensionMismatch {
            expected: matrix.rows().next_power_of_two(),
            actual: matrix.rows(),
        })?;
        Self::new(vec![2; n], matrix)
    }

    pub fn from_pure(state: &StateVector<T>) -> Self {
        Self {
            dims: vec![2; state.num_qubits()],
            matrix: state.projector(),
        }
    }

    /// `sum_i w_i |psi_i><psi_i|` over qubit states of equal size.
    pub fn mixture(ensemble: &[(T, StateVector<T>)]) -> Result<Self> {
        let first = ensemble
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty ensemble".into()))?;
        let dim = first.1.dim();
        let mut m = ComplexMatrix::zeros(dim, dim);
        for (w, psi) in ensemble {
            if psi.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: psi.dim(),
                });
            }
            m = &m + &psi.projector().scale(C::new(*w, T::zero()));
        }
        Self::new(vec![2; first.1.num_qubits()], m)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn num_subsystems(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn trace(&self) -> T {
        self.matrix.trace().re
    }

    /// `Tr(rho^2)`
    pub fn purity(&self) -> T {
        let n = self.dim();
        let mut s = T::zero();
        for r in 0..n {
            for c in 0..n {
                s += self.matrix[(r, c)].norm_sqr();
            }
        }
        s
    }

    fn check_subsystem(&self, subsystem: usize) -> Result<()> {
        if subsystem >= self.dims.len() {
            Err(Error::SubsystemOutOfRange {
                index: subsystem,
                count: self.dims.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Traces out the listed subsystems; survivors keep their relative order.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<Self> {
        for &s in traced {
            self.check_subsystem(s)?;
        }
        let mut is_traced = vec![false; self.dims.len()];
        for &s in traced {
            is_traced[s] = true;
        }
        if is_traced.iter().all(|&t| t) {
            return Err(Error::TraceAll);
        }
        let kept: Vec<usize> = (0..self.dims.len()).filter(|&s| !is_traced[s]).collect();
        let gone: Vec<usize> = (0..self.dims.len()).filter(|&s| is_traced[s]).collect();
        let kept_dims: Vec<usize> = kept.iter().map(|&s| self.dims[s]).collect();
        let gone_dims: Vec<usize> = gone.iter().map(|&s| self.dims[s]).collect();
        let kept_size: usize = kept_dims.iter().product();
        let gone_size: usize = gone_dims.iter().product();

        let full_index = |kept_digits: &[usize], gone_digits: &[usize]| {
            let mut digits = vec![0; self.dims.len()];
            for (&s, &d) in kept.iter().zip(kept_digits) {
                digits[s] = d;
            }
            for (&s, &d) in gone.iter().zip(gone_digits) {
                digits[s] = d;
            }
            index::join(&digits, &self.dims)
        };

        let mut out = ComplexMatrix::zeros(kept_size, kept_size);
        for r in 0..kept_size {
            let rd = index::split(r, &kept_dims);
            for c in 0..kept_size {
                let cd = index::split(c, &kept_dims);
                let mut acc = C::zero();
                for g in 0..gone_size {
                    let gd = index::split(g, &gone_dims);
                    acc += self.matrix[(full_index(&rd, &gd), full_index(&cd, &gd))];
                }
                out[(r, c)] = acc;
            }
        }
        Ok(Self {
            dims: kept_dims,
            matrix: out,
        })
    }

    /// Keeps only the listed subsystems (in ascending order).
    pub fn reduce_to(&self, keep: &[usize]) -> Result<Self> {
        for &s in keep {
            self.check_subsystem(s)?;
        }
        let traced: Vec<usize> = (0..self.dims.len()).filter(|s| !keep.contains(s)).collect();
        if traced.is_empty() {
            return Ok(self.clone());
        }
        self.partial_trace(&traced)
    }

    /// Transposes the indices of one subsystem. The result is Hermitian but
    /// need not be positive.
    pub fn partial_transpose(&self, subsystem: usize) -> Result<ComplexMatrix<T>> {
        self.check_subsystem(subsystem)?;
        let n = self.dim();
        let mut out = ComplexMatrix::zeros(n, n);
        for r in 0..n {
            let mut rd = index::split(r, &self.dims);
            for c in 0..n {
                let mut cd = index::split(c, &self.dims);
                std::mem::swap(&mut rd[subsystem], &mut cd[subsystem]);
                let src = (index::join(&rd, &self.dims), index::join(&cd, &self.dims));
                std::mem::swap(&mut rd[subsystem], &mut cd[subsystem]);
                out[(r, c)] = self.matrix[src];
            }
        }
        Ok(out)
    }
}

impl<T: Real> From<&StateVector<T>> for DensityMatrix<T> {
    fn from(state: &StateVector<T>) -> Self {
        Self::from_pure(state)
    }
}
