use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{cis, Real, C};
use crate::tensor::{index, ComplexMatrix, StateVector};

const UNITARY_TOLERANCE: f64 = 1e-10;

/// Unitary acting on `arity` qubits. Local basis order follows the target
/// list: the first target is the most significant bit.
#[derive(Clone, PartialEq)]
pub struct Gate<T: Real> {
    label: String,
    arity: usize,
    matrix: ComplexMatrix<T>,
}

impl<T: Real> Gate<T> {
    pub fn new(label: impl Into<String>, matrix: ComplexMatrix<T>) -> Result<Self> {
        matrix.require_square()?;
        let arity = index::qubit_count(matrix.rows()).ok_or(Error::DimensionMismatch {
            expected: matrix.rows().next_power_of_two(),
            actual: matrix.rows(),
        })?;
        if !matrix.is_unitary(T::tol(UNITARY_TOLERANCE)) {
            return Err(Error::NotUnitary);
        }
        Ok(Self {
            label: label.into(),
            arity,
            matrix,
        })
    }

    fn trusted(label: impl Into<String>, matrix: ComplexMatrix<T>) -> Self {
        let arity = index::qubit_count(matrix.rows()).expect("power-of-two gate");
        Self {
            label: label.into(),
            arity,
            matrix,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn identity(arity: usize) -> Self {
        Self::trusted("I", ComplexMatrix::identity(1 << arity))
    }

    pub fn hadamard() -> Self {
        let h = T::FRAC_1_SQRT_2();
        Self::trusted("H", ComplexMatrix::from_real(2, 2, &[h, h, h, -h]).unwrap())
    }

    pub fn pauli_x() -> Self {
        Self::trusted(
            "X",
            ComplexMatrix::from_real(2, 2, &[T::zero(), T::one(), T::one(), T::zero()]).unwrap(),
        )
    }

    pub fn pauli_z() -> Self {
        Self::trusted(
            "Z",
            ComplexMatrix::from_real(2, 2, &[T::one(), T::zero(), T::zero(), -T::one()]).unwrap(),
        )
    }

    /// `exp(-i theta Y / 2)`: takes `|0>` to `cos(theta/2)|0> + sin(theta/2)|1>`.
    pub fn ry(theta: T) -> Self {
        let half = theta / T::lit(2.0);
        let (s, c) = half.sin_cos();
        Self::trusted("Ry", ComplexMatrix::from_real(2, 2, &[c, -s, s, c]).unwrap())
    }

    /// `diag(1, e^{i phi})`
    pub fn phase(phi: T) -> Self {
        Self::trusted("P", ComplexMatrix::diagonal(&[C::one(), cis(phi)]))
    }

    /// `diag(1, 1, 1, e^{i phi})`, symmetric in its two qubits.
    pub fn controlled_phase(phi: T) -> Self {
        Self::trusted(
            "CP",
            ComplexMatrix::diagonal(&[C::one(), C::one(), C::one(), cis(phi)]),
        )
    }

    pub fn swap() -> Self {
        let o = T::one();
        let z = T::zero();
        #[rustfmt::skip]
        let m = ComplexMatrix::from_real(4, 4, &[
            o, z, z, z,
            z, z, o, z,
            z, o, z, z,
            z, z, z, o,
        ]).unwrap();
        Self::trusted("SWAP", m)
    }

    pub fn inverse(&self) -> Self {
        Self::trusted(format!("{}†", self.label), self.matrix.adjoint())
    }

    pub fn power(&self, exp: usize) -> Self {
        let label = if exp == 1 {
            self.label.clone()
        } else {
            format!("{}^{exp}", self.label)
        };
        Self::trusted(label, self.matrix.pow(exp).expect("gate matrices are square"))
    }

    /// Adds one control qubit in front of the existing targets.
    pub fn controlled(&self) -> Self {
        let d = self.matrix.rows();
        let mut m = ComplexMatrix::identity(2 * d);
        for r in 0..d {
            for c in 0..d {
                m[(d + r, d + c)] = self.matrix[(r, c)];
            }
        }
        Self::trusted(format!("C-{}", self.label), m)
    }

    /// Block-diagonal gate selected by a classical register value: applies
    /// `blocks[v]` to the trailing qubits when the leading `control_bits`
    /// qubits hold `v`.
    pub fn multiplexed(label: impl Into<String>, control_bits: usize, blocks: &[Gate<T>]) -> Result<Self> {
        if blocks.len() != 1 << control_bits {
            return Err(Error::InvalidParameter(format!(
                "need {} blocks, got {}",
                1 << control_bits,
                blocks.len()
            )));
        }
        let d = blocks[0].matrix.rows();
        if blocks.iter().any(|b| b.matrix.rows() != d) {
            return Err(Error::InvalidParameter("blocks differ in size".into()));
        }
        let mut m = ComplexMatrix::zeros(d * blocks.len(), d * blocks.len());
        for (v, block) in blocks.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    m[(v * d + r, v * d + c)] = block.matrix[(r, c)];
                }
            }
        }
        Ok(Self::trusted(label, m))
    }
}

impl<T: Real> fmt::Debug for Gate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gate({}, arity {})", self.label, self.arity)
    }
}

pub(crate) fn check_targets(num_qubits: usize, arity: usize, targets: &[usize]) -> Result<()> {
    if targets.len() != arity {
        return Err(Error::InvalidTargets(format!(
            "gate acts on {arity} qubits but {} targets given",
            targets.len()
        )));
    }
    for (i, &t) in targets.iter().enumerate() {
        if t >= num_qubits {
            return Err(Error::InvalidTargets(format!(
                "qubit {t} out of range for {num_qubits} qubits"
            )));
        }
        if targets[..i].contains(&t) {
            return Err(Error::InvalidTargets(format!("qubit {t} repeated")));
        }
    }
    Ok(())
}

/// Applies `gate` to `targets` of `state`, identity elsewhere.
pub fn apply<T: Real>(state: &StateVector<T>, gate: &Gate<T>, targets: &[usize]) -> Result<StateVector<T>> {
    let n = state.num_qubits();
    check_targets(n, gate.arity, targets)?;
    let k = gate.arity;
    let local_dim = 1usize << k;
    let offsets: Vec<usize> = (0..local_dim)
        .map(|j| {
            targets
                .iter()
                .enumerate()
                .filter(|&(pos, _)| (j >> (k - 1 - pos)) & 1 == 1)
                .map(|(_, &q)| 1usize << index::shift(n, q))
                .sum()
        })
        .collect();
    let mask: usize = offsets[local_dim - 1];

    let input = state.amplitudes();
    let mut out = vec![C::zero(); input.len()];
    let mut gathered = vec![C::zero(); local_dim];
    for base in (0..input.len()).filter(|i| i & mask == 0) {
        for (slot, off) in gathered.iter_mut().zip(&offsets) {
            *slot = input[base | off];
        }
        for (r, off) in offsets.iter().enumerate() {
            out[base | off] = gate
                .matrix
                .row(r)
                .iter()
                .zip(&gathered)
                .map(|(a, b)| a * b)
                .sum();
        }
    }
    Ok(StateVector::from_raw(n, out))
}
