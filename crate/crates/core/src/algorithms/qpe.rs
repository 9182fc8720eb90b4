use crate::circuit::{hamiltonian_evolution, qft, Circuit, Gate};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tensor::{index, ComplexMatrix, StateVector};

/// Phase estimation of `exp(i a t)` on `clock_bits + s` qubits: clock
/// first, then the `s` system qubits. Clock qubit `j` controls
/// `U^{2^{clock_bits - 1 - j}}`.
pub fn qpe_circuit<T: Real>(a: &ComplexMatrix<T>, t: T, clock_bits: usize) -> Result<Circuit<T>> {
    if clock_bits == 0 {
        return Err(Error::InvalidParameter("qpe needs at least one clock qubit".into()));
    }
    let u: Gate<T> = hamiltonian_evolution(a, t)?;
    let system: Vec<usize> = (clock_bits..clock_bits + u.arity()).collect();
    let mut c = Circuit::new(clock_bits + u.arity());
    for j in 0..clock_bits {
        c.push(Gate::hadamard(), &[j])?;
    }
    for j in 0..clock_bits {
        c.controlled_power(&u, 1 << (clock_bits - 1 - j), j, &system)?;
    }
    let clock: Vec<usize> = (0..clock_bits).collect();
    c.append_mapped(&qft(clock_bits, true)?, &clock)?;
    Ok(c)
}

/// `|0...0>_clock ⊗ input` through [`qpe_circuit`]. When every eigenvalue
/// `lambda` of `a` makes `lambda t 2^clock_bits / 2 pi` an integer, the output
/// is `sum_i beta_i |lambda_i> |u_i>` exactly.
pub fn qpe<T: Real>(a: &ComplexMatrix<T>, t: T, clock_bits: usize, input: &StateVector<T>) -> Result<StateVector<T>> {
    let system = index::qubit_count(a.rows()).unwrap_or(usize::MAX);
    if input.num_qubits() != system {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            actual: input.dim(),
        });
    }
    let circuit = qpe_circuit(a, t, clock_bits)?;
    circuit.apply_to(&StateVector::zero(clock_bits).tensor(input))
}
