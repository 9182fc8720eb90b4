use super::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Quantum Fourier transform on `n` qubits,
/// `|x> -> 2^{-n/2} sum_y e^{2 pi i x y / 2^n} |y>`, with `x` and `y` read
/// big-endian. `inverse` yields the adjoint circuit.
pub fn qft<T: Real>(n: usize, inverse: bool) -> Result<Circuit<T>> {
    if n == 0 {
        return Err(Error::InvalidParameter("qft needs at least one qubit".into()));
    }
    let mut c = Circuit::new(n);
    for j in 0..n {
        c.push(Gate::hadamard(), &[j])?;
        for k in (j + 1)..n {
            let angle = T::TAU() / T::lit((1u64 << (k - j + 1)) as f64);
            c.push(Gate::controlled_phase(angle), &[k, j])?;
        }
    }
    for j in 0..n / 2 {
        c.push(Gate::swap(), &[j, n - 1 - j])?;
    }
    Ok(if inverse { c.inverse() } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cis, cr};
    use crate::tensor::StateVector;
    use num_complex::Complex64;

    /// Direct DFT matrix applied to a state, independent of the circuit.
    fn dft(psi: &StateVector<f64>, sign: f64) -> Vec<Complex64> {
        let n = psi.dim();
        (0..n)
            .map(|y| {
                (0..n)
                    .map(|x| psi.amplitude(x) * cis(sign * std::f64::consts::TAU * (x * y) as f64 / n as f64))
                    .sum::<Complex64>()
                    / cr((n as f64).sqrt())
            })
            .collect()
    }

    fn sample(n: usize) -> StateVector<f64> {
        let amps = (0..1usize << n)
            .map(|i| Complex64::new((i as f64 * 0.37).sin(), (i as f64 * 1.3 + 0.2).cos()))
            .collect();
        StateVector::normalized(amps).unwrap()
    }

    #[test]
    fn single_qubit_is_hadamard() {
        let c = qft::<f64>(1, false).unwrap();
        assert_eq!(c.gate_count(), 1);
        let out = c.apply_to(&StateVector::zero(1)).unwrap();
        assert!((out.amplitude(1).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn matches_dft_matrix() {
        for n in 1..=4 {
            let psi = sample(n);
            let fwd = qft::<f64>(n, false).unwrap().apply_to(&psi).unwrap();
            let inv = qft::<f64>(n, true).unwrap().apply_to(&psi).unwrap();
            for (a, b) in fwd.amplitudes().iter().zip(dft(&psi, 1.0)) {
                assert!((a - b).norm() < 1e-12, "n={n}");
            }
            for (a, b) in inv.amplitudes().iter().zip(dft(&psi, -1.0)) {
                assert!((a - b).norm() < 1e-12, "n={n}");
            }
        }
    }

    #[test]
    fn inverse_reads_out_phase_two_quarters() {
        // (1/2) sum_k e^{2 pi i k (2/4)} |k>  ->  |10>
        let amps = (0..4)
            .map(|k| cis(std::f64::consts::TAU * k as f64 * 0.25 * 2.0) * cr(0.5))
            .collect();
        let psi = StateVector::new(amps).unwrap();
        let out = qft::<f64>(2, true).unwrap().apply_to(&psi).unwrap();
        assert!((out.probability(0b10) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn roundtrip_is_identity() {
        let psi = sample(3);
        let there = qft::<f64>(3, false).unwrap().apply_to(&psi).unwrap();
        let back = qft::<f64>(3, true).unwrap().apply_to(&there).unwrap();
        for (a, b) in back.amplitudes().iter().zip(psi.amplitudes()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn zero_qubits_rejected() {
        assert!(qft::<f64>(0, false).is_err());
    }
}
