use crate::error::{Error, Result};
use crate::scalar::{Real, C};
use crate::tensor::StateVector;

/// Three-tangle `4 |d1 - 2 d2 + 4 d3|` of a pure three-qubit state (the
/// Coffman-Kundu-Wootters hyperdeterminant).
///
/// With `a_ijk` the amplitude of `|ijk>` (qubit A = `i`, the most significant
/// bit):
///
/// ```text
/// d1 = a000² a111² + a001² a110² + a010² a101² + a100² a011²
/// d2 = a000 a111 (a011 a100 + a101 a010 + a110 a001)
///    + a011 a100 (a101 a010 + a110 a001) + a101 a010 a110 a001
/// d3 = a000 a110 a101 a011 + a111 a001 a010 a100
/// ```
pub fn three_tangle_pure<T: Real>(state: &StateVector<T>) -> Result<T> {
    if state.num_qubits() != 3 {
        return Err(Error::WrongQubitCount {
            expected: 3,
            actual: state.num_qubits(),
        });
    }
    Ok(hyperdeterminant_tangle(state.amplitudes()))
}

/// Same as [`three_tangle_pure`] on raw (possibly unnormalized) amplitudes;
/// homogeneous of degree four.
pub(crate) fn hyperdeterminant_tangle<T: Real>(a: &[C<T>]) -> T {
    let [a000, a001, a010, a011, a100, a101, a110, a111] = [a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]];
    let d1 = a000 * a000 * a111 * a111
        + a001 * a001 * a110 * a110
        + a010 * a010 * a101 * a101
        + a100 * a100 * a011 * a011;
    let d2 = a000 * a111 * (a011 * a100 + a101 * a010 + a110 * a001)
        + a011 * a100 * (a101 * a010 + a110 * a001)
        + a101 * a010 * a110 * a001;
    let d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    four * (d1 - d2 * two + d3 * four).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{apply, Gate};
    use crate::tensor::ComplexMatrix;
    use proptest::prelude::*;

    #[test]
    fn ghz_is_maximal() {
        let ghz = StateVector::<f64>::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!((three_tangle_pure(&ghz).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn w_and_product_vanish() {
        let w = StateVector::<f64>::from_real(&[0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(three_tangle_pure(&w).unwrap().abs() < 1e-15);
        let product = StateVector::<f64>::from_real(&[1.0; 8]).unwrap();
        assert!(three_tangle_pure(&product).unwrap().abs() < 1e-15);
    }

    #[test]
    fn rejects_other_sizes() {
        assert!(three_tangle_pure(&StateVector::<f64>::zero(2)).is_err());
    }

    fn unitary_from(params: &[f64]) -> Gate<f64> {
        // Z-Y-Z Euler angles plus a global phase
        let rz = |t: f64| {
            Gate::new(
                "Rz",
                ComplexMatrix::diagonal(&[C::from_polar(1.0, -t / 2.0), C::from_polar(1.0, t / 2.0)]),
            )
            .unwrap()
        };
        let m = &(&rz(params[0]).matrix().clone() * Gate::ry(params[1]).matrix()) * rz(params[2]).matrix();
        Gate::new("U", m.scale(C::from_polar(1.0, params[3]))).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn local_unitary_invariance(
            amps in proptest::collection::vec(-1.0f64..1.0, 16),
            angles in proptest::collection::vec(0.0f64..6.3, 12),
        ) {
            let z: Vec<C<f64>> = amps.chunks(2).map(|p| C::new(p[0], p[1])).collect();
            prop_assume!(z.iter().map(|v| v.norm_sqr()).sum::<f64>() > 1e-3);
            let psi = StateVector::normalized(z).unwrap();
            let before = three_tangle_pure(&psi).unwrap();
            let mut out = psi;
            for q in 0..3 {
                out = apply(&out, &unitary_from(&angles[4 * q..4 * q + 4]), &[q]).unwrap();
            }
            let after = three_tangle_pure(&out).unwrap();
            prop_assert!((before - after).abs() <= 1e-9);
        }
    }
}
