use crate::error::{Error, Result};
use crate::scalar::{Real, C};
use crate::tensor::{hermitian_eig, ComplexMatrix, DensityMatrix, StateVector};

/// Eigenvalues of `rho` at or below this are treated as exact zeros before
/// taking square roots.
const NULL_EIGENVALUE: f64 = 1e-14;

/// `2 |a00 a11 - a01 a10|` for a two-qubit pure state.
pub fn concurrence_pure<T: Real>(state: &StateVector<T>) -> Result<T> {
    if state.num_qubits() != 2 {
        return Err(Error::WrongQubitCount {
            expected: 2,
            actual: state.num_qubits(),
        });
    }
    let a = state.amplitudes();
    Ok(T::lit(2.0) * (a[0] * a[3] - a[1] * a[2]).norm())
}

/// `<u| (sigma_y ⊗ sigma_y) |v*>`
fn spin_flip_overlap<T: Real>(u: &[C<T>], v: &[C<T>]) -> C<T> {
    // sigma_y ⊗ sigma_y = antidiag(-1, 1, 1, -1)
    -(u[0].conj() * v[3].conj()) + u[1].conj() * v[2].conj() + u[2].conj() * v[1].conj()
        - u[3].conj() * v[0].conj()
}

/// Wootters concurrence `max(0, l1 - l2 - l3 - l4)` of a two-qubit state.
///
/// The `l_i` are the singular values of `W_ij = sqrt(p_i p_j) <e_i|σy⊗σy|e_j*>`
/// over the eigenpairs `(p_i, e_i)` of `rho`; they coincide with the square
/// roots of the eigenvalues of `rho (σy⊗σy) rho* (σy⊗σy)`. Singular values are
/// read off the Hermitian dilation `[[0, W], [W†, 0]]`, which avoids square
/// roots of eigenvalue noise.
pub fn concurrence_mixed<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    if rho.dims() != [2, 2] {
        return Err(Error::WrongQubitCount {
            expected: 2,
            actual: rho.num_subsystems(),
        });
    }
    let spec = hermitian_eig(rho.matrix())?;
    let cutoff = T::tol(NULL_EIGENVALUE);
    let support: Vec<(T, Vec<C<T>>)> = spec
        .eigenvalues()
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > cutoff)
        .map(|(i, &p)| (p.sqrt(), spec.eigenvector(i)))
        .collect();
    let k = support.len();
    if k == 0 {
        return Err(Error::InvalidDensityMatrix("zero matrix"));
    }

    let mut dilation = ComplexMatrix::zeros(2 * k, 2 * k);
    for (i, (si, ei)) in support.iter().enumerate() {
        for (j, (sj, ej)) in support.iter().enumerate() {
            let w = spin_flip_overlap(ei, ej) * C::new(*si * *sj, T::zero());
            dilation[(i, k + j)] = w;
            dilation[(k + j, i)] = w.conj();
        }
    }
    let singular = hermitian_eig(&dilation)?;
    let mut lambdas: Vec<T> = singular.eigenvalues()[..k].to_vec();
    lambdas.resize(4, T::zero());
    let value = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    Ok(value.max(T::zero()).min(T::one()))
}
