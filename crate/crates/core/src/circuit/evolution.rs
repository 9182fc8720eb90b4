use super::Gate;
use crate::error::Result;
use crate::scalar::{cis, Real};
use crate::tensor::{hermitian_eig, ComplexMatrix};

/// `e^{iAt} = sum_i e^{i lambda_i t} |u_i><u_i|`, built from the exact
/// eigendecomposition of the Hermitian matrix `a`.
pub fn hamiltonian_evolution<T: Real>(a: &ComplexMatrix<T>, t: T) -> Result<Gate<T>> {
    let spec = hermitian_eig(a)?;
    Gate::new("exp(iAt)", spec.map(|lambda| cis(lambda * t)))
}
