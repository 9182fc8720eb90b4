use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tensor::{trace_norm, DensityMatrix};

use super::record::{Pairwise, PerQubit};

/// `||rho^{T_part}||_1 - 1`; zero for states that stay positive under the
/// partial transpose.
pub fn negativity<T: Real>(rho: &DensityMatrix<T>, part: usize) -> Result<T> {
    let pt = rho.partial_transpose(part)?;
    Ok(trace_norm(&pt)? - T::one())
}

fn require_three_qubits<T: Real>(rho: &DensityMatrix<T>) -> Result<()> {
    if rho.dims() != [2, 2, 2] {
        return Err(Error::WrongQubitCount {
            expected: 3,
            actual: rho.num_subsystems(),
        });
    }
    Ok(())
}

/// `N_{A(BC)}`, `N_{B(AC)}`, `N_{C(AB)}`.
pub fn one_to_rest_negativities<T: Real>(rho: &DensityMatrix<T>) -> Result<PerQubit<T>> {
    require_three_qubits(rho)?;
    Ok(PerQubit {
        a: negativity(rho, 0)?,
        b: negativity(rho, 1)?,
        c: negativity(rho, 2)?,
    })
}

/// Two-party negativities on the reduced states, third qubit traced out.
pub fn pairwise_negativities<T: Real>(rho: &DensityMatrix<T>) -> Result<Pairwise<T>> {
    require_three_qubits(rho)?;
    let pair = |keep: [usize; 2]| negativity(&rho.reduce_to(&keep)?, 0);
    Ok(Pairwise {
        ab: pair([0, 1])?,
        ac: pair([0, 2])?,
        bc: pair([1, 2])?,
    })
}

/// Monogamy residuals `pi_A = N²_{A(BC)} - N²_AB - N²_AC` and cyclic.
pub fn pi_residuals<T: Real>(rho: &DensityMatrix<T>) -> Result<PerQubit<T>> {
    let rest = one_to_rest_negativities(rho)?;
    let pairs = pairwise_negativities(rho)?;
    Ok(residuals(&rest, &pairs))
}

pub(crate) fn residuals<T: Real>(rest: &PerQubit<T>, pairs: &Pairwise<T>) -> PerQubit<T> {
    let sq = |x: T| x * x;
    PerQubit {
        a: sq(rest.a) - sq(pairs.ab) - sq(pairs.ac),
        b: sq(rest.b) - sq(pairs.ab) - sq(pairs.bc),
        c: sq(rest.c) - sq(pairs.ac) - sq(pairs.bc),
    }
}

/// `pi_ABC = (pi_A + pi_B + pi_C) / 3`, unclamped.
pub fn pi_tangle<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    let r = pi_residuals(rho)?;
    Ok((r.a + r.b + r.c) / T::lit(3.0))
}
