//! Cyclic Jacobi eigensolver for small complex Hermitian matrices.

use num_traits::Zero;

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{cr, Real, C};

/// Eigenvalues above this count toward [`SpectralDecomposition::rank`].
pub const RANK_TOLERANCE: f64 = 1e-9;

const HERMITIAN_TOLERANCE: f64 = 1e-10;
const OFF_DIAGONAL_TOLERANCE: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a Hermitian matrix, eigenvalues in descending order.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T: Real> {
    eigenvalues: Vec<T>,
    /// Column `i` is the eigenvector of `eigenvalues[i]`.
    eigenvectors: ComplexMatrix<T>,
    rank: usize,
}

impl<T: Real> SpectralDecomposition<T> {
    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix<T> {
        &self.eigenvectors
    }

    pub fn eigenvector(&self, i: usize) -> Vec<C<T>> {
        self.eigenvectors.column(i)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `sum_i f(lambda_i) |u_i><u_i|`
    pub fn map(&self, f: impl Fn(T) -> C<T>) -> ComplexMatrix<T> {
        let n = self.dim();
        let v = &self.eigenvectors;
        let weights: Vec<C<T>> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, n, |r, c| {
            (0..n).map(|k| v[(r, k)] * weights[k] * v[(c, k)].conj()).sum()
        })
    }

    /// `V diag(lambda) V^dagger`
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        self.map(cr)
    }
}

/// Diagonalizes a Hermitian matrix.
///
/// Output is deterministic: eigenvalues are sorted descending (stable on
/// ties) and each eigenvector is phased so its first largest-modulus entry is
/// real and positive.
pub fn hermitian_eig<T: Real>(h: &ComplexMatrix<T>) -> Result<SpectralDecomposition<T>> {
    h.require_square()?;
    if !h.is_hermitian(T::tol(HERMITIAN_TOLERANCE)) {
        return Err(Error::NotHermitian);
    }
    let n = h.rows();
    let half = T::lit(0.5);
    // Work on the exactly Hermitian part.
    let mut a = ComplexMatrix::from_fn(n, n, |r, c| (h[(r, c)] + h[(c, r)].conj()) * half);
    let mut v = ComplexMatrix::<T>::identity(n);

    let threshold = T::tol(OFF_DIAGONAL_TOLERANCE).max(T::epsilon() * T::lit(8.0) * a.frobenius_norm());
    let mut sweeps = 0;
    while off_diagonal_norm(&a) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::InvalidParameter(format!(
                "jacobi did not converge in {MAX_SWEEPS} sweeps"
            )));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.partial_cmp(&a[(i, i)].re).unwrap());
    let eigenvalues: Vec<T> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut eigenvectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    orthonormalize_columns(&mut eigenvectors);
    fix_phases(&mut eigenvectors);
    let rank_tol = T::lit(RANK_TOLERANCE);
    let rank = eigenvalues.iter().filter(|&&l| l > rank_tol).count();

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        rank,
    })
}

/// `Tr sqrt(M M^dagger)`; for Hermitian input this is `sum |lambda_i|`.
pub fn trace_norm<T: Real>(m: &ComplexMatrix<T>) -> Result<T> {
    m.require_square()?;
    if m.is_hermitian(T::tol(HERMITIAN_TOLERANCE)) {
        let spec = hermitian_eig(m)?;
        return Ok(spec.eigenvalues().iter().map(|l| l.abs()).sum());
    }
    let gram = m * &m.adjoint();
    let spec = hermitian_eig(&gram)?;
    Ok(spec
        .eigenvalues()
        .iter()
        .map(|&l| l.max(T::zero()).sqrt())
        .sum())
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut s = T::zero();
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with `G = diag(1, e^{-i phi}) R(c, s)`, where
/// `a[p][q] = |a_pq| e^{i phi}` and `R` is the real symmetric Schur rotation.
fn rotate<T: Real>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == T::zero() {
        return;
    }
    let phase = apq / cr(mag);
    let tau = (a[(q, q)].re - a[(p, p)].re) / (T::lit(2.0) * mag);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let cos = T::one() / (T::one() + t * t).sqrt();
    let sin = t * cos;
    let conj_phase = phase.conj();
    let g_pp = cr(cos);
    let g_pq = cr(sin);
    let g_qp = conj_phase * cr(-sin);
    let g_qq = conj_phase * cr(cos);

    let n = a.rows();
    for r in 0..n {
        let (x, y) = (a[(r, p)], a[(r, q)]);
        a[(r, p)] = x * g_pp + y * g_qp;
        a[(r, q)] = x * g_pq + y * g_qq;
    }
    for c in 0..n {
        let (x, y) = (a[(p, c)], a[(q, c)]);
        a[(p, c)] = g_pp.conj() * x + g_qp.conj() * y;
        a[(q, c)] = g_pq.conj() * x + g_qq.conj() * y;
    }
    a[(p, q)] = C::zero();
    a[(q, p)] = C::zero();
    a[(p, p)].im = T::zero();
    a[(q, q)].im = T::zero();
    for r in 0..n {
        let (x, y) = (v[(r, p)], v[(r, q)]);
        v[(r, p)] = x * g_pp + y * g_qp;
        v[(r, q)] = x * g_pq + y * g_qq;
    }
}

/// Modified Gram-Schmidt; Jacobi already yields orthonormal columns up to
/// rounding, this removes the drift.
fn orthonormalize_columns<T: Real>(m: &mut ComplexMatrix<T>) {
    let n = m.cols();
    let rows = m.rows();
    for j in 0..n {
        for k in 0..j {
            let overlap: C<T> = (0..rows).map(|r| m[(r, k)].conj() * m[(r, j)]).sum();
            for r in 0..rows {
                let sub = overlap * m[(r, k)];
                m[(r, j)] -= sub;
            }
        }
        let norm = (0..rows).map(|r| m[(r, j)].norm_sqr()).sum::<T>().sqrt();
        for r in 0..rows {
            m[(r, j)] /= cr(norm);
        }
    }
}

fn fix_phases<T: Real>(m: &mut ComplexMatrix<T>) {
    let rows = m.rows();
    let slack = T::lit(1e-12);
    for j in 0..m.cols() {
        let max = (0..rows).map(|r| m[(r, j)].norm()).fold(T::zero(), T::max);
        let pivot = (0..rows)
            .find(|&r| m[(r, j)].norm() >= max - slack)
            .unwrap_or(0);
        let z = m[(pivot, j)];
        if z.is_zero() {
            continue;
        }
        let rot = z.conj() / cr(z.norm());
        for r in 0..rows {
            m[(r, j)] *= rot;
        }
        m[(pivot, j)].im = T::zero();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix<f64> {
        let m = ComplexMatrix::from_fn(n, n, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let h = &m + &m.adjoint();
        h.scale(cr(0.5))
    }

    fn check(h: &ComplexMatrix<f64>, tol: f64) {
        let spec = hermitian_eig(h).unwrap();
        assert!(spec.reconstruct().max_abs_diff(h) <= tol, "reconstruction");
        let v = spec.eigenvectors();
        let gram = &v.adjoint() * v;
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(h.rows())) <= tol, "orthonormal");
        for w in spec.eigenvalues().windows(2) {
            assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn linear_system_matrix_spectrum() {
        let a = ComplexMatrix::<f64>::from_real(2, 2, &[1.5, 0.5, 0.5, 1.5]).unwrap();
        let spec = hermitian_eig(&a).unwrap();
        assert!((spec.eigenvalues()[0] - 2.0).abs() < 1e-14);
        assert!((spec.eigenvalues()[1] - 1.0).abs() < 1e-14);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u2 = spec.eigenvector(0);
        assert!((u2[0] - cr(h)).norm() < 1e-14 && (u2[1] - cr(h)).norm() < 1e-14);
        let u1 = spec.eigenvector(1);
        // (|0> - |1>)/sqrt2 up to the fixed phase convention
        assert!((u1[0] + u1[1]).norm() < 1e-14);
        assert!((u1[0].norm() - h).abs() < 1e-14);
        assert_eq!(spec.rank(), 2);
    }

    #[test]
    fn degenerate_identity_and_pauli_z() {
        let spec = hermitian_eig(&ComplexMatrix::<f64>::identity(2)).unwrap();
        assert_eq!(spec.eigenvalues(), &[1.0, 1.0]);
        check(&ComplexMatrix::identity(2), 1e-14);

        let z = ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap();
        let spec = hermitian_eig(&z).unwrap();
        assert_eq!(spec.eigenvalues(), &[1.0, -1.0]);
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert_eq!(hermitian_eig(&m).unwrap_err(), Error::NotHermitian);
        assert!(matches!(
            hermitian_eig(&ComplexMatrix::<f64>::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn random_hermitian_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..100 {
            let n = 1 + i % 16;
            check(&random_hermitian(&mut rng, n), 1e-10);
        }
    }

    #[test]
    fn deterministic_output() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let h = random_hermitian(&mut rng, 8);
        let a = hermitian_eig(&h).unwrap();
        let b = hermitian_eig(&h).unwrap();
        assert_eq!(a.eigenvalues(), b.eigenvalues());
        assert_eq!(a.eigenvectors(), b.eigenvectors());
    }

    #[test]
    fn rank_detection() {
        let v = [cr(0.6), c(0.0, 0.8), cr(0.0)];
        let p = ComplexMatrix::outer(&v, &v);
        assert_eq!(hermitian_eig(&p).unwrap().rank(), 1);
    }

    #[test]
    fn trace_norms() {
        let d = ComplexMatrix::<f64>::from_real(2, 2, &[3.0, 0.0, 0.0, -1.0]).unwrap();
        assert!((trace_norm(&d).unwrap() - 4.0).abs() < 1e-14);
        let rho = ComplexMatrix::<f64>::from_real(2, 2, &[0.7, 0.1, 0.1, 0.3]).unwrap();
        assert!((trace_norm(&rho).unwrap() - 1.0).abs() < 1e-14);
        // non-Hermitian nilpotent: singular values {1, 0}
        let n = ComplexMatrix::<f64>::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!((trace_norm(&n).unwrap() - 1.0).abs() < 1e-14);
        assert!(trace_norm(&ComplexMatrix::<f64>::zeros(2, 3)).is_err());
    }

    #[test]
    fn single_precision_solve() {
        let a = ComplexMatrix::<f32>::from_real(2, 2, &[1.5, 0.5, 0.5, 1.5]).unwrap();
        let spec = hermitian_eig(&a).unwrap();
        assert!((spec.eigenvalues()[0] - 2.0).abs() < 1e-5);
        assert!((spec.eigenvalues()[1] - 1.0).abs() < 1e-5);
    }
}
