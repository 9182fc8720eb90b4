use super::qpe::qpe_circuit;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::scalar::{Real, C};
use crate::tensor::{ComplexMatrix, DensityMatrix, StateVector};

pub const POST_QPE: &str = "post-qpe";
pub const POST_ROTATION: &str = "post-rotation";
pub const POST_UNCOMPUTE: &str = "post-uncompute";

const CLOCK_BITS: usize = 2;
const NORM_TOLERANCE: f64 = 1e-12;

/// `(sin(pi/4) + 2 sin(pi/8)) / 2`
pub fn default_rotation_constant<T: Real>() -> T {
    let pi = T::PI();
    ((pi / T::lit(4.0)).sin() + T::lit(2.0) * (pi / T::lit(8.0)).sin()) / T::lit(2.0)
}

/// `A x = b` with `A = [[3, 1], [1, 3]] / 2`, `b = (b0, b1)` and rotation
/// constant `c`. Register order: `(clock0, clock1, b, ancilla)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HhlProblem<T: Real> {
    b0: T,
    b1: T,
    c: T,
}

impl<T: Real> HhlProblem<T> {
    /// Requires `b0² + b1² = 1` and `0 < c <= 1` (the smallest eigenvalue).
    pub fn new(b0: T, b1: T, c: T) -> Result<Self> {
        let norm = b0 * b0 + b1 * b1;
        let normalized = (norm - T::one()).abs() <= T::tol(NORM_TOLERANCE);
        if !normalized {
            return Err(Error::NotNormalized(norm.to_f64_lossy()));
        }
        if !(c > T::zero() && c <= T::one()) {
            return Err(Error::InvalidParameter(format!("rotation constant {c} outside (0, 1]")));
        }
        Ok(Self { b0, b1, c })
    }

    /// `b0 = sqrt(b0_sq)`, `b1 = sqrt(1 - b0_sq)`.
    pub fn from_b0_squared(b0_sq: T, c: T) -> Result<Self> {
        if !(b0_sq >= T::zero() && b0_sq <= T::one()) {
            return Err(Error::InvalidParameter(format!("b0² = {b0_sq} outside [0, 1]")));
        }
        Self::new(b0_sq.sqrt(), (T::one() - b0_sq).sqrt(), c)
    }

    pub fn b0(&self) -> T {
        self.b0
    }

    pub fn b1(&self) -> T {
        self.b1
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn with_c(&self, c: T) -> Result<Self> {
        Self::new(self.b0, self.b1, c)
    }

    pub fn matrix(&self) -> ComplexMatrix<T> {
        let (a, b) = (T::lit(1.5), T::lit(0.5));
        ComplexMatrix::from_real(2, 2, &[a, b, b, a]).expect("2x2")
    }

    /// `2 pi / 2^clock_bits`
    pub fn t(&self) -> T {
        T::TAU() / T::lit((1u64 << CLOCK_BITS) as f64)
    }

    pub fn clock_bits(&self) -> usize {
        CLOCK_BITS
    }

    pub fn rhs(&self) -> StateVector<T> {
        StateVector::from_real(&[self.b0, self.b1]).expect("normalized b")
    }

    /// `A^{-1} b = (3 b0 - b1, -b0 + 3 b1) / 4`
    pub fn solution(&self) -> [T; 2] {
        let q = T::lit(0.25);
        let three = T::lit(3.0);
        [q * (three * self.b0 - self.b1), q * (three * self.b1 - self.b0)]
    }
}

/// Ancilla rotation conditioned on the clock value `v`: `Ry(2 asin(c / lambda_v))`
/// with `lambda_v = 2 pi v / (2^clock_bits t)`; `v = 0` is left alone. The
/// ratio is clamped at 1.
pub fn eigenvalue_rotation<T: Real>(c: T, clock_bits: usize, t: T) -> Result<Gate<T>> {
    let n = 1usize << clock_bits;
    let blocks: Vec<Gate<T>> = (0..n)
        .map(|v| {
            if v == 0 {
                Gate::identity(1)
            } else {
                let lambda = T::TAU() * T::lit(v as f64) / (T::lit(n as f64) * t);
                Gate::ry(T::lit(2.0) * (c / lambda).min(T::one()).asin())
            }
        })
        .collect();
    Gate::multiplexed("R(1/λ)", clock_bits, &blocks)
}

/// QPE, eigenvalue rotation, inverse QPE, with a snapshot after each.
pub fn hhl_circuit<T: Real>(problem: &HhlProblem<T>) -> Result<Circuit<T>> {
    let m = problem.clock_bits();
    let qpe = qpe_circuit(&problem.matrix(), problem.t(), m)?;
    let forward: Vec<usize> = (0..=m).collect();
    let ancilla = m + 1;
    let mut c = Circuit::new(m + 2);
    c.append_mapped(&qpe, &forward)?;
    c.snapshot(POST_QPE);
    let mut rot_targets: Vec<usize> = (0..m).collect();
    rot_targets.push(ancilla);
    c.push(eigenvalue_rotation(problem.c(), m, problem.t())?, &rot_targets)?;
    c.snapshot(POST_ROTATION);
    c.append_mapped(&qpe.inverse(), &forward)?;
    c.snapshot(POST_UNCOMPUTE);
    Ok(c)
}

/// Snapshots of one HHL run; the barred states trace out the ancilla.
#[derive(Debug, Clone, PartialEq)]
pub struct HhlStageStates<T: Real> {
    pub psi1: StateVector<T>,
    pub psi2: StateVector<T>,
    pub psi3: StateVector<T>,
    pub rho2_bar: DensityMatrix<T>,
    pub rho3_bar: DensityMatrix<T>,
}

impl<T: Real> HhlStageStates<T> {
    /// `psi1` without its (still `|0>`) ancilla.
    pub fn psi1_bar(&self) -> StateVector<T> {
        let amps: Vec<C<T>> = self.psi1.amplitudes().iter().step_by(2).copied().collect();
        StateVector::normalized(amps).expect("ancilla is |0> after qpe")
    }

    pub fn rho1_bar(&self) -> DensityMatrix<T> {
        ancilla_traced(&self.psi1)
    }

    /// Probability weight of `psi3` outside clock `|00>`.
    pub fn clock_leakage(&self) -> T {
        self.psi3.amplitudes()[4..].iter().map(|z| z.norm_sqr()).sum()
    }

    /// Probability of measuring the ancilla as 1 after uncomputation.
    pub fn success_probability(&self) -> T {
        self.psi3.amplitudes().iter().skip(1).step_by(2).map(|z| z.norm_sqr()).sum()
    }

    /// Normalized `b`-register amplitudes of the ancilla-1 branch with clock
    /// `|00>`, global phase removed and sign chosen to overlap positively
    /// with `reference`.
    pub fn solution_direction(&self, reference: [T; 2]) -> Result<[T; 2]> {
        let a = self.psi3.amplitudes();
        let branch = [a[0b0001], a[0b0011]];
        let norm = (branch[0].norm_sqr() + branch[1].norm_sqr()).sqrt();
        if norm <= T::tol(1e-14) {
            return Err(Error::InvalidParameter("ancilla-1 branch is empty".into()));
        }
        let pivot = if branch[0].norm() >= branch[1].norm() { branch[0] } else { branch[1] };
        let phase = pivot.conj() / C::new(pivot.norm(), T::zero());
        let mut x = [(branch[0] * phase).re / norm, (branch[1] * phase).re / norm];
        if x[0] * reference[0] + x[1] * reference[1] < T::zero() {
            x = [-x[0], -x[1]];
        }
        Ok(x)
    }
}

fn ancilla_traced<T: Real>(psi: &StateVector<T>) -> DensityMatrix<T> {
    psi.to_density().partial_trace(&[3]).expect("four-qubit register")
}

pub fn hhl_run<T: Real>(problem: &HhlProblem<T>) -> Result<HhlStageStates<T>> {
    let circuit = hhl_circuit(problem)?;
    let initial = StateVector::zero(problem.clock_bits())
        .tensor(&problem.rhs())
        .tensor(&StateVector::zero(1));
    let trace = circuit.run(&initial)?;
    let get = |label: &str| trace.get(label).cloned().expect("snapshot present");
    let (psi1, psi2, psi3) = (get(POST_QPE), get(POST_ROTATION), get(POST_UNCOMPUTE));
    Ok(HhlStageStates {
        rho2_bar: ancilla_traced(&psi2),
        rho3_bar: ancilla_traced(&psi3),
        psi1,
        psi2,
        psi3,
    })
}
