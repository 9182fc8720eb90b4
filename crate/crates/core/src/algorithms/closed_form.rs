use num_traits::Zero;

use super::hhl::HhlProblem;
use crate::scalar::{cr, Real, C};
use crate::tensor::StateVector;

const DEGENERATE: f64 = 1e-15;

/// Every analytic quantity of the stage-2 and stage-3 spectral
/// decompositions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormParams<T: Real> {
    /// `(b0 - b1)/√2`, `(b0 + b1)/√2`: components along `u1`, `u2`.
    pub beta1: T,
    pub beta2: T,
    /// `sqrt((1 - C²)(1 - C²/4)) + C²/2`
    pub gamma: T,
    /// `½[1 + sqrt(1 - 4 beta1² beta2² (1 - gamma²))]`
    pub p: T,
    pub a1: T,
    pub a2: T,
    pub x1: T,
    pub x2: T,
    pub a_coef: T,
    pub b_coef: T,
    pub c1: T,
    pub c2: T,
    /// `½[1 + sqrt(1 - 4 (A C2 - B C1)²)]`
    pub q: T,
    pub f1: T,
    pub f2: T,
    pub y1: T,
    pub y2: T,
}

pub fn closed_form_params<T: Real>(problem: &HhlProblem<T>) -> ClosedFormParams<T> {
    let (b0, b1, c) = (problem.b0(), problem.b1(), problem.c());
    let one = T::one();
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    let h = T::FRAC_1_SQRT_2();

    let beta1 = h * (b0 - b1);
    let beta2 = h * (b0 + b1);
    let s1 = (one - c * c).sqrt();
    let s2 = (one - c * c / four).sqrt();
    let gamma = s1 * s2 + c * c / two;
    let root = (one - four * beta1 * beta1 * beta2 * beta2 * (one - gamma * gamma))
        .max(T::zero())
        .sqrt();
    let p = (one + root) / two;
    let a1 = beta1 * (one + root - two * beta2 * beta2 * (one - gamma * gamma));
    let a2 = beta2 * gamma * (one + root);
    let an = (a1 * a1 + a2 * a2).sqrt();

    let half = T::lit(0.5);
    let a_coef = half * ((b0 - b1) * s1 + (b0 + b1) * s2);
    let b_coef = half * (-(b0 - b1) * s1 + (b0 + b1) * s2);
    let c1 = c * (T::lit(3.0) * b0 - b1) / four;
    let c2 = c * (T::lit(3.0) * b1 - b0) / four;
    let det = a_coef * c2 - b_coef * c1;
    let root3 = (one - four * det * det).max(T::zero()).sqrt();
    let q = (one + root3) / two;
    let f1 = a_coef * a_coef - b_coef * b_coef + c1 * c1 - c2 * c2 + root3;
    let f2 = two * (a_coef * b_coef + c1 * c2);
    // (f1, f2) cancels to rounding noise when the |1> diagonal entry of the
    // b-block dominates and the coupling vanishes; (f2, g) spans the same
    // line and stays well conditioned there.
    let g = -(f1 - root3) + root3;
    let (u, v) = if f1 * f1 + f2 * f2 >= f2 * f2 + g * g {
        (f1, f2)
    } else if f2 < T::zero() {
        (-f2, -g)
    } else {
        (f2, g)
    };
    let un = (u * u + v * v).sqrt();
    let (y1, y2) = if un > T::zero() { (u / un, v / un) } else { (one, T::zero()) };

    ClosedFormParams {
        beta1,
        beta2,
        gamma,
        p,
        a1,
        a2,
        x1: a1 / an,
        x2: a2 / an,
        a_coef,
        b_coef,
        c1,
        c2,
        q,
        f1,
        f2,
        y1,
        y2,
    }
}

/// `tau3` and `pi3` of one stage.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StageTangles<T> {
    pub tau3: T,
    pub pi3: T,
}

/// Closed-form tangles of the ancilla-traced states after each stage.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ClosedFormTangles<T> {
    pub stage1: StageTangles<T>,
    pub stage2: StageTangles<T>,
    pub stage3: StageTangles<T>,
}

impl<T: Copy> ClosedFormTangles<T> {
    pub fn stages(&self) -> [StageTangles<T>; 3] {
        [self.stage1, self.stage2, self.stage3]
    }
}

/// Stage 1: `(b0² - b1²)²` for both measures. Stage 2: `tau3` is the rank-2
/// hull with `g(p) = min(g+, g-)`,
/// `g± = 4 [(2p-1) a1 a2 ± sqrt(p(1-p)) (a1² - a2²)]² / (a1² + a2²)²`,
/// zero for `p` between `a-²/(a1²+a2²)` and `a+²/(a1²+a2²)`; `pi3` is
/// `4 a1² a2² (2p-1)² / (a1² + a2²)²`. Stage 3: zero (product eigenvectors).
pub fn closed_form_tangles<T: Real>(problem: &HhlProblem<T>) -> ClosedFormTangles<T> {
    let cf = closed_form_params(problem);
    let four = T::lit(4.0);
    let one = T::one();
    let bb = problem.b0() * problem.b0() - problem.b1() * problem.b1();
    let stage1 = StageTangles {
        tau3: bb * bb,
        pi3: bb * bb,
    };

    let stage2 = if (cf.beta1 * cf.beta2).abs() <= T::tol(DEGENERATE) {
        StageTangles::default()
    } else {
        let (a1s, a2s) = (cf.a1 * cf.a1, cf.a2 * cf.a2);
        let sum = a1s + a2s;
        let p = cf.p;
        let lin = (T::lit(2.0) * p - one) * cf.a1 * cf.a2;
        let cross = (p * (one - p)).max(T::zero()).sqrt() * (a1s - a2s);
        let g_plus = four * (lin + cross) * (lin + cross) / (sum * sum);
        let g_minus = four * (lin - cross) * (lin - cross) / (sum * sum);
        let p_minus = a1s.min(a2s) / sum;
        let p_plus = a1s.max(a2s) / sum;
        let tau3 = if p >= p_minus && p <= p_plus { T::zero() } else { g_plus.min(g_minus) };
        let w = T::lit(2.0) * p - one;
        StageTangles {
            tau3,
            pi3: four * a1s * a2s * w * w / (sum * sum),
        }
    };

    ClosedFormTangles {
        stage1,
        stage2,
        stage3: StageTangles::default(),
    }
}

/// Register states after each HHL stage written out directly:
/// `psi1 = sum_i beta_i |lambda_i>|u_i>|0>`, `psi2` with the ancilla rotated to
/// `sqrt(1 - C²/lambda_i²)|0> + C/lambda_i |1>`, and `psi3` with the clock
/// returned to `|00>`.
pub fn closed_form_states<T: Real>(problem: &HhlProblem<T>) -> [StateVector<T>; 3] {
    let (b0, b1, c) = (problem.b0(), problem.b1(), problem.c());
    let half = T::lit(0.5);
    let one = T::one();
    let d = b0 - b1;
    let s = b0 + b1;
    // index = clock << 2 | b << 1 | ancilla
    let idx = |clock: usize, b: usize, anc: usize| clock << 2 | b << 1 | anc;

    let mut psi1 = vec![C::zero(); 16];
    psi1[idx(0b01, 0, 0)] = cr(half * d);
    psi1[idx(0b01, 1, 0)] = cr(-half * d);
    psi1[idx(0b10, 0, 0)] = cr(half * s);
    psi1[idx(0b10, 1, 0)] = cr(half * s);

    let mut psi2 = vec![C::zero(); 16];
    for (clock, lambda, coef, sign) in [(0b01, one, d, -one), (0b10, T::lit(2.0), s, one)] {
        let r = c / lambda;
        let keep = (one - r * r).sqrt();
        for (b, bsign) in [(0, one), (1, sign)] {
            psi2[idx(clock, b, 0)] = cr(half * coef * bsign * keep);
            psi2[idx(clock, b, 1)] = cr(half * coef * bsign * r);
        }
    }

    let cf = closed_form_params(problem);
    let [x0, x1] = problem.solution();
    let mut psi3 = vec![C::zero(); 16];
    psi3[idx(0, 0, 0)] = cr(cf.a_coef);
    psi3[idx(0, 1, 0)] = cr(cf.b_coef);
    psi3[idx(0, 0, 1)] = cr(c * x0);
    psi3[idx(0, 1, 1)] = cr(c * x1);

    [psi1, psi2, psi3].map(|a| StateVector::new(a).expect("closed forms are normalized"))
}
