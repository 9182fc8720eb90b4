//! Upper bound on the convex-roof three-tangle of the rank-2 mixture
//! `p |phi1><phi1| + (1 - p) |phi2><phi2|` found by searching its ensemble
//! decompositions directly. Shares no code with the library's closed forms:
//! the states are built from raw amplitudes and the pure-state tangle uses
//! the Cayley hyperdeterminant of the 2×2×2 amplitude cube.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Amps = [Complex64; 8];

const GRID_STEP: f64 = 0.01;
const REFINE_LEVELS: usize = 3;
const PATTERN_STARTS: usize = 4;

/// `4 |cross² - 4 det(A0) det(A1)|` with `A_i[j][k] = a_ijk`; homogeneous of
/// degree four, so unnormalized input gives `|psi|^4` times the tangle.
pub fn cayley_tangle(a: &Amps) -> f64 {
    let det0 = a[0] * a[3] - a[1] * a[2];
    let det1 = a[4] * a[7] - a[5] * a[6];
    let cross = a[0] * a[7] + a[3] * a[4] - a[1] * a[6] - a[2] * a[5];
    4.0 * (cross * cross - 4.0 * det0 * det1).norm()
}

/// `(|phi1>, |phi2>)` for real weights `(x1, x2)`.
pub fn components(x1: f64) -> (Amps, Amps) {
    let x2 = (1.0 - x1 * x1).max(0.0).sqrt();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let pattern = |u: f64, v: f64| {
        let mut a = [Complex64::new(0.0, 0.0); 8];
        a[0b010] = Complex64::new(u * h, 0.0);
        a[0b011] = Complex64::new(-u * h, 0.0);
        a[0b100] = Complex64::new(v * h, 0.0);
        a[0b101] = Complex64::new(v * h, 0.0);
        a
    };
    (pattern(x1, x2), pattern(-x2, x1))
}

struct Mixture {
    weighted: [Amps; 2],
}

impl Mixture {
    fn new(x1: f64, p: f64) -> Self {
        let (e1, e2) = components(x1);
        let (s1, s2) = (p.sqrt(), (1.0 - p).max(0.0).sqrt());
        Self {
            weighted: [e1.map(|z| z * s1), e2.map(|z| z * s2)],
        }
    }

    fn member(&self, u: Complex64, v: Complex64) -> Amps {
        let mut out = [Complex64::new(0.0, 0.0); 8];
        for k in 0..8 {
            out[k] = u * self.weighted[0][k] + v * self.weighted[1][k];
        }
        out
    }

    /// Average tangle of the ensemble generated by the rows of an isometry.
    fn average(&self, rows: &[[Complex64; 2]]) -> f64 {
        rows.iter()
            .map(|r| {
                let psi = self.member(r[0], r[1]);
                let w: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
                if w <= 1e-300 {
                    0.0
                } else {
                    cayley_tangle(&psi) / w
                }
            })
            .sum()
    }

    fn two_element(&self, alpha: f64, phi: f64) -> f64 {
        let (s, c) = alpha.sin_cos();
        let e = Complex64::from_polar(1.0, phi);
        let rows = [
            [Complex64::new(c, 0.0), e * s],
            [-e.conj() * s, Complex64::new(c, 0.0)],
        ];
        self.average(&rows)
    }
}

/// Best two-element decomposition: full `(alpha, phi)` grid at `GRID_STEP`,
/// then `REFINE_LEVELS` local grids each ten times finer.
fn two_element_search(m: &Mixture) -> (f64, f64, f64) {
    let mut best = (f64::INFINITY, 0.0, 0.0);
    let na = (FRAC_PI_2 / GRID_STEP).ceil() as usize;
    let np = (TAU / GRID_STEP).ceil() as usize;
    for i in 0..=na {
        let alpha = (i as f64 * GRID_STEP).min(FRAC_PI_2);
        for j in 0..np {
            let phi = j as f64 * GRID_STEP;
            let v = m.two_element(alpha, phi);
            if v < best.0 {
                best = (v, alpha, phi);
            }
        }
    }
    let mut step = GRID_STEP;
    for _ in 0..REFINE_LEVELS {
        step /= 10.0;
        let (_, a0, p0) = best;
        for i in -10i32..=10 {
            let alpha = (a0 + i as f64 * step).clamp(0.0, FRAC_PI_2);
            for j in -10i32..=10 {
                let phi = p0 + j as f64 * step;
                let v = m.two_element(alpha, phi);
                if v < best.0 {
                    best = (v, alpha, phi);
                }
            }
        }
    }
    best
}

/// Columns of an `n × 2` complex matrix made orthonormal.
fn isometry(params: &[f64], n: usize) -> Option<Vec<[Complex64; 2]>> {
    let col = |c: usize| -> Vec<Complex64> {
        (0..n)
            .map(|r| Complex64::new(params[4 * r + 2 * c], params[4 * r + 2 * c + 1]))
            .collect()
    };
    let mut u = col(0);
    let mut v = col(1);
    let nu = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if nu < 1e-9 {
        return None;
    }
    u.iter_mut().for_each(|z| *z /= nu);
    let overlap: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
    v.iter_mut().zip(&u).for_each(|(b, a)| *b -= overlap * a);
    let nv = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if nv < 1e-9 {
        return None;
    }
    v.iter_mut().for_each(|z| *z /= nv);
    Some((0..n).map(|r| [u[r], v[r]]).collect())
}

/// Compass pattern search over `n`-element decompositions from seeded random
/// starts.
fn pattern_search(m: &Mixture, n: usize, rng: &mut ChaCha8Rng) -> f64 {
    let eval = |x: &[f64]| isometry(x, n).map_or(f64::INFINITY, |rows| m.average(&rows));
    let mut best = f64::INFINITY;
    for _ in 0..PATTERN_STARTS {
        let mut x: Vec<f64> = (0..4 * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mut fx = eval(&x);
        let mut step = 0.5;
        while step > 1e-6 {
            let mut improved = false;
            for k in 0..x.len() {
                for dir in [1.0, -1.0] {
                    x[k] += dir * step;
                    let f = eval(&x);
                    if f < fx {
                        fx = f;
                        improved = true;
                        break;
                    }
                    x[k] -= dir * step;
                }
            }
            if !improved {
                step /= 2.0;
            }
        }
        best = best.min(fx);
    }
    best
}

/// Smallest ensemble-average tangle found over two-, three- and four-element
/// decompositions.
pub fn roof_upper_bound(x1: f64, p: f64) -> f64 {
    let m = Mixture::new(x1, p);
    let seed = (x1 * 1e6).round() as u64 ^ ((p * 1e6).round() as u64) << 20;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (two, _, _) = two_element_search(&m);
    let three = pattern_search(&m, 3, &mut rng);
    let four = pattern_search(&m, 4, &mut rng);
    two.min(three).min(four)
}
