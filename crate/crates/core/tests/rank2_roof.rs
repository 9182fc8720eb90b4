mod common;

use common::random_state;
use common::roof_oracle::{cayley_tangle, components, roof_upper_bound};
use qtangle::entanglement::{three_tangle_pure, Rank2Family};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// `r_x² + r_y²` of the mixture's Bloch vector in the two-pattern subspace:
/// the exact convex roof, since the pure-state tangle there is `1 - r_z²`.
fn bloch_roof(x1: f64, p: f64) -> f64 {
    let x2 = (1.0 - x1 * x1).sqrt();
    4.0 * x1 * x1 * x2 * x2 * (2.0 * p - 1.0).powi(2)
}

#[test]
fn cayley_route_matches_library_tangle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let psi = random_state(&mut rng, 3);
        let amps: [_; 8] = psi.amplitudes().try_into().unwrap();
        assert!((cayley_tangle(&amps) - three_tangle_pure(&psi).unwrap()).abs() < 1e-12);
    }
}

#[test]
fn oracle_components_match_family() {
    for x1 in [0.0, 0.3, 0.8, 1.0] {
        let (phi1, phi2) = Rank2Family::new(x1, 0.5).unwrap().components();
        let (e1, e2) = components(x1);
        for k in 0..8 {
            assert!((phi1.amplitude(k) - e1[k]).norm() < 1e-15);
            assert!((phi2.amplitude(k) - e2[k]).norm() < 1e-15);
        }
    }
}

#[test]
fn oracle_reaches_the_bloch_roof() {
    for x1 in [0.3, 0.8] {
        for j in 0..=10 {
            let p = j as f64 / 10.0;
            let bound = roof_upper_bound(x1, p);
            let exact = bloch_roof(x1, p);
            assert!(bound >= exact - 1e-12, "x1={x1} p={p}: {bound} < {exact}");
            assert!(bound <= exact + 1e-6, "x1={x1} p={p}: {bound} vs {exact}");
        }
    }
}

#[test]
fn hull_never_exceeds_decompositions() {
    for j in 0..=20 {
        let p = j as f64 / 20.0;
        let closed = Rank2Family::new(0.8, p).unwrap().three_tangle();
        assert!(closed <= roof_upper_bound(0.8, p) + 1e-9, "p={p}");
    }
}

#[test]
fn hull_meets_the_roof_only_at_pure_and_balanced_mixtures() {
    for x1 in [0.3, 0.8] {
        for p in [0.0, 0.5, 1.0] {
            let closed = Rank2Family::new(x1, p).unwrap().three_tangle();
            assert!((closed - bloch_roof(x1, p)).abs() < 1e-12);
        }
        let closed = Rank2Family::new(x1, 0.4).unwrap().three_tangle();
        assert!(bloch_roof(x1, 0.4) - closed > 1e-2);
    }
}

#[test]
fn characteristic_curves_bottom_out_at_zero_and_pi() {
    let x1 = 0.3;
    for i in 0..=50 {
        let fam = Rank2Family::new(x1, i as f64 / 50.0).unwrap();
        let mut best = (f64::INFINITY, 0.0);
        let mut theta = 0.0;
        while theta < TAU {
            let v = fam.characteristic(theta);
            if v < best.0 {
                best = (v, theta);
            }
            theta += 0.2;
        }
        let branches = fam.characteristic(0.0).min(fam.characteristic(std::f64::consts::PI));
        // the 0.2 grid misses pi itself, so compare against the branch minimum
        assert!(branches <= best.0 + 1e-12);
    }
}
