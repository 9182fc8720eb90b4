#![allow(dead_code)]

pub mod roof_oracle;

use qtangle::{Complex64, StateVector64};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Prints the one-line verdict for an acceptance criterion.
pub fn report(id: &str, title: &str, passed: bool, detail: &str) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!("criterion {id} [{verdict}] {title}: {detail}");
}

pub fn random_state(rng: &mut ChaCha8Rng, qubits: usize) -> StateVector64 {
    let amps: Vec<Complex64> = (0..1 << qubits)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    StateVector64::normalized(amps).unwrap()
}

pub fn ghz() -> StateVector64 {
    StateVector64::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap()
}

pub fn w_state() -> StateVector64 {
    StateVector64::from_real(&[0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap()
}
