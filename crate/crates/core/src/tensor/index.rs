//! Basis-state indexing.
//!
//! Qubit 0 is the most significant bit of a basis index: for `n` qubits the
//! ket `|q0 q1 ... q(n-1)>` has index `q0 * 2^(n-1) + ... + q(n-1)`. Every
//! routine that maps between qubit labels and amplitude positions goes through
//! this module.

/// Bit position of `qubit` inside a basis index of an `num_qubits` register.
#[inline]
pub fn shift(num_qubits: usize, qubit: usize) -> usize {
    debug_assert!(qubit < num_qubits);
    num_qubits - 1 - qubit
}

/// Value (0 or 1) of `qubit` in basis state `index`.
#[inline]
pub fn bit(index: usize, num_qubits: usize, qubit: usize) -> usize {
    (index >> shift(num_qubits, qubit)) & 1
}

/// Basis index for a big-endian bit string, e.g. `[1, 0]` -> 2.
pub fn from_bits(bits: &[usize]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | (b & 1))
}

/// Splits `index` into mixed-radix digits, most significant subsystem first.
pub fn split(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for (slot, &d) in digits.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    digits
}

/// Inverse of [`split`].
pub fn join(digits: &[usize], dims: &[usize]) -> usize {
    digits
        .iter()
        .zip(dims)
        .fold(0, |acc, (&digit, &d)| acc * d + digit)
}

/// Returns `Some(n)` when `dim == 2^n`.
pub fn qubit_count(dim: usize) -> Option<usize> {
    if dim.is_power_of_two() {
        Some(dim.trailing_zeros() as usize)
    } else {
        None
    }
}
