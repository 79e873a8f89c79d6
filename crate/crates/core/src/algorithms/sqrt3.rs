//! Exact comparisons against multiples of √3, by squaring.

/// `a ≥ √3·b` for non-negative integers.
pub fn at_least_sqrt3_times(a: usize, b: usize) -> bool {
    let (a, b) = (a as u128, b as u128);
    a * a >= 3 * b * b
}

/// `√3·p ≤ q` for any integers.
pub fn sqrt3_mul_le(p: i64, q: i64) -> bool {
    let (p, q) = (p as i128, q as i128);
    match (p <= 0, q >= 0) {
        (true, true) => true,
        (false, false) => false,
        // p > 0, q ≥ 0
        (false, true) => 3 * p * p <= q * q,
        // p ≤ 0, q < 0: √3·|p| ≥ |q|
        (true, false) => 3 * p * p >= q * q,
    }
}

/// `√3·p < q` for any integers. Never an equality for `(p, q) ≠ (0, 0)`
/// since √3 is irrational.
pub fn sqrt3_mul_lt(p: i64, q: i64) -> bool {
    !(p == 0 && q == 0) && sqrt3_mul_le(p, q)
}
