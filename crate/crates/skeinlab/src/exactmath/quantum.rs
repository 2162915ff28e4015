//! Quantum integers, factorials, and balanced binomial coefficients.
//!
//! `[n] = (q^n - q^-n)/(q - q^-1)`, the symmetric form, plus the one-sided
//! variant `[i]_- = 1 + q^-2 + ... + q^-2(i-1)` that appears in
//! positive-braid expansions of projectors. Binomials are computed by exact
//! Laurent division, so any non-integrality would be caught immediately.

use num::bigint::BigInt;
use num::rational::BigRational;

use super::{LaurentV, Ring};

/// `[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)` (exponents in `q`).
pub fn quantum_integer(n: u32) -> LaurentV<BigInt> {
    let mut out = LaurentV::new();
    let n = n as i64;
    for i in 0..n {
        out.insert_term(2 * (n - 1 - 2 * i), BigInt::from(1));
    }
    out
}

pub fn quantum_factorial(n: u32) -> LaurentV<BigInt> {
    let mut out = LaurentV::one();
    for i in 1..=n {
        out = out.mul(&quantum_integer(i));
    }
    out
}

/// `[i]_- = 1 + q^-2 + ... + q^-2(i-1)`.
pub fn minus_bracket(i: u32) -> LaurentV<BigInt> {
    let mut out = LaurentV::new();
    for j in 0..i as i64 {
        out.insert_term(-4 * j, BigInt::from(1));
    }
    out
}

pub fn minus_factorial(n: u32) -> LaurentV<BigInt> {
    let mut out = LaurentV::one();
    for i in 1..=n {
        out = out.mul(&minus_bracket(i));
    }
    out
}

/// Balanced quantum binomial `[n]! / ([k]! [n-k]!)`.
pub fn quantum_binomial(n: u32, k: u32) -> LaurentV<BigInt> {
    assert!(k <= n, "binomial arguments out of range");
    let to_rat = |p: &LaurentV<BigInt>| -> LaurentV<BigRational> {
        p.map_coeffs(&|c: &BigInt| BigRational::from_integer(c.clone()))
    };
    let num = to_rat(&quantum_factorial(n));
    let den = to_rat(&quantum_factorial(k)).mul(&to_rat(&quantum_factorial(n - k)));
    let q = num
        .div_exact(&den)
        .expect("quantum binomial must divide exactly");
    q.map_coeffs(&|c: &BigRational| {
        assert!(c.is_integer(), "quantum binomial must have integer coefficients");
        c.to_integer()
    })
}
