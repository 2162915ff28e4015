//! Exact coefficient rings and exact linear algebra.
//!
//! Every ring here is exact: integers and rationals are arbitrary precision
//! (via `num`), Laurent polynomials store explicit integer coefficient maps,
//! and linear algebra is fraction-free over `Z` (Smith normal form) or plain
//! Gaussian elimination over a field. There is no floating point and no
//! numerical tolerance anywhere.

mod gaussian;
mod laurent;
mod lincomb;
mod matrix;
mod polyht;
mod quantum;
mod ratfun;
mod snf;

pub use gaussian::GaussianRational;
pub use laurent::LaurentV;
pub use lincomb::LinComb;
pub use matrix::Matrix;
pub use polyht::PolyHT;
pub use quantum::{
    minus_bracket, minus_factorial, quantum_binomial, quantum_factorial, quantum_integer,
};
pub use ratfun::RatFun;
pub use snf::{integer_kernel, smith_normal_form, RowLattice, Smith};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// A commutative ring with exact equality. All coefficient types implement
/// this; matrices and skein elements are generic over it.
pub trait Ring: Clone + PartialEq + Eq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_int(n: i64) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Exact rational square root, if one exists.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// Binomial coefficient `C(n, k)` as a `BigInt` (0 when `k > n`).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
