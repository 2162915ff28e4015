//! Rational functions in one variable with rational coefficients.
//!
//! Elements are reduced fractions of Laurent polynomials. The canonical form
//! shifts and scales so the denominator is an ordinary polynomial with
//! constant term 1; together with gcd reduction this makes structural
//! equality coincide with equality of rational functions. The variable is
//! `v` throughout this module, but nothing depends on that name: the same
//! field serves as coefficients in `t` for equivariant computations.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;

use super::{Field, LaurentV, Ring};

type L = LaurentV<BigRational>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFun {
    num: L,
    den: L,
}

impl RatFun {
    /// Construct `num / den` in canonical reduced form.
    ///
    /// Panics when `den` is zero.
    pub fn new(num: L, den: L) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun {
                num: L::new(),
                den: L::one(),
            };
        }
        let g = L::poly_gcd(&num, &den);
        let mut n = num.div_exact(&g).expect("gcd must divide numerator");
        let mut d = den.div_exact(&g).expect("gcd must divide denominator");
        // normalize: denominator becomes a polynomial with constant term 1
        let (dlo, _) = d.degree_range().unwrap();
        let c = d.coeff(dlo);
        let cinv = c.inv().unwrap();
        d = d.shift(-dlo).scale(&cinv);
        n = n.shift(-dlo).scale(&cinv);
        RatFun { num: n, den: d }
    }

    pub fn from_laurent(p: L) -> Self {
        RatFun { num: p, den: L::one() }
    }

    /// Lift an integer-coefficient Laurent polynomial.
    pub fn from_laurent_int(p: &LaurentV<BigInt>) -> Self {
        Self::from_laurent(p.map_coeffs(&|c: &BigInt| BigRational::from_integer(c.clone())))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_laurent(L::constant(r))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_laurent(L::v_pow(1))
    }

    pub fn numerator(&self) -> &L {
        &self.num
    }

    pub fn denominator(&self) -> &L {
        &self.den
    }

    /// `Some(p)` when the element is a Laurent polynomial.
    pub fn as_laurent(&self) -> Option<&L> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Substitute a rational value for the variable; `None` when the
    /// denominator vanishes there (or the value is 0 with negative powers
    /// present).
    pub fn eval(&self, val: &BigRational) -> Option<BigRational> {
        let conv = |c: &BigRational| c.clone();
        if val.is_zero() {
            let ok = |p: &L| p.degree_range().map_or(true, |(lo, _)| lo >= 0);
            if !ok(&self.num) || !ok(&self.den) {
                return None;
            }
        }
        let d = self.den.eval_v(&conv, val);
        if Ring::is_zero(&d) {
            return None;
        }
        let n = self.num.eval_v(&conv, val);
        Some(Ring::mul(&n, &d.inv().unwrap()))
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        RatFun {
            num: L::new(),
            den: L::one(),
        }
    }
    fn one() -> Self {
        RatFun {
            num: L::one(),
            den: L::one(),
        }
    }
    fn add(&self, other: &Self) -> Self {
        let n = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        RatFun::new(n, self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Field for RatFun {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFun::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn reduction_is_canonical() {
        // (v^2 - 1) / (v - 1) = v + 1
        let num = L::term(rat(1), 2).sub(&L::constant(rat(1)));
        let den = L::term(rat(1), 1).sub(&L::constant(rat(1)));
        let f = RatFun::new(num, den);
        let expected = RatFun::from_laurent(L::term(rat(1), 1).add(&L::constant(rat(1))));
        assert_eq!(f, expected);
        assert!(f.as_laurent().is_some());
    }

    #[test]
    fn field_axioms_spot_check() {
        // f = 1 / (v^2 + 1)
        let f = RatFun::new(L::one(), L::term(rat(1), 2).add(&L::constant(rat(1))));
        let g = f.inv().unwrap();
        assert!(f.mul(&g).is_one());
        let h = f.add(&g);
        // f + 1/f = (1 + (v^2+1)^2) / (v^2 + 1)
        assert_eq!(h.eval(&rat(1)).unwrap(), rat(5) / rat(2));
        assert_eq!(RatFun::zero().inv(), None);
    }

    #[test]
    fn evaluation_handles_poles() {
        // 1 / (v - 2) has a pole at 2
        let f = RatFun::new(
            L::one(),
            L::term(rat(1), 1).sub(&L::constant(rat(2))),
        );
        assert_eq!(f.eval(&rat(2)), None);
        assert_eq!(f.eval(&rat(3)).unwrap(), rat(1));
        // v^-1 cannot be evaluated at 0
        let g = RatFun::from_laurent(L::v_pow(-1));
        assert_eq!(g.eval(&rat(0)), None);
        assert_eq!(g.eval(&rat(4)).unwrap(), rat(1) / rat(4));
    }

    #[test]
    fn negative_shifts_normalize() {
        // v^-1 / (v^-2) = v
        let f = RatFun::new(L::v_pow(-1), L::v_pow(-2));
        assert_eq!(f, RatFun::var());
        assert_eq!(f.to_string(), "q^1/2");
    }
}
