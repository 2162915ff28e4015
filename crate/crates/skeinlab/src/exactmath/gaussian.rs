//! Gaussian rationals `Q(i)`, used to specialize half-integer powers of `q`
//! at `q = -1` (where `v = q^{1/2}` becomes the imaginary unit).

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;

use super::{Field, Ring};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: <BigRational as Ring>::zero(),
            im: <BigRational as Ring>::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        <Self as Ring>::from_int(n)
    }

    pub fn from_int_pair(re: BigInt, im: BigInt) -> Self {
        GaussianRational {
            re: BigRational::from_integer(re),
            im: BigRational::from_integer(im),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: <BigRational as Ring>::zero(),
        }
    }

    pub fn is_real(&self) -> bool {
        Ring::is_zero(&self.im)
    }

    /// The real part, if the imaginary part vanishes.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_real() {
            Some(self.re.clone())
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: Ring::neg(&self.im),
        }
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        Ring::add(&Ring::mul(&self.re, &self.re), &Ring::mul(&self.im, &self.im))
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: <BigRational as Ring>::zero(),
            im: <BigRational as Ring>::zero(),
        }
    }
    fn one() -> Self {
        GaussianRational {
            re: <BigRational as Ring>::one(),
            im: <BigRational as Ring>::zero(),
        }
    }
    fn add(&self, other: &Self) -> Self {
        GaussianRational {
            re: Ring::add(&self.re, &other.re),
            im: Ring::add(&self.im, &other.im),
        }
    }
    fn neg(&self) -> Self {
        GaussianRational {
            re: Ring::neg(&self.re),
            im: Ring::neg(&self.im),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        GaussianRational {
            re: Ring::sub(&Ring::mul(&self.re, &other.re), &Ring::mul(&self.im, &other.im)),
            im: Ring::add(&Ring::mul(&self.re, &other.im), &Ring::mul(&self.im, &other.re)),
        }
    }
    fn from_int(n: i64) -> Self {
        GaussianRational {
            re: <BigRational as Ring>::from_int(n),
            im: <BigRational as Ring>::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.re) && Ring::is_zero(&self.im)
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let n = self.norm();
        let ninv = n.inv().unwrap();
        let c = self.conj();
        Some(GaussianRational {
            re: Ring::mul(&c.re, &ninv),
            im: Ring::mul(&c.im, &ninv),
        })
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Ring::is_zero(self) {
            return write!(f, "0");
        }
        let mut wrote = false;
        if !Ring::is_zero(&self.re) {
            write!(f, "{}", self.re)?;
            wrote = true;
        }
        if !Ring::is_zero(&self.im) {
            let s = self.im.to_string();
            if wrote {
                if let Some(mag) = s.strip_prefix('-') {
                    write!(f, " - {mag}*i")?;
                } else {
                    write!(f, " + {s}*i")?;
                }
            } else {
                write!(f, "{s}*i")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(i.mul(&i), GaussianRational::from_int(-1));
    }

    #[test]
    fn field_inverse() {
        let z = GaussianRational::from_int_pair(BigInt::from(3), BigInt::from(-2));
        let w = z.inv().unwrap();
        assert_eq!(z.mul(&w), Ring::one());
        assert!(<GaussianRational as Ring>::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::i().to_string(), "1*i");
        assert_eq!(
            GaussianRational::from_int_pair(BigInt::from(1), BigInt::from(-1)).to_string(),
            "1 - 1*i"
        );
    }
}
