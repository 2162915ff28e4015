//! Formal linear combinations with exact coefficients.
//!
//! The keys are any ordered diagram-like type; zero coefficients are
//! stripped eagerly so structural equality is equality of elements.

use std::collections::BTreeMap;
use std::fmt;

use super::Ring;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinComb<K: Ord + Clone, C: Ring> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord + Clone, C: Ring> LinComb<K, C> {
    pub fn new() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(k: K, c: C) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    /// Single key with coefficient 1.
    pub fn singleton(k: K) -> Self {
        Self::term(k, C::one())
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get(&k) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&k);
                } else {
                    self.terms.insert(k, sum);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn coeff(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::new();
        for (k, a) in &self.terms {
            out.add_term(k.clone(), a.mul(c));
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> LinComb<K, D> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Substitute each term by a combination (linear extension of `f`).
    pub fn flat_map<K2: Ord + Clone>(
        &self,
        f: impl Fn(&K) -> LinComb<K2, C>,
    ) -> LinComb<K2, C> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            for (k2, c2) in f(k).terms {
                out.add_term(k2, c.mul(&c2));
            }
        }
        out
    }

    /// As a coefficient vector against an indexed basis; `None` if a key
    /// falls outside the basis.
    pub fn to_vector(&self, basis_index: &BTreeMap<K, usize>, len: usize) -> Option<Vec<C>> {
        let mut v = vec![C::zero(); len];
        for (k, c) in &self.terms {
            let i = *basis_index.get(k)?;
            v[i] = c.clone();
        }
        Some(v)
    }
}

impl<K: Ord + Clone, C: Ring> Default for LinComb<K, C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone + fmt::Display, C: Ring> fmt::Display for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let cs = format!("{c}");
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-', ' ']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let needs_parens = mag.contains(['+', ' ']) || mag.contains(" - ");
            if mag == "1" {
                write!(f, "{k}")?;
            } else if needs_parens {
                write!(f, "({mag})*{k}")?;
            } else {
                write!(f, "{mag}*{k}")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + Clone + fmt::Display, C: Ring> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    #[test]
    fn arithmetic_strips_zeros() {
        let a: LinComb<&str, BigInt> = LinComb::term("x", BigInt::from(2));
        let b = LinComb::term("x", BigInt::from(-2)).add(&LinComb::singleton("y"));
        let s = a.add(&b);
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s.coeff(&"y"), BigInt::from(1));
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn flat_map_is_linear() {
        let e: LinComb<&str, BigInt> =
            LinComb::term("x", BigInt::from(2)).add(&LinComb::term("y", BigInt::from(3)));
        let out = e.flat_map(|k| {
            if *k == "x" {
                LinComb::term("y", BigInt::from(1))
            } else {
                LinComb::term("y", BigInt::from(-1))
            }
        });
        // 2*y - 3*y = -y
        assert_eq!(out.coeff(&"y"), BigInt::from(-1));
    }

    #[test]
    fn display_forms() {
        let e: LinComb<&str, BigInt> =
            LinComb::term("a", BigInt::from(1)).add(&LinComb::term("b", BigInt::from(-3)));
        assert_eq!(e.to_string(), "a - 3*b");
        let z: LinComb<&str, BigInt> = LinComb::new();
        assert_eq!(z.to_string(), "0");
    }
}
