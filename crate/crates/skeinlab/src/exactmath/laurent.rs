//! Laurent polynomials in a formal variable `v` with `v^2 = q`.
//!
//! Half-integer powers of `q` are integer powers of `v`; an element lies in
//! `Z[q, q^-1]` exactly when every stored `v`-exponent is even. That parity
//! check is used downstream as a cheap structural invariant. Coefficients are
//! generic so the same code serves `Z[v, v^-1]` (integer coefficients) and
//! the numerators/denominators of rational functions (rational
//! coefficients).

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;

use super::{Field, GaussianRational, Ring};

/// Laurent polynomial in `v` over the coefficient ring `C`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentV<C: Ring + Ord = BigInt> {
    /// v-exponent -> nonzero coefficient.
    terms: BTreeMap<i64, C>,
}

impl<C: Ring + Ord> LaurentV<C> {
    pub fn new() -> Self {
        LaurentV {
            terms: BTreeMap::new(),
        }
    }

    /// Single term `c * v^exp`.
    pub fn term(c: C, exp: i64) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(exp, c);
        }
        LaurentV { terms: t }
    }

    /// `v^exp` (so `q^k` is `v_pow(2k)`).
    pub fn v_pow(exp: i64) -> Self {
        Self::term(C::one(), exp)
    }

    /// `q^k` as `v^(2k)`.
    pub fn q_pow(k: i64) -> Self {
        Self::v_pow(2 * k)
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, 0)
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn insert_term(&mut self, exp: i64, c: C) {
        if let Some(existing) = self.terms.get(&exp) {
            let sum = existing.add(&c);
            if sum.is_zero() {
                self.terms.remove(&exp);
            } else {
                self.terms.insert(exp, sum);
            }
        } else if !c.is_zero() {
            self.terms.insert(exp, c);
        }
    }

    /// Lowest and highest v-exponents, if nonzero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// True when all v-exponents are even, i.e. the element lies in
    /// `Z[q, q^-1]`.
    pub fn is_q_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// True when this is a single term (monomial), returning `(exp, coeff)`.
    pub fn as_monomial(&self) -> Option<(i64, C)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*e, c.clone()))
        } else {
            None
        }
    }

    /// Multiply by `v^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        LaurentV {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        let mut out = Self::new();
        for (e, a) in &self.terms {
            out.insert_term(*e, a.mul(c));
        }
        out
    }

    /// Substitute `v -> val` in a target field, mapping coefficients through
    /// `conv`.
    pub fn eval_v<F: Field>(&self, conv: &dyn Fn(&C) -> F, val: &F) -> F {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut p = F::one();
            let base = if *e >= 0 {
                val.clone()
            } else {
                val.inv().expect("v value must be invertible")
            };
            for _ in 0..e.unsigned_abs() {
                p = p.mul(&base);
            }
            acc = acc.add(&conv(c).mul(&p));
        }
        acc
    }

    /// Map coefficients into another ring.
    pub fn map_coeffs<D: Ring + Ord>(&self, f: &dyn Fn(&C) -> D) -> LaurentV<D> {
        let mut out = LaurentV::new();
        for (e, c) in &self.terms {
            out.insert_term(*e, f(c));
        }
        out
    }

    /// Substitute `v -> u * v` is not needed; but mirror `v -> v^-1` is used
    /// by bar-involution style checks in tests.
    pub fn bar(&self) -> Self {
        LaurentV {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (-e, c.clone()))
                .collect(),
        }
    }
}

impl<C: Ring + Ord> Default for LaurentV<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Ring + Ord> Ring for LaurentV<C> {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::v_pow(0)
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        LaurentV {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }
    fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl LaurentV<BigInt> {
    /// Specialize at a rational `q`. Succeeds directly when all exponents
    /// are even; otherwise requires `q` to have an exact rational square
    /// root.
    pub fn specialize_q(&self, q: &BigRational) -> Result<BigRational, String> {
        if self.is_q_polynomial() {
            let conv = |c: &BigInt| BigRational::from_integer(c.clone());
            // substitute q directly on halved exponents
            let mut acc = <BigRational as Ring>::zero();
            for (e, c) in &self.terms {
                let k = e / 2;
                let mut p = <BigRational as Ring>::one();
                let base = if k >= 0 {
                    q.clone()
                } else {
                    q.inv().ok_or("q must be nonzero")?
                };
                for _ in 0..k.unsigned_abs() {
                    p = Ring::mul(&p, &base);
                }
                acc = Ring::add(&acc, &Ring::mul(&conv(c), &p));
            }
            Ok(acc)
        } else if let Some(v) = super::rational_sqrt(q) {
            if v.is_zero() {
                return Err("cannot invert v = 0".into());
            }
            Ok(self.eval_v(&|c: &BigInt| BigRational::from_integer(c.clone()), &v))
        } else {
            Err(format!(
                "element has half-integer q-powers and {q} has no exact rational square root"
            ))
        }
    }

    /// Specialize at `q = -1` via `v = i` over the Gaussian rationals.
    pub fn specialize_q_minus1(&self) -> GaussianRational {
        self.eval_v(
            &|c: &BigInt| GaussianRational::from_int_pair(c.clone(), BigInt::from(0)),
            &GaussianRational::i(),
        )
    }

    /// Specialize at `q = 1` via `v = 1`.
    pub fn specialize_q_one(&self) -> BigInt {
        let mut acc = BigInt::from(0);
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Parse a canonical coefficient string, e.g. `"q^-1 + 2"`,
    /// `"-q^3/2 + q"`, `"3"`, `"v^-2"`. Grammar: terms joined by `+`/`-`,
    /// each `[int][*]?[qv](^exp)?` with exp an integer or `p/2`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let mut out = Self::new();
        if s.trim() == "0" {
            return Ok(out);
        }
        for (sg, chunk) in Self::split_terms(s)? {
            let (c, e) = Self::parse_term(&chunk)?;
            out.insert_term(e, c * BigInt::from(sg));
        }
        Ok(out)
    }

    /// Split `"q^-1 + 2"` into signed chunks, keeping `^-` exponents intact.
    fn split_terms(s: &str) -> Result<Vec<(i64, String)>, String> {
        let mut chunks = Vec::new();
        let mut cur = String::new();
        let mut sign = 1i64;
        let mut prev_caret = false;
        for ch in s.chars() {
            if ch.is_whitespace() {
                continue;
            }
            if (ch == '+' || ch == '-') && !prev_caret {
                if cur.is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    chunks.push((sign, std::mem::take(&mut cur)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
            } else {
                prev_caret = ch == '^';
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(format!("empty or malformed coefficient string {s:?}"));
        }
        chunks.push((sign, cur));
        Ok(chunks)
    }

    fn parse_term(t: &str) -> Result<(BigInt, i64), String> {
        let t = t.replace(['*', ' ', '(', ')'], "");
        if t.is_empty() {
            return Err("empty term".into());
        }
        // locate variable
        let (var_pos, is_q) = match (t.find('q'), t.find('v')) {
            (Some(p), _) => (Some(p), true),
            (None, Some(p)) => (Some(p), false),
            (None, None) => (None, true),
        };
        let (coeff_str, var_str) = match var_pos {
            Some(p) => (&t[..p], &t[p..]),
            None => (&t[..], ""),
        };
        let coeff: BigInt = if coeff_str.is_empty() {
            BigInt::from(1)
        } else {
            coeff_str
                .parse()
                .map_err(|_| format!("bad coefficient {coeff_str:?}"))?
        };
        if var_str.is_empty() {
            return Ok((coeff, 0));
        }
        let rest = &var_str[1..];
        let vexp: i64 = if rest.is_empty() {
            if is_q {
                2
            } else {
                1
            }
        } else {
            let exp_str = rest
                .strip_prefix('^')
                .ok_or_else(|| format!("bad exponent syntax {var_str:?}"))?;
            if let Some(half) = exp_str.strip_suffix("/2") {
                let p: i64 = half.parse().map_err(|_| format!("bad exponent {exp_str:?}"))?;
                if is_q {
                    p
                } else {
                    return Err("half powers of v are not supported".into());
                }
            } else {
                let p: i64 = exp_str.parse().map_err(|_| format!("bad exponent {exp_str:?}"))?;
                if is_q {
                    2 * p
                } else {
                    p
                }
            }
        };
        Ok((coeff, vexp))
    }
}

/// Euclidean helpers on rational-coefficient Laurent polynomials, used by
/// the rational-function field.
impl LaurentV<BigRational> {
    /// Exact division; `None` if the division has a remainder. Units of the
    /// Laurent ring are monomials, so both sides are first shifted to
    /// ordinary polynomials with nonzero constant term.
    pub fn div_exact(&self, den: &Self) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::new());
        }
        let (nlo, _) = self.degree_range().unwrap();
        let (dlo, dhi) = den.degree_range().unwrap();
        let d = den.shift(-dlo);
        let dspan = dhi - dlo;
        let dlead = d.coeff(dspan);
        let mut rem = self.shift(-nlo);
        let mut quot = Self::new();
        while let Some((_, rhi)) = rem.degree_range() {
            if rhi < dspan {
                return None;
            }
            let c = rem.coeff(rhi).div(&dlead);
            let t = Self::term(c, rhi - dspan);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(&d));
        }
        Some(quot.shift(nlo - dlo))
    }

    /// Monic polynomial gcd (on the polynomial parts, ignoring v-shifts).
    pub fn poly_gcd(a: &Self, b: &Self) -> Self {
        let normalize = |p: &Self| -> Self {
            match p.degree_range() {
                None => Self::new(),
                Some((lo, hi)) => {
                    let shifted = p.shift(-lo);
                    let lead = shifted.coeff(hi - lo);
                    shifted.scale(&lead.inv().unwrap())
                }
            }
        };
        let mut x = normalize(a);
        let mut y = normalize(b);
        while !y.is_zero() {
            let r = x.poly_rem(&y);
            x = y;
            y = normalize(&r);
        }
        normalize(&x)
    }

    fn poly_rem(&self, den: &Self) -> Self {
        let (dlo, dhi) = match den.degree_range() {
            Some(r) => r,
            None => panic!("remainder by zero polynomial"),
        };
        let dspan = dhi - dlo;
        let dlead = den.coeff(dhi);
        let mut rem = match self.degree_range() {
            Some((lo, _)) => self.shift(-lo),
            None => return Self::new(),
        };
        loop {
            let (rlo, rhi) = match rem.degree_range() {
                Some(r) => r,
                None => return rem,
            };
            if rhi - rlo < dspan {
                return rem;
            }
            let c = rem.coeff(rhi).div(&dlead);
            let t = Self::term(c, rhi - dhi);
            rem = rem.sub(&t.mul(den));
        }
    }
}

fn fmt_exp(e: i64) -> String {
    // v-exponent rendered in q-notation: even exponents are integer powers
    // of q, odd exponents print as q^{p/2}.
    if e == 0 {
        String::new()
    } else if e == 2 {
        "q".into()
    } else if e % 2 == 0 {
        format!("q^{}", e / 2)
    } else {
        format!("q^{e}/2")
    }
}

impl<C: Ring + Ord> fmt::Display for LaurentV<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let cs = format!("{c}");
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
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
            let var = fmt_exp(*e);
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl<C: Ring + Ord> fmt::Debug for LaurentV<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentV {
        LaurentV::q_pow(1)
    }

    #[test]
    fn arithmetic_and_parity() {
        let delta = q().neg().sub(&LaurentV::q_pow(-1)); // -q - q^-1
        assert!(delta.is_q_polynomial());
        let v = LaurentV::v_pow(1);
        assert!(!v.is_q_polynomial());
        assert_eq!(v.mul(&v), q());
        let square = delta.mul(&delta); // q^2 + 2 + q^-2
        assert_eq!(square.coeff(4), BigInt::from(1));
        assert_eq!(square.coeff(0), BigInt::from(2));
        assert_eq!(square.coeff(-4), BigInt::from(1));
    }

    #[test]
    fn display_canonical_forms() {
        let p: LaurentV = LaurentV::q_pow(-1).add(&LaurentV::from_int(2));
        assert_eq!(p.to_string(), "q^-1 + 2");
        let m = LaurentV::term(BigInt::from(-1), 3);
        assert_eq!(m.to_string(), "-q^3/2");
        let z: LaurentV = LaurentV::new();
        assert_eq!(z.to_string(), "0");
        let c = LaurentV::term(BigInt::from(3), 2).sub(&LaurentV::v_pow(-4));
        assert_eq!(c.to_string(), "-q^-2 + 3*q");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["q^-1 + 2", "-q^3/2", "3", "q", "-q^-2 + 3*q", "q^-1/2 + q^1/2"] {
            let p = LaurentV::parse(s).unwrap();
            assert_eq!(p.to_string(), s, "round trip failed for {s}");
        }
        assert_eq!(
            LaurentV::parse("2*q^2").unwrap(),
            LaurentV::term(BigInt::from(2), 4)
        );
        assert_eq!(LaurentV::parse("v^3").unwrap(), LaurentV::v_pow(3));
        assert!(LaurentV::parse("").is_err());
    }

    #[test]
    fn specialization_rules() {
        // q + q^-1 at q = -1 -> -2
        let p = LaurentV::q_pow(1).add(&LaurentV::q_pow(-1));
        assert_eq!(
            p.specialize_q(&BigRational::from_integer(BigInt::from(-1)))
                .unwrap(),
            BigRational::from_integer(BigInt::from(-2))
        );
        // v at q = -1 requires Gaussian rationals; v^2 = -1 there.
        let v = LaurentV::v_pow(1);
        assert!(v
            .specialize_q(&BigRational::from_integer(BigInt::from(-1)))
            .is_err());
        let i = v.specialize_q_minus1();
        assert_eq!(i.mul(&i), GaussianRational::from_int(-1));
        // odd powers at q = 4 use v = 2
        let p = LaurentV::v_pow(3);
        assert_eq!(
            p.specialize_q(&BigRational::from_integer(BigInt::from(4)))
                .unwrap(),
            BigRational::from_integer(BigInt::from(8))
        );
        assert!(LaurentV::v_pow(1)
            .specialize_q(&BigRational::from_integer(BigInt::from(3)))
            .is_err());
    }

    #[test]
    fn rational_laurent_division() {
        type L = LaurentV<BigRational>;
        let one = |n: i64| BigRational::from_integer(BigInt::from(n));
        // (v^2 - v^-2) / (v - v^-1) = v + v^-1
        let num = L::term(one(1), 2).sub(&L::term(one(1), -2));
        let den = L::term(one(1), 1).sub(&L::term(one(1), -1));
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, L::term(one(1), 1).add(&L::term(one(1), -1)));
        // gcd((v^2-1)(v^2+1), (v^2-1)v) contains v^2 - 1
        let a = L::term(one(1), 4).sub(&L::constant(one(1)));
        let b = L::term(one(1), 3).sub(&L::term(one(1), 1));
        let g = L::poly_gcd(&a, &b);
        let expected = L::term(one(1), 2).sub(&L::constant(one(1)));
        assert_eq!(g, expected);
    }
}
