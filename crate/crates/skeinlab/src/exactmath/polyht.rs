//! Integer polynomials in the deformation parameters `h` and `t`.
//!
//! The grading conventions downstream put `deg h = 2` and `deg t = 4`, which
//! each term can report. Canonical display lists terms in descending
//! lexicographic `(h-degree, t-degree)` order, e.g. `"h^2*t + 3"`.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;

use super::Ring;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyHT {
    /// (h-degree, t-degree) -> nonzero coefficient.
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl PolyHT {
    pub fn new() -> Self {
        PolyHT {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(c: BigInt, hdeg: u32, tdeg: u32) -> Self {
        let mut t = BTreeMap::new();
        if !Ring::is_zero(&c) {
            t.insert((hdeg, tdeg), c);
        }
        PolyHT { terms: t }
    }

    pub fn h() -> Self {
        Self::term(BigInt::from(1), 1, 0)
    }

    pub fn t() -> Self {
        Self::term(BigInt::from(1), 0, 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn coeff(&self, hdeg: u32, tdeg: u32) -> BigInt {
        self.terms
            .get(&(hdeg, tdeg))
            .cloned()
            .unwrap_or_else(|| BigInt::from(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn insert_term(&mut self, hdeg: u32, tdeg: u32, c: BigInt) {
        let key = (hdeg, tdeg);
        if let Some(existing) = self.terms.get(&key) {
            let sum = existing + &c;
            if Ring::is_zero(&sum) {
                self.terms.remove(&key);
            } else {
                self.terms.insert(key, sum);
            }
        } else if !Ring::is_zero(&c) {
            self.terms.insert(key, c);
        }
    }

    /// True when every term has the same weighted degree
    /// `2*hdeg + 4*tdeg + offset`; returns that degree for homogeneous input.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut deg = None;
        for ((hd, td), _) in &self.terms {
            let d = 2 * (*hd as i64) + 4 * (*td as i64);
            match deg {
                None => deg = Some(d),
                Some(existing) if existing == d => {}
                _ => return None,
            }
        }
        deg.or(Some(0))
    }

    /// Evaluate at rational `(h, t)`.
    pub fn eval(&self, h: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = <BigRational as Ring>::zero();
        for ((hd, td), c) in &self.terms {
            let mut p = BigRational::from_integer(c.clone());
            for _ in 0..*hd {
                p = Ring::mul(&p, h);
            }
            for _ in 0..*td {
                p = Ring::mul(&p, t);
            }
            acc = Ring::add(&acc, &p);
        }
        acc
    }

    /// Specialization h = t = 0 (the constant term).
    pub fn at_zero(&self) -> BigInt {
        self.coeff(0, 0)
    }

    /// Parse canonical strings like `"h^2*t + 3"`, `"-2*h*t^2 + t"`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::new());
        }
        let mut out = Self::new();
        let mut cur = String::new();
        let mut sign = 1i64;
        let mut chunks: Vec<(i64, String)> = Vec::new();
        for ch in s.chars() {
            if ch.is_whitespace() {
                continue;
            }
            if ch == '+' || ch == '-' {
                if cur.is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    chunks.push((sign, std::mem::take(&mut cur)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(format!("empty or malformed polynomial string {s:?}"));
        }
        chunks.push((sign, cur));
        for (sg, chunk) in chunks {
            let mut coeff = BigInt::from(sg);
            let mut hd = 0u32;
            let mut td = 0u32;
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(format!("empty factor in {chunk:?}"));
                }
                if let Some(rest) = factor.strip_prefix('h') {
                    hd += parse_power(rest)?;
                } else if let Some(rest) = factor.strip_prefix('t') {
                    td += parse_power(rest)?;
                } else {
                    let c: BigInt = factor
                        .parse()
                        .map_err(|_| format!("bad factor {factor:?}"))?;
                    coeff *= c;
                }
            }
            out.insert_term(hd, td, coeff);
        }
        Ok(out)
    }
}

fn parse_power(rest: &str) -> Result<u32, String> {
    if rest.is_empty() {
        Ok(1)
    } else {
        rest.strip_prefix('^')
            .ok_or_else(|| format!("bad power syntax {rest:?}"))?
            .parse()
            .map_err(|_| format!("bad exponent in {rest:?}"))
    }
}

impl Default for PolyHT {
    fn default() -> Self {
        Self::new()
    }
}

impl Ring for PolyHT {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::constant(BigInt::from(1))
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((hd, td), c) in &other.terms {
            out.insert_term(*hd, *td, c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        PolyHT {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for ((h1, t1), c1) in &self.terms {
            for ((h2, t2), c2) in &other.terms {
                out.insert_term(h1 + h2, t1 + t2, c1 * c2);
            }
        }
        out
    }
    fn from_int(n: i64) -> Self {
        Self::constant(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for PolyHT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending (h-degree, t-degree)
        for ((hd, td), c) in self.terms.iter().rev() {
            let cs = c.to_string();
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
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || (*hd == 0 && *td == 0) {
                factors.push(mag);
            }
            match hd {
                0 => {}
                1 => factors.push("h".into()),
                _ => factors.push(format!("h^{hd}")),
            }
            match td {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{td}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyHT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_grading() {
        let x = PolyHT::h().mul(&PolyHT::h()).mul(&PolyHT::t()); // h^2 t
        assert_eq!(x.homogeneous_degree(), Some(8));
        let y = x.add(&PolyHT::constant(BigInt::from(3)));
        assert_eq!(y.homogeneous_degree(), None);
        assert_eq!(y.to_string(), "h^2*t + 3");
    }

    #[test]
    fn evaluation() {
        // h^2 t at (5, 7) = 175
        let x = PolyHT::h().mul(&PolyHT::h()).mul(&PolyHT::t());
        let v = x.eval(
            &BigRational::from_integer(BigInt::from(5)),
            &BigRational::from_integer(BigInt::from(7)),
        );
        assert_eq!(v, BigRational::from_integer(BigInt::from(175)));
        assert_eq!(x.at_zero(), BigInt::from(0));
    }

    #[test]
    fn parse_round_trips() {
        for s in ["h^2*t + 3", "-2*h*t^2 + t", "5", "h", "-t^3"] {
            let p = PolyHT::parse(s).unwrap();
            assert_eq!(p.to_string(), s, "round trip failed for {s}");
        }
    }
}
