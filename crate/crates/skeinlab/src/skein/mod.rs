//! The dotted-diagram calculus: elements, relations, and normal forms.
//!
//! A skein element is a formal combination of dotted diagrams. Four
//! coefficient regimes share the container: `classical` (integers, the
//! specialization `q = -1`), `q1` (integers at `q = 1`), `quantum` (Laurent
//! polynomials in `v` with `v^2 = q`), and `equivariant` (integer
//! polynomials in `h`, `t`). The classical and equivariant rewrite engines
//! live here; the quantum and `q = 1` reductions factor through the
//! cup-diagram calculus and live with it.
//!
//! Both engines rewrite a dot on a non-outer arc by rewiring the nested
//! pair of arcs around it into the disjoint pair on the same four points.
//! The pivot is the dotted arc with the most containers (tie: smallest left
//! endpoint), rewired against its innermost container; this makes each step
//! strictly decrease the total containment statistic, which proves
//! termination.

pub mod classical;
pub mod equivariant;
pub mod q1;

use std::collections::BTreeMap;

use num::bigint::BigInt;
use serde_json::{json, Value};

use crate::diagrams::{Diagram, Matching};
use crate::exactmath::{LaurentV, LinComb, PolyHT, Ring};

/// A formal linear combination of dotted diagrams.
pub type SkeinElement<C> = LinComb<Diagram, C>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Classical,
    QOne,
    Quantum,
    Equivariant,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Classical => "classical",
            Variant::QOne => "q1",
            Variant::Quantum => "quantum",
            Variant::Equivariant => "equivariant",
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "classical" => Ok(Variant::Classical),
            "q1" => Ok(Variant::QOne),
            "quantum" => Ok(Variant::Quantum),
            "equivariant" => Ok(Variant::Equivariant),
            _ => Err(format!("unknown variant {s:?}")),
        }
    }
}

pub fn element_to_json<C: Ring>(e: &SkeinElement<C>, variant: Variant) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(d, c)| json!({ "diagram": d.to_json(), "coeff": c.to_string() }))
        .collect();
    json!({ "variant": variant.as_str(), "terms": terms })
}

pub fn element_from_json<C: Ring>(
    v: &Value,
    parse_coeff: impl Fn(&str) -> Result<C, String>,
) -> Result<(Variant, SkeinElement<C>), String> {
    let variant = Variant::parse(v["variant"].as_str().ok_or("missing 'variant'")?)?;
    let terms = v["terms"].as_array().ok_or("missing 'terms'")?;
    let mut e = SkeinElement::new();
    for t in terms {
        let d = Diagram::from_json(&t["diagram"])?;
        let c = parse_coeff(t["coeff"].as_str().ok_or("missing 'coeff'")?)?;
        e.add_term(d, c);
    }
    Ok((variant, e))
}

pub fn classical_element_from_json(v: &Value) -> Result<(Variant, SkeinElement<BigInt>), String> {
    element_from_json(v, |s| {
        s.trim()
            .parse()
            .map_err(|_| format!("bad integer coefficient {s:?}"))
    })
}

pub fn quantum_element_from_json(
    v: &Value,
) -> Result<(Variant, SkeinElement<LaurentV<BigInt>>), String> {
    element_from_json(v, |s| LaurentV::parse(s))
}

pub fn equivariant_element_from_json(
    v: &Value,
) -> Result<(Variant, SkeinElement<PolyHT>), String> {
    element_from_json(v, |s| PolyHT::parse(s))
}

/// A nested pair of arcs `(a, d)` around `(b, c)` in a matching, with
/// `a < b < c < d`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NestedPair {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// Replace the arcs `(a, d)` and `(b, c)` by `(a, b)` and `(c, d)`.
/// `None` when the rewired diagram would not be planar (some other arc
/// runs from the `(a, b)` gap to the `(c, d)` gap).
pub(crate) fn rewire_disjoint(m: &Matching, p: &NestedPair) -> Option<Matching> {
    let mut arcs: Vec<(usize, usize)> = m
        .arcs()
        .iter()
        .copied()
        .filter(|&arc| arc != (p.a, p.d) && arc != (p.b, p.c))
        .collect();
    arcs.push((p.a, p.b));
    arcs.push((p.c, p.d));
    Matching::from_arcs(arcs).ok()
}

/// All nested pairs of a matching (any nesting depth apart).
pub(crate) fn nested_pairs(m: &Matching) -> Vec<NestedPair> {
    let mut out = Vec::new();
    for &(b, c) in m.arcs() {
        for (a, d) in m.containers(b, c) {
            out.push(NestedPair { a, b, c, d });
        }
    }
    out
}

/// Rebuild a diagram on `matching` from a dot map plus extra single dots.
pub(crate) fn with_dots(
    matching: &Matching,
    base: &BTreeMap<usize, u32>,
    extra: &[usize],
) -> Diagram {
    let mut dots = base.clone();
    for &l in extra {
        *dots.entry(l).or_insert(0) += 1;
    }
    Diagram::new(matching.clone(), dots).expect("dot keys must be left endpoints")
}

/// The dots of `d` away from the two active arcs of `p`.
pub(crate) fn spectator_dots(d: &Diagram, p: &NestedPair) -> BTreeMap<usize, u32> {
    d.dots()
        .iter()
        .filter(|(&l, _)| l != p.a && l != p.b)
        .map(|(&l, &m)| (l, m))
        .collect()
}
