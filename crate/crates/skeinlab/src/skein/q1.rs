//! The `q = 1` integer calculus, which differs from the classical one by
//! a single sign.
//!
//! On four points `a < b < c < d` with spectators fixed, the one-dot
//! relation specializes to
//!
//! * classical:  `nest.dot(b,c) -> disj.dot(a,b) + disj.dot(c,d) - nest.dot(a,d)`
//! * at `q = 1`: `nest.dot(b,c) -> disj.dot(a,b) + disj.dot(c,d) + nest.dot(a,d)`
//!
//! (the generic coefficient of the last term is `q^{-1}`), while the
//! two-dot relation `nest.dot(a,d).dot(b,c) -> disj.dot(a,b).dot(c,d)` is
//! shared by both specializations. The engine here rewrites with the
//! `q = 1` signs along the same pivot strategy as the classical one and
//! is validated exhaustively against the generic quantum reduction
//! specialized at `q = 1`.

use num::bigint::BigInt;

use crate::diagrams::Diagram;
use crate::exactmath::Ring;

use super::{classical, spectator_dots, with_dots, NestedPair, SkeinElement};

/// A diagram is in normal form when every dotted arc is outer; the
/// criterion is shared with the classical engine.
pub use super::classical::is_normal;

/// Rewrite the pivot term of `d` with the `q = 1` signs.
pub fn rewrite(d: &Diagram, p: &NestedPair) -> SkeinElement<BigInt> {
    let disj = super::rewire_disjoint(d.matching(), p)
        .expect("rewiring against the innermost container is always planar");
    let base = spectator_dots(d, p);
    let mut e = SkeinElement::new();
    if d.dots().contains_key(&p.a) {
        // the two-dot relation carries no sign at either specialization
        e.add_term(with_dots(&disj, &base, &[p.a, p.c]), BigInt::one());
    } else {
        e.add_term(with_dots(&disj, &base, &[p.a]), BigInt::one());
        e.add_term(with_dots(&disj, &base, &[p.c]), BigInt::one());
        e.add_term(with_dots(d.matching(), &base, &[p.a]), BigInt::one());
    }
    e
}

/// Normal form at `q = 1`, along the classical pivot strategy.
pub fn reduce(e: &SkeinElement<BigInt>) -> SkeinElement<BigInt> {
    let mut cur = e.clone();
    loop {
        let hit = cur
            .terms()
            .find_map(|(d, c)| classical::pivot(d).map(|p| (d.clone(), c.clone(), p)));
        let Some((d, c, p)) = hit else {
            return cur;
        };
        cur.add_term(d.clone(), -c.clone());
        cur = cur.add(&rewrite(&d, &p).scale(&c));
    }
}

/// Machine-derived relations at `q = 1` in the `k`-dot grade: the
/// specializations of the generic relations derived through the cup
/// calculus, with trivial ones dropped.
pub fn derived_relations(n: usize, k: usize) -> Vec<SkeinElement<BigInt>> {
    let mut out = Vec::new();
    let section = crate::tlcalc::psi::Section::new(n, k);
    for d in Diagram::all_dotted(n, k) {
        let e = SkeinElement::term(d, crate::exactmath::LaurentV::one());
        let red = crate::tlcalc::psi::reduce_quantum_with(&e, &section);
        let rel = e.sub(&red).map_coeffs(|c| c.specialize_q_one());
        if !rel.is_zero() {
            out.push(rel);
        }
    }
    out
}
