//! Braid group and symmetric group actions on cup matchings and their
//! pullback to the dotted diagram basis.
//!
//! A braid letter `±i` acts on the line strands `i`, `i+1` of the marked
//! diagrams, i.e. at absolute points `i+k`, `i+k+1`, by the usual crossing
//! expansion. Terms with an arc inside one projector or joining the two
//! projectors are stable under this surgery, so the action descends to the
//! reduced cup space and can be pulled back through the section table. The
//! pullback is exactly multiplicative in the word, and the squares of the
//! generators differ from a unit scalar by corrections divisible by
//! `1 - q^{-2}`, which vanish at `q = 1` (where the action factors through
//! the symmetric group) and at `q = -1`.

use num::bigint::BigInt;

use crate::diagrams::Matching;
use crate::exactmath::{LaurentV, Ring};
use crate::skein::SkeinElement;

use super::delta_laurent;
use super::psi::{psi_element, s_normal_form, CupElement, Section};

type L = LaurentV<BigInt>;

/// Apply the planar generator joining points `j` and `j+1` from above.
/// Returns the new matching and whether a circle closed up.
pub fn u_act(m: &Matching, j: usize) -> (Matching, bool) {
    assert!(j >= 1 && j + 1 <= 2 * m.n(), "generator point out of range");
    if m.partner(j) == j + 1 {
        return (m.clone(), true);
    }
    let a = m.partner(j);
    let b = m.partner(j + 1);
    let mut arcs: Vec<(usize, usize)> = m
        .arcs()
        .iter()
        .copied()
        .filter(|&(l, r)| l != j && l != j + 1 && r != j && r != j + 1)
        .collect();
    arcs.push((j, j + 1));
    arcs.push((a.min(b), a.max(b)));
    (
        Matching::from_arcs(arcs).expect("cap surgery preserves planarity"),
        false,
    )
}

/// Linear extension of [`u_act`], weighting closed circles by `delta`.
pub fn u_act_element<C: Ring>(e: &CupElement<C>, j: usize, delta: &C) -> CupElement<C> {
    let mut out = CupElement::new();
    for (m, c) in e.terms() {
        let (m2, circle) = u_act(m, j);
        let coeff = if circle { c.mul(delta) } else { c.clone() };
        out.add_term(m2, coeff);
    }
    out
}

/// One crossing at absolute points `j`, `j+1`: the positive crossing
/// expands as `v U + v^{-1}`, the negative one as `v^{-1} U + v`.
fn crossing_act(e: &CupElement<L>, j: usize, positive: bool) -> CupElement<L> {
    let delta = delta_laurent();
    let (u_w, id_w) = if positive {
        (L::v_pow(1), L::v_pow(-1))
    } else {
        (L::v_pow(-1), L::v_pow(1))
    };
    u_act_element(e, j, &delta)
        .scale(&u_w)
        .add(&e.scale(&id_w))
}

/// Act by a braid word on matchings of `2(n+k)` points. Letters are `±i`
/// with `1 <= i <= 2n-1`, applied left to right on line strands `i`, `i+1`.
pub fn braid_act(
    e: &CupElement<L>,
    word: &[i32],
    n: usize,
    k: usize,
) -> Result<CupElement<L>, String> {
    let mut acc = e.clone();
    for &g in word {
        if g == 0 {
            return Err("braid letters are nonzero integers".into());
        }
        let i = g.unsigned_abs() as usize;
        if i >= 2 * n {
            return Err(format!("letter {i} out of range for {} strands", 2 * n));
        }
        acc = crossing_act(&acc, i + k, g > 0);
    }
    Ok(acc)
}

/// Parse a braid word such as `"1 -2 1"` or `"1,-2,1"`.
pub fn parse_braid_word(s: &str) -> Result<Vec<i32>, String> {
    let mut out = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
        if tok.is_empty() {
            continue;
        }
        let g: i32 = tok
            .parse()
            .map_err(|_| format!("bad braid letter {tok:?}"))?;
        if g == 0 {
            return Err("braid letters are nonzero integers".into());
        }
        out.push(g);
    }
    Ok(out)
}

/// Pull the braid action back to the dotted standard basis through the
/// embedding and the section table.
pub fn pullback_act(
    x: &SkeinElement<L>,
    word: &[i32],
    section: &Section,
) -> Result<SkeinElement<L>, String> {
    let (n, k) = (section.n(), section.k());
    let moved = braid_act(&psi_element(x, n, k), word, n, k)?;
    Ok(section.express(&s_normal_form(&moved, n, k)))
}

/// The induced symmetric group action on integer elements, obtained by
/// specializing the braid action at `q = 1`.
pub fn symmetric_act(
    x: &SkeinElement<BigInt>,
    word: &[i32],
    section: &Section,
) -> Result<SkeinElement<BigInt>, String> {
    let lifted = x.map_coeffs(|c| L::constant(c.clone()));
    let moved = pullback_act(&lifted, word, section)?;
    Ok(moved.map_coeffs(|c| c.specialize_q_one()))
}
