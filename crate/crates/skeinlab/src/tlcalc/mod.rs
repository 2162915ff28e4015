//! The planar strand calculus: cup/cap pairings between two rows of
//! boundary points, formal combinations of them, slice words, projectors,
//! and the map into the quantum world.
//!
//! A [`TLPairing`] is a crossingless pairing of `bottom` points on the
//! lower edge of a strip with `top` points on the upper edge. Stacking
//! two pairings composes them; every closed loop produced by the gluing
//! evaluates to the loop parameter `delta = -q - q^{-1}` (or a chosen
//! scalar). Crossings are not diagrams here: a positive crossing expands
//! as `q^{1/2} U_i + q^{-1/2} Id` and a negative one with the inverse
//! weights, which is how slice words containing crossings are evaluated.

pub mod action;
pub mod jw;
pub mod psi;
pub mod quantumgroup;

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use serde_json::{json, Value};

use crate::diagrams::Matching;
use crate::exactmath::{LaurentV, LinComb, Ring};

/// A crossingless pairing between `bottom` lower points and `top` upper
/// points. Internally stored as a matching in disk order: bottom points
/// left to right, then top points right to left.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TLPairing {
    bottom: usize,
    top: usize,
    disk: Matching,
}

/// One boundary point of a `TLPairing`, 1-indexed on its edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum End {
    Bottom(usize),
    Top(usize),
}

impl TLPairing {
    /// Build from arcs in disk coordinates (see type docs).
    pub fn new(bottom: usize, top: usize, arcs: Vec<(usize, usize)>) -> Result<Self, String> {
        let disk = Matching::from_arcs(arcs)?;
        if 2 * disk.n() != bottom + top {
            return Err(format!(
                "{} arcs cannot pair {bottom} + {top} points",
                disk.n()
            ));
        }
        Ok(TLPairing { bottom, top, disk })
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn disk(&self) -> &Matching {
        &self.disk
    }

    fn pos_of(&self, e: End) -> usize {
        match e {
            End::Bottom(i) => {
                debug_assert!(1 <= i && i <= self.bottom);
                i
            }
            End::Top(j) => {
                debug_assert!(1 <= j && j <= self.top);
                self.bottom + (self.top + 1 - j)
            }
        }
    }

    fn end_at(&self, pos: usize) -> End {
        if pos <= self.bottom {
            End::Bottom(pos)
        } else {
            End::Top(self.top + 1 - (pos - self.bottom))
        }
    }

    /// The boundary end stored at disk position `pos` (see type docs for
    /// the disk coordinate layout).
    pub fn end_at_pos(&self, pos: usize) -> End {
        self.end_at(pos)
    }

    /// The other end of the strand attached at `e`.
    pub fn partner(&self, e: End) -> End {
        self.end_at(self.disk.partner(self.pos_of(e)))
    }

    /// Build from a list of end pairs.
    pub fn from_ends(
        bottom: usize,
        top: usize,
        pairs: &[(End, End)],
    ) -> Result<Self, String> {
        let probe = TLPairing {
            bottom,
            top,
            disk: Matching::empty(),
        };
        let arcs = pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (probe.pos_of(a), probe.pos_of(b));
                (x.min(y), x.max(y))
            })
            .collect();
        Self::new(bottom, top, arcs)
    }

    /// `n` vertical strands.
    pub fn identity(n: usize) -> Self {
        let arcs = (1..=n).map(|i| (i, 2 * n + 1 - i)).collect();
        Self::new(n, n, arcs).expect("identity is planar")
    }

    /// `width -> width - 2`: join bottom points `i, i+1`, pass the rest.
    pub fn cap(width: usize, i: usize) -> Self {
        assert!(width >= 2 && (1..width).contains(&i));
        let mut pairs = vec![(End::Bottom(i), End::Bottom(i + 1))];
        for j in 1..=width {
            if j == i || j == i + 1 {
                continue;
            }
            let t = if j < i { j } else { j - 2 };
            pairs.push((End::Bottom(j), End::Top(t)));
        }
        Self::from_ends(width, width - 2, &pairs).expect("cap is planar")
    }

    /// `width -> width + 2`: insert a new pair at top positions `i, i+1`.
    pub fn cup(width: usize, i: usize) -> Self {
        assert!((1..=width + 1).contains(&i));
        let mut pairs = vec![(End::Top(i), End::Top(i + 1))];
        for j in 1..=width {
            let t = if j < i { j } else { j + 2 };
            pairs.push((End::Bottom(j), End::Top(t)));
        }
        Self::from_ends(width, width + 2, &pairs).expect("cup is planar")
    }

    /// The cap-cup generator on `width` strands at position `i`.
    pub fn u(width: usize, i: usize) -> Self {
        assert!(width >= 2 && (1..width).contains(&i));
        let mut pairs = vec![
            (End::Bottom(i), End::Bottom(i + 1)),
            (End::Top(i), End::Top(i + 1)),
        ];
        for j in 1..=width {
            if j == i || j == i + 1 {
                continue;
            }
            pairs.push((End::Bottom(j), End::Top(j)));
        }
        Self::from_ends(width, width, &pairs).expect("u is planar")
    }

    /// All crossingless `(bottom, top)` pairings.
    pub fn all(bottom: usize, top: usize) -> Vec<Self> {
        if (bottom + top) % 2 != 0 {
            return Vec::new();
        }
        Matching::all((bottom + top) / 2)
            .into_iter()
            .map(|disk| TLPairing { bottom, top, disk })
            .collect()
    }

    /// Horizontal juxtaposition, `other` to the right of `self`.
    pub fn tensor(&self, other: &Self) -> Self {
        let bottom = self.bottom + other.bottom;
        let top = self.top + other.top;
        let mut pairs = Vec::new();
        let mut push = |pairing: &TLPairing, shift_b: usize, shift_t: usize| {
            for &(p, q) in pairing.disk.arcs() {
                let map = |e: End| match e {
                    End::Bottom(i) => End::Bottom(i + shift_b),
                    End::Top(j) => End::Top(j + shift_t),
                };
                pairs.push((map(pairing.end_at(p)), map(pairing.end_at(q))));
            }
        };
        push(self, 0, 0);
        push(other, self.bottom, self.top);
        Self::from_ends(bottom, top, &pairs).expect("juxtaposition is planar")
    }

    /// View a linear matching as a `(0, 2n)` cup pairing (point `p` of the
    /// matching becomes top point `p`).
    pub fn from_matching(m: &Matching) -> Self {
        let n2 = 2 * m.n();
        let pairs: Vec<(End, End)> = m
            .arcs()
            .iter()
            .map(|&(l, r)| (End::Top(l), End::Top(r)))
            .collect();
        Self::from_ends(0, n2, &pairs).expect("matching is planar")
    }

    /// Inverse of [`TLPairing::from_matching`]; the pairing must have no
    /// bottom points.
    pub fn to_matching(&self) -> Matching {
        assert_eq!(self.bottom, 0, "only cup pairings convert to matchings");
        let arcs = self
            .disk
            .arcs()
            .iter()
            .map(|&(p, q)| {
                let (End::Top(a), End::Top(b)) = (self.end_at(p), self.end_at(q)) else {
                    unreachable!("no bottom points");
                };
                (a.min(b), a.max(b))
            })
            .collect();
        Matching::from_arcs(arcs).expect("planar")
    }

    pub fn to_json(&self) -> Value {
        let arcs: Vec<Value> = self
            .disk
            .arcs()
            .iter()
            .map(|&(p, q)| {
                let enc = |e: End| match e {
                    End::Bottom(i) => json!(["bottom", i]),
                    End::Top(j) => json!(["top", j]),
                };
                json!([enc(self.end_at(p)), enc(self.end_at(q))])
            })
            .collect();
        json!({ "bottom": self.bottom, "top": self.top, "arcs": arcs })
    }
}

impl fmt::Display for TLPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}->{}:", self.bottom, self.top)?;
        for &(p, q) in self.disk.arcs() {
            let show = |e: End| match e {
                End::Bottom(i) => format!("b{i}"),
                End::Top(j) => format!("t{j}"),
            };
            write!(f, " {}-{}", show(self.end_at(p)), show(self.end_at(q)))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for TLPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Stack `y` on top of `x`. Returns the glued pairing and the number of
/// closed loops produced.
pub fn compose_pairings(x: &TLPairing, y: &TLPairing) -> (TLPairing, usize) {
    assert_eq!(
        x.top, y.bottom,
        "stacking needs matching interface widths"
    );
    // walk ports: (side, end); side 0 = x, side 1 = y
    let step_across = |side: u8, e: End| -> Option<(u8, End)> {
        match (side, e) {
            (0, End::Top(j)) => Some((1, End::Bottom(j))),
            (1, End::Bottom(j)) => Some((0, End::Top(j))),
            _ => None, // outer boundary
        }
    };
    let mut visited: BTreeSet<(u8, usize, bool)> = BTreeSet::new();
    // key: (side, index, is_top_of_that_side)
    let key = |side: u8, e: End| match e {
        End::Bottom(i) => (side, i, false),
        End::Top(j) => (side, j, true),
    };
    let pairing_of = |side: u8| if side == 0 { x } else { y };
    let mut arcs: Vec<(End, End)> = Vec::new();
    let mut starts: Vec<(u8, End)> = Vec::new();
    for i in 1..=x.bottom {
        starts.push((0, End::Bottom(i)));
    }
    for j in 1..=y.top {
        starts.push((1, End::Top(j)));
    }
    for &(side0, e0) in &starts {
        if visited.contains(&key(side0, e0)) {
            continue;
        }
        visited.insert(key(side0, e0));
        let (mut side, mut e) = (side0, e0);
        let terminal = loop {
            let p = pairing_of(side).partner(e);
            visited.insert(key(side, p));
            match step_across(side, p) {
                Some((s2, e2)) => {
                    visited.insert(key(s2, e2));
                    side = s2;
                    e = e2;
                }
                None => break (side, p),
            }
        };
        // express both endpoints in final coordinates
        let fin = |side: u8, e: End| match (side, e) {
            (0, End::Bottom(i)) => End::Bottom(i),
            (1, End::Top(j)) => End::Top(j),
            _ => unreachable!("boundary ports only"),
        };
        arcs.push((fin(side0, e0), fin(terminal.0, terminal.1)));
    }
    // unvisited middle ports form closed loops
    let mut circles = 0;
    for j in 1..=x.top {
        if visited.contains(&key(0, End::Top(j))) {
            continue;
        }
        circles += 1;
        let (mut side, mut e) = (0u8, End::Top(j));
        loop {
            visited.insert(key(side, e));
            let p = pairing_of(side).partner(e);
            visited.insert(key(side, p));
            let (s2, e2) = step_across(side, p).expect("loop stays in the middle");
            if visited.contains(&key(s2, e2)) && (s2, e2) == (0, End::Top(j)) {
                break;
            }
            side = s2;
            e = e2;
            if (side, e) == (0, End::Top(j)) {
                break;
            }
        }
    }
    let result = TLPairing::from_ends(x.bottom, y.top, &arcs).expect("gluing is planar");
    (result, circles)
}

/// A formal combination of pairings with a common shape.
pub type TLElement<C> = LinComb<TLPairing, C>;

/// Bilinear extension of stacking; each loop contributes `delta`.
pub fn compose_elements<C: Ring>(x: &TLElement<C>, y: &TLElement<C>, delta: &C) -> TLElement<C> {
    let mut out = TLElement::new();
    for (p, c) in x.terms() {
        for (q, d) in y.terms() {
            let (r, circles) = compose_pairings(p, q);
            let mut coeff = c.mul(d);
            for _ in 0..circles {
                coeff = coeff.mul(delta);
            }
            out.add_term(r, coeff);
        }
    }
    out
}

/// Bilinear horizontal juxtaposition.
pub fn tensor_elements<C: Ring>(x: &TLElement<C>, y: &TLElement<C>) -> TLElement<C> {
    let mut out = TLElement::new();
    for (p, c) in x.terms() {
        for (q, d) in y.terms() {
            out.add_term(p.tensor(q), c.mul(d));
        }
    }
    out
}

/// The loop value `-q - q^{-1}` over the integers in `v`.
pub fn delta_laurent() -> LaurentV<BigInt> {
    LaurentV::q_pow(1).neg().sub(&LaurentV::q_pow(-1))
}

/// One layer of a slice word, acting on the current width.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slice {
    /// Join strands `i, i+1` (width drops by 2).
    Cap(usize),
    /// Insert a new pair at positions `i, i+1` (width grows by 2).
    Cup(usize),
    /// Positive crossing of strands `i, i+1`.
    Xp(usize),
    /// Negative crossing of strands `i, i+1`.
    Xm(usize),
}

/// A diagram described bottom-to-top by elementary slices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SliceWord {
    pub bottom: usize,
    pub slices: Vec<Slice>,
}

impl SliceWord {
    /// The widths after each slice; errors on out-of-range indices.
    pub fn widths(&self) -> Result<Vec<usize>, String> {
        let mut w = self.bottom;
        let mut out = Vec::new();
        for (idx, s) in self.slices.iter().enumerate() {
            match *s {
                Slice::Cap(i) => {
                    if w < 2 || i == 0 || i + 1 > w {
                        return Err(format!("slice {idx}: cap {i} at width {w}"));
                    }
                    w -= 2;
                }
                Slice::Cup(i) => {
                    if i == 0 || i > w + 1 {
                        return Err(format!("slice {idx}: cup {i} at width {w}"));
                    }
                    w += 2;
                }
                Slice::Xp(i) | Slice::Xm(i) => {
                    if w < 2 || i == 0 || i + 1 > w {
                        return Err(format!("slice {idx}: crossing {i} at width {w}"));
                    }
                }
            }
            out.push(w);
        }
        Ok(out)
    }

    /// The top width of the word.
    pub fn top(&self) -> Result<usize, String> {
        Ok(self.widths()?.last().copied().unwrap_or(self.bottom))
    }

    pub fn to_json(&self) -> Value {
        let slices: Vec<Value> = self
            .slices
            .iter()
            .map(|s| match *s {
                Slice::Cap(i) => json!(["cap", i]),
                Slice::Cup(i) => json!(["cup", i]),
                Slice::Xp(i) => json!(["xp", i]),
                Slice::Xm(i) => json!(["xm", i]),
            })
            .collect();
        json!({ "bottom": self.bottom, "slices": slices })
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let bottom = v["bottom"].as_u64().ok_or("missing 'bottom'")? as usize;
        let arr = v["slices"].as_array().ok_or("missing 'slices'")?;
        let mut slices = Vec::new();
        for s in arr {
            let pair = s.as_array().filter(|a| a.len() == 2).ok_or("bad slice")?;
            let name = pair[0].as_str().ok_or("bad slice name")?;
            let i = pair[1].as_u64().ok_or("bad slice index")? as usize;
            slices.push(match name {
                "cap" => Slice::Cap(i),
                "cup" => Slice::Cup(i),
                "xp" => Slice::Xp(i),
                "xm" => Slice::Xm(i),
                _ => return Err(format!("unknown slice {name:?}")),
            });
        }
        Ok(SliceWord { bottom, slices })
    }
}

/// Evaluate a slice word to a formal combination of pairings, expanding
/// each crossing as `v U_i + v^{-1} Id` (positive) or `v^{-1} U_i + v Id`
/// (negative); loops contribute `-q - q^{-1}`.
pub fn expand_word(w: &SliceWord) -> Result<TLElement<LaurentV<BigInt>>, String> {
    w.widths()?; // validate
    let delta = delta_laurent();
    let mut width = w.bottom;
    let mut cur: TLElement<LaurentV<BigInt>> =
        TLElement::term(TLPairing::identity(width), LaurentV::one());
    for s in &w.slices {
        let step: TLElement<LaurentV<BigInt>> = match *s {
            Slice::Cap(i) => {
                let t = TLElement::term(TLPairing::cap(width, i), LaurentV::one());
                width -= 2;
                t
            }
            Slice::Cup(i) => {
                let t = TLElement::term(TLPairing::cup(width, i), LaurentV::one());
                width += 2;
                t
            }
            Slice::Xp(i) => {
                let mut t = TLElement::term(TLPairing::u(width, i), LaurentV::v_pow(1));
                t.add_term(TLPairing::identity(width), LaurentV::v_pow(-1));
                t
            }
            Slice::Xm(i) => {
                let mut t = TLElement::term(TLPairing::u(width, i), LaurentV::v_pow(-1));
                t.add_term(TLPairing::identity(width), LaurentV::v_pow(1));
                t
            }
        };
        cur = compose_elements(&cur, &step, &delta);
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_composes_trivially() {
        let id3 = TLPairing::identity(3);
        let (r, circles) = compose_pairings(&id3, &id3);
        assert_eq!(r, id3);
        assert_eq!(circles, 0);
    }

    #[test]
    fn cap_after_cup_closes_a_loop() {
        let cup = TLPairing::cup(0, 1); // (0, 2)
        let cap = TLPairing::cap(2, 1); // (2, 0)
        let (r, circles) = compose_pairings(&cup, &cap);
        assert_eq!(circles, 1);
        assert_eq!(r, TLPairing::new(0, 0, vec![]).unwrap());
    }

    #[test]
    fn u_squares_to_delta_u() {
        let u = TLPairing::u(4, 2);
        let (r, circles) = compose_pairings(&u, &u);
        assert_eq!(r, u);
        assert_eq!(circles, 1);
        // and the hopping relation u1 u2 u1 = u1
        let u1 = TLPairing::u(3, 1);
        let u2 = TLPairing::u(3, 2);
        let (r12, c12) = compose_pairings(&u1, &u2);
        let (r121, c121) = compose_pairings(&r12, &u1);
        assert_eq!(r121, u1);
        assert_eq!(c12 + c121, 0);
    }

    #[test]
    fn pairing_counts_are_catalan() {
        assert_eq!(TLPairing::all(0, 6).len(), 5);
        assert_eq!(TLPairing::all(3, 3).len(), 5);
        assert_eq!(TLPairing::all(2, 4).len(), 5);
        assert_eq!(TLPairing::all(1, 2).len(), 0);
    }

    #[test]
    fn tensor_of_identities() {
        let a = TLPairing::identity(2);
        let b = TLPairing::identity(1);
        assert_eq!(a.tensor(&b), TLPairing::identity(3));
        let cup = TLPairing::cup(0, 1);
        let t = cup.tensor(&cup);
        // two cups side by side: top pairs (1,2) and (3,4)
        assert_eq!(
            t,
            TLPairing::from_ends(0, 4, &[(End::Top(1), End::Top(2)), (End::Top(3), End::Top(4))])
                .unwrap()
        );
    }

    #[test]
    fn matching_round_trip() {
        for m in Matching::all(3) {
            let p = TLPairing::from_matching(&m);
            assert_eq!(p.to_matching(), m);
        }
    }

    #[test]
    fn reidemeister_two() {
        let w = SliceWord {
            bottom: 2,
            slices: vec![Slice::Xp(1), Slice::Xm(1)],
        };
        let e = expand_word(&w).unwrap();
        assert_eq!(
            e,
            TLElement::term(TLPairing::identity(2), LaurentV::one())
        );
    }

    #[test]
    fn positive_kink_on_a_cup() {
        // a positive crossing on top of a single cup gives -q^{3/2} times it
        let w = SliceWord {
            bottom: 0,
            slices: vec![Slice::Cup(1), Slice::Xp(1)],
        };
        let e = expand_word(&w).unwrap();
        let want = TLElement::term(TLPairing::cup(0, 1), LaurentV::term(BigInt::from(-1), 3));
        assert_eq!(e, want);
    }

    #[test]
    fn slice_word_json_round_trip() {
        let w = SliceWord {
            bottom: 2,
            slices: vec![Slice::Cup(1), Slice::Xp(1), Slice::Cap(3)],
        };
        let v = w.to_json();
        assert_eq!(v["slices"][0][0], "cup");
        assert_eq!(SliceWord::from_json(&v).unwrap(), w);
    }
}
