//! The embedding of dotted diagrams into the projector-box space, its
//! inverse, and the quantum reduction built from the round trip.
//!
//! A dotted matching on `2n` points with `k` dots maps to a combination of
//! crossingless matchings of `2(n + k)` marked points: `k` left projector
//! points `1..=k`, the shifted line points `k+1..=2n+k`, and `k` right
//! projector points `2n+k+1..=2(n+k)`. Each dotted arc is replaced by a
//! left expansion arc (from a left projector point to the arc's left end)
//! and a right expansion arc (right end to a right projector point); all
//! arcs are drawn as semicircles over the point line, so the crossings are
//! forced by the geometry:
//!
//! * a left expansion arc passes **under** every arc that contained the
//!   dotted arc, and the right expansion arc passes **over** those;
//! * for two dotted arcs side by side, the right expansion arc of the left
//!   one passes **over** the left expansion arc of the right one;
//! * nested dotted arcs produce no crossing but contribute a global factor
//!   `q^{-1/2}` per nested pair.
//!
//! The expected crossing census is asserted against the geometry on every
//! call, then the Kauffman sum over smoothings is taken exactly. Terms with
//! an arc inside one projector die in both normal forms; terms with an arc
//! joining the two projectors additionally die in the smaller space, where
//! the images of the standard dotted diagrams form a basis. Reduction of an
//! arbitrary element expresses its image in that basis and pulls back.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::diagrams::{Diagram, Matching, UnionFind};
use crate::exactmath::{LaurentV, LinComb, Ring};
use crate::skein::SkeinElement;

use super::{delta_laurent, TLElement};

type L = LaurentV<BigInt>;

/// Formal combination of crossingless matchings of the `2(n+k)` marked
/// points.
pub type CupElement<C> = LinComb<Matching, C>;

/// Convert a bottomless pairing element to a matching combination.
pub fn cup_element<C: Ring>(e: &TLElement<C>) -> CupElement<C> {
    let mut out = CupElement::new();
    for (p, c) in e.terms() {
        out.add_term(p.to_matching(), c.clone());
    }
    out
}

fn in_left_proj(p: usize, k: usize) -> bool {
    p <= k
}

fn in_right_proj(p: usize, n: usize, k: usize) -> bool {
    p > 2 * n + k
}

/// Both endpoints inside a single projector.
pub fn arc_in_projector(arc: (usize, usize), n: usize, k: usize) -> bool {
    (in_left_proj(arc.0, k) && in_left_proj(arc.1, k))
        || (in_right_proj(arc.0, n, k) && in_right_proj(arc.1, n, k))
}

/// One endpoint in each projector.
pub fn arc_joins_projectors(arc: (usize, usize), n: usize, k: usize) -> bool {
    in_left_proj(arc.0, k) && in_right_proj(arc.1, n, k)
}

/// Drop terms containing an arc inside a single projector.
pub fn stilde_normal_form<C: Ring>(e: &CupElement<C>, n: usize, k: usize) -> CupElement<C> {
    let mut out = CupElement::new();
    for (m, c) in e.terms() {
        if m.arcs().iter().all(|&a| !arc_in_projector(a, n, k)) {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// Additionally drop terms with an arc joining the two projectors.
pub fn s_normal_form<C: Ring>(e: &CupElement<C>, n: usize, k: usize) -> CupElement<C> {
    let mut out = CupElement::new();
    for (m, c) in stilde_normal_form(e, n, k).terms() {
        if m.arcs()
            .iter()
            .all(|&a| !arc_joins_projectors(a, n, k))
        {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// Crossingless matchings with no arc inside one projector.
pub fn stilde_basis(n: usize, k: usize) -> Vec<Matching> {
    Matching::all(n + k)
        .into_iter()
        .filter(|m| m.arcs().iter().all(|&a| !arc_in_projector(a, n, k)))
        .collect()
}

/// [`stilde_basis`] members with no arc joining the two projectors.
pub fn s_basis(n: usize, k: usize) -> Vec<Matching> {
    stilde_basis(n, k)
        .into_iter()
        .filter(|m| m.arcs().iter().all(|&a| !arc_joins_projectors(a, n, k)))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Line,
    LeftExp(usize),
    RightExp(usize),
}

/// Exact x-coordinate of the crossing of two interleaved semicircles,
/// passed in interleave order (`c1.0 < c2.0 < c1.1 < c2.1`).
fn crossing_x(c1: (usize, usize), c2: (usize, usize)) -> BigRational {
    let half = |a: usize, b: usize, sub: bool| {
        let s = if sub { a as i64 - b as i64 } else { a as i64 + b as i64 };
        BigRational::new(BigInt::from(s), BigInt::from(2))
    };
    let m1 = half(c1.0, c1.1, false);
    let r1 = half(c1.1, c1.0, true);
    let m2 = half(c2.0, c2.1, false);
    let r2 = half(c2.1, c2.0, true);
    let num = &r1 * &r1 - &r2 * &r2 + &m2 * &m2 - &m1 * &m1;
    let den = BigRational::from_integer(BigInt::from(2)) * (&m2 - &m1);
    num / den
}

/// The embedding of a diagram with exactly `k` dots, one per dotted arc,
/// as the exact Kauffman sum over smoothings of the forced crossings.
pub fn psi(d: &Diagram, n: usize, k: usize) -> CupElement<L> {
    let m = d.matching();
    assert_eq!(m.n(), n, "diagram has {} arcs, expected {n}", m.n());
    assert_eq!(d.total_dots() as usize, k, "diagram must carry exactly k dots");
    for &mult in d.dots().values() {
        assert_eq!(mult, 1, "at most one dot per arc in the quantum setting");
    }

    // dotted arcs in left-endpoint order; undotted arcs as stored
    let dotted: Vec<(usize, usize)> = d.dots().keys().map(|&l| m.arc_of(l)).collect();
    let undotted: Vec<(usize, usize)> = m
        .arcs()
        .iter()
        .copied()
        .filter(|&(l, _)| d.dots_on(l) == 0)
        .collect();

    let mut by_right: Vec<usize> = (0..dotted.len()).collect();
    by_right.sort_by_key(|&i| dotted[i].1);
    let mut right_rank = vec![0usize; dotted.len()];
    for (rank, &i) in by_right.iter().enumerate() {
        right_rank[i] = rank;
    }

    let total = 2 * (n + k);
    let mut chords: Vec<(usize, usize, Kind)> = Vec::new();
    for &(l, r) in &undotted {
        chords.push((l + k, r + k, Kind::Line));
    }
    for (i, &(l, r)) in dotted.iter().enumerate() {
        chords.push((k - i, l + k, Kind::LeftExp(i)));
        chords.push((r + k, total - right_rank[i], Kind::RightExp(i)));
    }
    let line_idx = |u: usize| u;
    let left_idx = |i: usize| undotted.len() + 2 * i;
    let right_idx = |i: usize| undotted.len() + 2 * i + 1;

    // the census: which pairs must cross, and which chord passes over
    let contains =
        |outer: (usize, usize), inner: (usize, usize)| outer.0 < inner.0 && inner.1 < outer.1;
    let mut predicted: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut put = |a: usize, b: usize, over: usize| {
        predicted.insert((a.min(b), a.max(b)), over);
    };
    for (i, &da) in dotted.iter().enumerate() {
        for (u, &ua) in undotted.iter().enumerate() {
            if contains(ua, da) {
                put(left_idx(i), line_idx(u), line_idx(u));
                put(right_idx(i), line_idx(u), right_idx(i));
            }
        }
        for (j, &db) in dotted.iter().enumerate() {
            if i != j && da.1 < db.0 {
                put(right_idx(i), left_idx(j), right_idx(i));
            }
        }
    }

    struct Crossing {
        c1: usize,
        c2: usize,
        over_is_c2: bool,
        x: BigRational,
    }
    let span = |ci: usize| (chords[ci].0, chords[ci].1);
    let crosses = |a: (usize, usize), b: (usize, usize)| {
        (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
    };
    let mut crossings: Vec<Crossing> = Vec::new();
    for a in 0..chords.len() {
        for b in a + 1..chords.len() {
            if !crosses(span(a), span(b)) {
                assert!(
                    !predicted.contains_key(&(a, b)),
                    "predicted crossing {:?} x {:?} is not geometric",
                    chords[a],
                    chords[b]
                );
                continue;
            }
            let over = *predicted.get(&(a, b)).unwrap_or_else(|| {
                panic!(
                    "geometric crossing {:?} x {:?} outside the census",
                    chords[a], chords[b]
                )
            });
            let (c1, c2) = if span(a).0 < span(b).0 { (a, b) } else { (b, a) };
            crossings.push(Crossing {
                c1,
                c2,
                over_is_c2: over == c2,
                x: crossing_x(span(c1), span(c2)),
            });
        }
    }

    // split chords into segments at their crossings, ordered along the chord
    let mut on_chord: Vec<Vec<(BigRational, usize, usize)>> = vec![Vec::new(); chords.len()];
    for (t, cr) in crossings.iter().enumerate() {
        let tie1 = chords[cr.c2].0 + chords[cr.c2].1;
        let tie2 = chords[cr.c1].0 + chords[cr.c1].1;
        on_chord[cr.c1].push((cr.x.clone(), tie1, t));
        on_chord[cr.c2].push((cr.x.clone(), tie2, t));
    }
    for v in &mut on_chord {
        v.sort();
    }
    let mut seg_offset = vec![0usize; chords.len()];
    let mut total_segs = 0;
    for (ci, v) in on_chord.iter().enumerate() {
        seg_offset[ci] = total_segs;
        total_segs += v.len() + 1;
    }
    // per crossing: (west, east) segments on c1 and on c2
    let mut sides = vec![((0usize, 0usize), (0usize, 0usize)); crossings.len()];
    for (ci, v) in on_chord.iter().enumerate() {
        for (p, &(_, _, t)) in v.iter().enumerate() {
            let we = (seg_offset[ci] + p, seg_offset[ci] + p + 1);
            if crossings[t].c1 == ci {
                sides[t].0 = we;
            } else {
                sides[t].1 = we;
            }
        }
    }

    let nested_pairs = {
        let mut c = 0i64;
        for i in 0..dotted.len() {
            for j in i + 1..dotted.len() {
                if contains(dotted[i], dotted[j]) || contains(dotted[j], dotted[i]) {
                    c += 1;
                }
            }
        }
        c
    };
    let prefactor = L::v_pow(-nested_pairs);
    let delta = delta_laurent();
    let nc = crossings.len();
    assert!(nc <= 24, "state sum with {nc} crossings is out of desk scale");

    let mut out = CupElement::new();
    for state in 0..(1u64 << nc) {
        let mut uf = UnionFind::new(total_segs);
        let mut vexp = 0i64;
        for (t, cr) in crossings.iter().enumerate() {
            let nested = (state >> t) & 1 == 1;
            let ((w1, e1), (w2, e2)) = sides[t];
            if nested {
                // reconnect into the nested configuration (a,d),(b,c)
                uf.union(w1, e2);
                uf.union(e1, w2);
            } else {
                uf.union(w1, w2);
                uf.union(e1, e2);
            }
            // Kauffman weight: when the right-hand chord passes over, the
            // disjoint smoothing carries v^{-1} and the nested one v;
            // swapping the over strand swaps the weights.
            vexp += match (cr.over_is_c2, nested) {
                (true, false) | (false, true) => -1,
                _ => 1,
            };
        }
        let mut ends: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (ci, c) in chords.iter().enumerate() {
            let first = seg_offset[ci];
            let last = seg_offset[ci] + on_chord[ci].len();
            ends.entry(uf.find(first)).or_default().push(c.0);
            ends.entry(uf.find(last)).or_default().push(c.1);
        }
        let mut roots = BTreeSet::new();
        for s in 0..total_segs {
            roots.insert(uf.find(s));
        }
        let mut arcs = Vec::new();
        let mut circles = 0usize;
        for root in roots {
            match ends.get(&root) {
                Some(pts) => {
                    assert_eq!(pts.len(), 2, "an open strand has exactly two ends");
                    arcs.push((pts[0].min(pts[1]), pts[0].max(pts[1])));
                }
                None => circles += 1,
            }
        }
        let matching = Matching::from_arcs(arcs).expect("smoothed states are planar");
        let mut coeff = prefactor.mul(&L::v_pow(vexp));
        for _ in 0..circles {
            coeff = coeff.mul(&delta);
        }
        out.add_term(matching, coeff);
    }
    out
}

/// Linear extension of [`psi`] to elements whose terms all carry `k` dots.
pub fn psi_element(x: &SkeinElement<L>, n: usize, k: usize) -> CupElement<L> {
    let mut out = CupElement::new();
    for (d, c) in x.terms() {
        out = out.add(&psi(d, n, k).scale(c));
    }
    out
}

/// Recover a dotted preimage of a reduced-basis matching, with the
/// coefficient making `coeff * psi(preimage)` equal to the input exactly.
///
/// Every arc must avoid the projector interiors and the two projectors
/// must not be joined; then planarity forces all left-projector
/// attachment points to precede all right-projector ones, so the dotted
/// arcs are the rainbow over those attachment points.
pub fn psi_inverse(mch: &Matching, n: usize, k: usize) -> Result<(Diagram, L), String> {
    assert_eq!(mch.n(), n + k, "matching must have 2(n+k) points");
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut line_arcs = Vec::new();
    for &(a, b) in mch.arcs() {
        if arc_in_projector((a, b), n, k) {
            return Err(format!("arc ({a}, {b}) sits inside one projector"));
        }
        if arc_joins_projectors((a, b), n, k) {
            return Err(format!("arc ({a}, {b}) joins the two projectors"));
        }
        if in_left_proj(a, k) {
            xs.push(b);
        } else if in_right_proj(b, n, k) {
            ys.push(a);
        } else {
            line_arcs.push((a - k, b - k));
        }
    }
    assert_eq!(xs.len(), k);
    assert_eq!(ys.len(), k);
    xs.sort_unstable();
    ys.sort_unstable();
    if k > 0 {
        // planarity forces the left attachments left of the right ones
        assert!(xs[k - 1] < ys[0], "attachment points must be separated");
    }
    let mut arcs = line_arcs;
    let mut dots = BTreeMap::new();
    for i in 0..k {
        let (l, r) = (xs[i] - k, ys[k - 1 - i] - k);
        arcs.push((l, r));
        dots.insert(l, 1u32);
    }
    let matching = Matching::from_arcs(arcs).expect("rainbow preimage is planar");
    let diagram = Diagram::new(matching, dots).expect("dots sit on arcs");
    // one factor of q^{1/2} per nested pair of reconstructed dotted arcs
    let mut nested = 0i64;
    let darcs: Vec<(usize, usize)> = diagram.dots().keys().map(|&l| diagram.matching().arc_of(l)).collect();
    for i in 0..darcs.len() {
        for j in i + 1..darcs.len() {
            let (a, b) = (darcs[i], darcs[j]);
            if (a.0 < b.0 && b.1 < a.1) || (b.0 < a.0 && a.1 < b.1) {
                nested += 1;
            }
        }
    }
    Ok((diagram, L::v_pow(nested)))
}

/// The basis images `psi(b)` for `b` in the standard spanning set, each a
/// single surviving term with unit monomial coefficient; the images are
/// pairwise distinct and exhaust the reduced cup basis.
pub struct Section {
    n: usize,
    k: usize,
    table: BTreeMap<Matching, (Diagram, L)>,
}

impl Section {
    pub fn new(n: usize, k: usize) -> Self {
        let mut table: BTreeMap<Matching, (Diagram, L)> = BTreeMap::new();
        for b in Diagram::basis(n, k) {
            let img = s_normal_form(&psi(&b, n, k), n, k);
            assert_eq!(
                img.num_terms(),
                1,
                "standard diagram must have a single surviving image term"
            );
            let (mch, c) = img.terms().next().unwrap();
            let (_, c0) = c
                .as_monomial()
                .expect("surviving coefficient must be a monomial");
            assert!(
                c0 == BigInt::from(1) || c0 == BigInt::from(-1),
                "surviving coefficient must be a unit"
            );
            let prev = table.insert(mch.clone(), (b, c.clone()));
            assert!(prev.is_none(), "basis images must be pairwise distinct");
        }
        let sb = s_basis(n, k);
        assert_eq!(table.len(), sb.len(), "images must exhaust the cup basis");
        for m in &sb {
            assert!(table.contains_key(m));
        }
        Section { n, k, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Pull a reduced cup element back through the basis images.
    pub fn express(&self, e: &CupElement<L>) -> SkeinElement<L> {
        let mut out = SkeinElement::new();
        for (m, coeff) in e.terms() {
            let (b, c) = self
                .table
                .get(m)
                .expect("element must be supported on the cup basis");
            let (exp, c0) = c.as_monomial().unwrap();
            // the inverse of the unit monomial ±v^e is ±v^{-e}
            out.add_term(b.clone(), coeff.mul(&L::term(c0.clone(), -exp)));
        }
        out
    }
}

/// Reduce a quantum skein element to the standard basis through the
/// projector-box space. All output coefficients lie in `Z[q, q^{-1}]`.
pub fn reduce_quantum(x: &SkeinElement<L>, n: usize, k: usize) -> SkeinElement<L> {
    reduce_quantum_with(x, &Section::new(n, k))
}

/// [`reduce_quantum`] against a prebuilt section table.
pub fn reduce_quantum_with(x: &SkeinElement<L>, section: &Section) -> SkeinElement<L> {
    let (n, k) = (section.n, section.k);
    let img = s_normal_form(&psi_element(x, n, k), n, k);
    let out = section.express(&img);
    for (_, c) in out.terms() {
        assert!(
            c.is_q_polynomial(),
            "reduced coefficients must have integer q-powers, got {c}"
        );
    }
    out
}

/// The relation element `d - reduce_quantum(d)`: zero in the quotient,
/// and by construction annihilated by the reduction.
pub fn derive_quantum_relation(d: &Diagram, n: usize, k: usize) -> SkeinElement<L> {
    let e = SkeinElement::term(d.clone(), L::one());
    e.sub(&reduce_quantum(&e, n, k))
}

/// Reduce an integer element at `q = 1` by the generic engine.
pub fn reduce_q1_via_tl(x: &SkeinElement<BigInt>, n: usize, k: usize) -> SkeinElement<BigInt> {
    let lifted = x.map_coeffs(|c| L::constant(c.clone()));
    reduce_quantum(&lifted, n, k).map_coeffs(|c| c.specialize_q_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::classical;
    use crate::tlcalc::{expand_word, Slice, SliceWord};

    fn mch(arcs: Vec<(usize, usize)>) -> Matching {
        Matching::from_arcs(arcs).unwrap()
    }

    fn diag(arcs: Vec<(usize, usize)>, dots: Vec<usize>) -> Diagram {
        let mut d = Diagram::undotted(mch(arcs));
        for l in dots {
            d = d.with_dot(l);
        }
        d
    }

    #[test]
    fn single_dotted_arc_embeds_trivially() {
        let d = diag(vec![(1, 2)], vec![1]);
        let img = psi(&d, 1, 1);
        assert_eq!(img, CupElement::term(mch(vec![(1, 2), (3, 4)]), L::one()));
    }

    #[test]
    fn undotted_matchings_embed_as_themselves() {
        for m in Matching::all(3) {
            let d = Diagram::undotted(m.clone());
            let img = psi(&d, 3, 0);
            assert_eq!(img, CupElement::term(m, L::one()));
        }
    }

    #[test]
    fn worked_state_sum() {
        // dot on (2,3) inside undotted (1,4): two forced crossings, four states
        let d = diag(vec![(1, 4), (2, 3)], vec![2]);
        let img = psi(&d, 2, 1);
        let mut want = CupElement::term(mch(vec![(1, 2), (3, 4), (5, 6)]), L::v_pow(-2));
        want.add_term(mch(vec![(1, 2), (3, 6), (4, 5)]), L::one());
        want.add_term(mch(vec![(1, 4), (2, 3), (5, 6)]), L::one());
        want.add_term(mch(vec![(1, 6), (2, 3), (4, 5)]), L::v_pow(2));
        assert_eq!(img, want);
        // the last term joins the projectors and dies in the reduced space
        let s = s_normal_form(&img, 2, 1);
        assert_eq!(s.num_terms(), 3);
    }

    #[test]
    fn nested_dotted_pair_weights() {
        // both arcs of the nested matching dotted: no crossings, prefactor q^{-1/2}
        let d = diag(vec![(1, 4), (2, 3)], vec![1, 2]);
        let img = psi(&d, 2, 2);
        assert_eq!(
            img,
            CupElement::term(mch(vec![(1, 4), (2, 3), (5, 8), (6, 7)]), L::v_pow(-1))
        );
        // the disjoint dotted pair has one crossing and reaches the same
        // surviving term with the same weight
        let d2 = diag(vec![(1, 2), (3, 4)], vec![1, 3]);
        let img2 = s_normal_form(&psi(&d2, 2, 2), 2, 2);
        assert_eq!(img2, s_normal_form(&img, 2, 2));
    }

    #[test]
    fn interwoven_projector_arc_expands_with_correction() {
        // an arc between the two projectors woven under both neighbours
        let w = SliceWord {
            bottom: 0,
            slices: vec![Slice::Cup(1), Slice::Cup(2), Slice::Xm(1), Slice::Xm(3)],
        };
        let e = cup_element(&expand_word(&w).unwrap());
        let s = s_normal_form(&e, 1, 1);
        let want = CupElement::term(
            mch(vec![(1, 2), (3, 4)]),
            L::one().sub(&L::q_pow(-2)),
        );
        assert_eq!(s, want);
        // while the unwoven projector-to-projector arc is plain zero
        let unwoven = CupElement::term(mch(vec![(1, 4), (2, 3)]), L::one());
        assert!(s_normal_form(&unwoven, 1, 1).is_zero());
    }

    #[test]
    fn section_tables_close_up() {
        for n in 1..=3 {
            for k in 0..=n {
                let section = Section::new(n, k); // asserts internally
                assert_eq!(
                    s_basis(n, k).len(),
                    Diagram::basis(n, k).len(),
                    "cup basis count at ({n}, {k})"
                );
                drop(section);
            }
        }
    }

    #[test]
    fn reduction_of_nested_dot() {
        let d = diag(vec![(1, 4), (2, 3)], vec![2]);
        let red = reduce_quantum(&SkeinElement::term(d, L::one()), 2, 1);
        let mut want = SkeinElement::term(diag(vec![(1, 2), (3, 4)], vec![1]), L::one());
        want.add_term(diag(vec![(1, 2), (3, 4)], vec![3]), L::one());
        want.add_term(diag(vec![(1, 4), (2, 3)], vec![1]), L::q_pow(-1));
        assert_eq!(red, want);
    }

    #[test]
    fn reduction_of_nested_double_dot() {
        let d = diag(vec![(1, 4), (2, 3)], vec![1, 2]);
        let red = reduce_quantum(&SkeinElement::term(d, L::one()), 2, 2);
        let want = SkeinElement::term(diag(vec![(1, 2), (3, 4)], vec![1, 3]), L::one());
        assert_eq!(red, want);
    }

    #[test]
    fn round_trip_over_the_cup_basis() {
        for n in 1..=3usize {
            for k in 0..=n.min(2) {
                for m in s_basis(n, k) {
                    let (d, c) = psi_inverse(&m, n, k).unwrap();
                    let img = psi(&d, n, k);
                    assert_eq!(img.num_terms(), 1, "rainbow preimages have no crossings");
                    assert_eq!(
                        img.scale(&c),
                        CupElement::term(m.clone(), L::one()),
                        "round trip at ({n}, {k})"
                    );
                }
            }
        }
    }

    #[test]
    fn psi_inverse_rejects_bad_arcs() {
        assert!(psi_inverse(&mch(vec![(1, 2), (3, 4)]), 0, 2).is_err()); // inside left projector
        assert!(psi_inverse(&mch(vec![(1, 4), (2, 3)]), 1, 1).is_err()); // joins projectors
    }

    #[test]
    fn derived_relations_vanish_and_specialize() {
        for n in 1..=3usize {
            for k in 0..=n {
                let section = Section::new(n, k);
                for d in Diagram::all_dotted(n, k) {
                    let e = SkeinElement::term(d.clone(), L::one());
                    let red = reduce_quantum_with(&e, &section);
                    let rel = e.sub(&red);
                    assert!(
                        reduce_quantum_with(&rel, &section).is_zero(),
                        "relation from {d} must die"
                    );
                    // q = -1: termwise match with the classical engine
                    let classical_red = classical::reduce(&SkeinElement::term(
                        d.clone(),
                        BigInt::from(1),
                    ));
                    let spec = red.map_coeffs(|c| c.specialize_q_minus1());
                    let lifted = classical_red.map_coeffs(|c| {
                        crate::exactmath::GaussianRational::from_int_pair(
                            c.clone(),
                            BigInt::from(0),
                        )
                    });
                    assert_eq!(spec, lifted, "q = -1 specialization of {d}");
                }
            }
        }
    }

    #[test]
    fn standard_diagrams_are_fixed_points() {
        for n in 1..=3usize {
            for k in 0..=n {
                let section = Section::new(n, k);
                for b in Diagram::basis(n, k) {
                    let e = SkeinElement::term(b.clone(), L::one());
                    assert_eq!(reduce_quantum_with(&e, &section), e);
                }
            }
        }
    }
}
