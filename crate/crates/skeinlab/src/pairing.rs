//! The trace pairing on dotted matchings and its dual bases.
//!
//! Gluing a dotted diagram `a` to the 180-degree rotation of a dotted
//! diagram `b` (with the dots of `b` turned into X marks) closes the picture
//! into a disjoint union of decorated circles. Each circle evaluates to an
//! integer — `2` when it is undecorated, `1` when its dots and X marks
//! alternate around the circle, `0` otherwise — and the pairing `<a, b>` is
//! the product of the circle values. This module computes the pairing, the
//! Gram matrices of the dotted basis, and two constructions of the dual
//! basis: a Gram-inversion oracle and the structured build that attaches one
//! symmetrizer per unit of the recursive depth statistic [`TupleNotation::r`].

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use serde_json::{json, Value};

use crate::diagrams::{Block, Diagram, Matching, TupleNotation};
use crate::exactmath::{binomial, Field, LinComb, Matrix, Ring};
use crate::skein::SkeinElement;
use crate::tlcalc::jw::jones_wenzl_delta2;
use crate::tlcalc::{End, TLPairing};

/// A single mark on a circle: a dot (from the bottom diagram) or an X (from
/// the rotated top diagram).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Decoration {
    Dot,
    X,
}

/// The circles produced by gluing a diagram to a cap configuration, each
/// recorded as its cyclic word of decorations in traversal order.
#[derive(Clone, Debug)]
pub struct ClosedDiagram {
    pub circles: Vec<Vec<Decoration>>,
}

impl ClosedDiagram {
    /// The product of the circle values.
    pub fn evaluate(&self) -> BigInt {
        let mut acc = BigInt::one();
        for word in &self.circles {
            acc *= evaluate_circle(word);
            if acc.is_zero() {
                return acc;
            }
        }
        acc
    }
}

/// Evaluate one decorated circle: `2` if it carries no decoration, `1` if
/// the decorations alternate between dots and X marks cyclically, `0`
/// otherwise. (A circle whose dots and X marks alternate necessarily carries
/// the same number of each.)
pub fn evaluate_circle(word: &[Decoration]) -> BigInt {
    if word.is_empty() {
        return BigInt::from(2);
    }
    let len = word.len();
    if (0..len).all(|i| word[i] != word[(i + 1) % len]) {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// Walk the circles formed by `bottom` arcs below the line and `top` arcs
/// above it, collecting decorations in cyclic traversal order. `dots(l)` and
/// `xs(l)` give the number of marks on the bottom (resp. top) arc whose left
/// endpoint is `l`.
fn trace_circles(
    bottom: &Matching,
    top: &Matching,
    dots: impl Fn(usize) -> usize,
    xs: impl Fn(usize) -> usize,
) -> ClosedDiagram {
    assert_eq!(
        bottom.points(),
        top.points(),
        "gluing requires matchings on the same points"
    );
    let pts = bottom.points();
    let mut visited = vec![false; pts + 1];
    let mut circles = Vec::new();
    for start in 1..=pts {
        if visited[start] {
            continue;
        }
        let mut word = Vec::new();
        let mut p = start;
        loop {
            visited[p] = true;
            let (l, _) = bottom.arc_of(p);
            for _ in 0..dots(l) {
                word.push(Decoration::Dot);
            }
            let q = bottom.partner(p);
            visited[q] = true;
            let (l2, _) = top.arc_of(q);
            for _ in 0..xs(l2) {
                word.push(Decoration::X);
            }
            p = top.partner(q);
            if p == start {
                break;
            }
        }
        circles.push(word);
    }
    ClosedDiagram { circles }
}

/// A cap configuration: a crossingless matching drawn *above* the line whose
/// arcs may carry at most one X mark each.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct XCap {
    caps: Matching,
    /// Left endpoints of the arcs carrying an X.
    xs: BTreeSet<usize>,
}

impl XCap {
    pub fn new(caps: Matching, xs: BTreeSet<usize>) -> Result<Self, String> {
        for &x in &xs {
            if x < 1 || x > caps.points() {
                return Err(format!("X position {x} out of range"));
            }
            if caps.arc_of(x).0 != x {
                return Err(format!("X position {x} is not the left endpoint of an arc"));
            }
        }
        Ok(XCap { caps, xs })
    }

    pub fn undecorated(caps: Matching) -> Self {
        XCap {
            caps,
            xs: BTreeSet::new(),
        }
    }

    pub fn caps(&self) -> &Matching {
        &self.caps
    }

    pub fn xs(&self) -> &BTreeSet<usize> {
        &self.xs
    }

    pub fn points(&self) -> usize {
        self.caps.points()
    }

    /// Mirrors [`Diagram::to_json`], with `"xs"` in place of `"dots"`.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.caps.n(),
            "arcs": self.caps.arcs().iter().map(|&(l, r)| json!([l, r])).collect::<Vec<_>>(),
            "xs": self.xs.iter().copied().collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let arcs = v["arcs"]
            .as_array()
            .ok_or("missing arcs")?
            .iter()
            .map(|a| {
                let pair = a.as_array().filter(|p| p.len() == 2).ok_or("bad arc")?;
                let l = pair[0].as_u64().ok_or("bad arc endpoint")? as usize;
                let r = pair[1].as_u64().ok_or("bad arc endpoint")? as usize;
                Ok((l, r))
            })
            .collect::<Result<Vec<_>, String>>()?;
        let caps = Matching::from_arcs(arcs)?;
        let xs = v["xs"]
            .as_array()
            .map(|a| {
                a.iter()
                    .map(|x| x.as_u64().map(|u| u as usize).ok_or("bad X position".to_string()))
                    .collect::<Result<BTreeSet<_>, _>>()
            })
            .transpose()?
            .unwrap_or_default();
        XCap::new(caps, xs)
    }
}

impl fmt::Display for XCap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &(l, r)) in self.caps.arcs().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({l} {r})")?;
            if self.xs.contains(&l) {
                write!(f, "x")?;
            }
        }
        write!(f, ")")
    }
}

/// A rational linear combination of cap configurations — the ambient space
/// in which dual basis elements are expressed.
pub type DualElement = LinComb<XCap, BigRational>;

pub fn dual_element_to_json(e: &DualElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(xc, c)| {
            let mut t = xc.to_json();
            t["coeff"] = json!(c.to_string());
            t
        })
        .collect();
    json!({ "terms": terms })
}

pub fn dual_element_from_json(v: &Value) -> Result<DualElement, String> {
    let mut e = DualElement::new();
    for t in v["terms"].as_array().ok_or("missing terms")? {
        let xc = XCap::from_json(t)?;
        let c: BigRational = t["coeff"]
            .as_str()
            .ok_or("missing coeff")?
            .parse()
            .map_err(|err| format!("bad coefficient: {err}"))?;
        e.add_term(xc, c);
    }
    Ok(e)
}

/// Rotate a dotted diagram by 180 degrees and turn its dots into X marks,
/// producing the cap configuration used on the right of the pairing.
/// Requires at most one dot per arc.
pub fn rotated_cap(b: &Diagram) -> XCap {
    let r = b.rotate180();
    let xs: BTreeSet<usize> = r.dots().keys().copied().collect();
    assert!(
        r.dots().values().all(|&m| m <= 1),
        "cap configurations carry at most one X per arc"
    );
    XCap {
        caps: r.matching().clone(),
        xs,
    }
}

/// Glue a dotted diagram (below the line) to a cap configuration (above it).
pub fn glue_decorated(a: &Diagram, top: &XCap) -> ClosedDiagram {
    trace_circles(
        a.matching(),
        &top.caps,
        |l| a.dots_on(l) as usize,
        |l| usize::from(top.xs.contains(&l)),
    )
}

/// The pairing of a dotted diagram with a cap configuration.
pub fn pair_with_cap(a: &Diagram, top: &XCap) -> BigInt {
    glue_decorated(a, top).evaluate()
}

/// The bilinear pairing of two dotted diagrams on the same `2n` points:
/// glue `a` to the rotation of `b` (dots of `b` become X marks) and evaluate
/// the circles. Diagrams with several dots on one arc are allowed; any
/// circle through such an arc picks up adjacent equal marks and vanishes.
pub fn pair(a: &Diagram, b: &Diagram) -> BigInt {
    assert_eq!(
        a.matching().points(),
        b.matching().points(),
        "pairing requires diagrams on the same points"
    );
    let r = b.rotate180();
    trace_circles(
        a.matching(),
        r.matching(),
        |l| a.dots_on(l) as usize,
        |l| r.dots_on(l) as usize,
    )
    .evaluate()
}

/// Pair a linear combination of diagrams against a single diagram.
pub fn pair_element(x: &SkeinElement<BigInt>, b: &Diagram) -> BigInt {
    let mut acc = BigInt::zero();
    for (d, c) in x.terms() {
        acc += c * pair(d, b);
    }
    acc
}

/// Pair a diagram against a rational combination of cap configurations.
pub fn pair_with_dual(a: &Diagram, e: &DualElement) -> BigRational {
    let mut acc = BigRational::zero();
    for (xc, c) in e.terms() {
        acc += c * BigRational::from_integer(pair_with_cap(a, xc));
    }
    acc
}

/// The full dotted basis of the degree-`n` module: all `B_{n,k}` for
/// `k = 0..=n`, in increasing dot count.
pub fn full_basis(n: usize) -> Vec<Diagram> {
    (0..=n).flat_map(|k| Diagram::basis(n, k)).collect()
}

/// The Gram matrix of the pairing on [`full_basis`], together with the basis
/// ordering it uses.
pub fn gram_matrix(n: usize) -> (Vec<Diagram>, Matrix<BigInt>) {
    let basis = full_basis(n);
    let g = Matrix::from_fn(basis.len(), basis.len(), |i, j| pair(&basis[i], &basis[j]));
    (basis, g)
}

/// Dual basis by brute force: invert the Gram matrix over the rationals and
/// form the dual of `b_j` as `sum_t (G^{-1})_{tj} . rotated_cap(b_t)`. Serves
/// as the oracle the structured construction is checked against.
pub fn dual_via_gram(n: usize) -> (Vec<Diagram>, Vec<DualElement>) {
    let (basis, g) = gram_matrix(n);
    let ginv = g
        .map(|z| BigRational::from_integer(z.clone()))
        .inverse()
        .expect("the Gram matrix of the dotted basis is invertible");
    let caps: Vec<XCap> = basis.iter().map(rotated_cap).collect();
    let dim = basis.len();
    let duals = (0..dim)
        .map(|j| {
            let mut e = DualElement::new();
            for (t, cap) in caps.iter().enumerate() {
                e.add_term(cap.clone(), ginv.at(t, j).clone());
            }
            e
        })
        .collect();
    (basis, duals)
}

/// Leading principal minors of the Gram matrix, as a probe of positive
/// definiteness. Reported for information: the dotted basis contains
/// isotropic vectors for `n >= 2` (a dotted arc paired with its own rotation
/// yields an X and a dot on the same circle side by side), so the form is
/// positive definite only for `n <= 1`.
#[derive(Clone, Debug)]
pub struct PositivityReport {
    pub n: usize,
    pub dim: usize,
    /// `minors[i]` is the determinant of the leading `(i+1) x (i+1)` block.
    pub minors: Vec<BigInt>,
    pub positive_definite: bool,
    /// Size of the first non-positive leading minor, if any.
    pub first_failure: Option<usize>,
}

pub fn positivity_probe(n: usize) -> PositivityReport {
    let (_, g) = gram_matrix(n);
    let dim = g.rows();
    let mut minors = Vec::with_capacity(dim);
    let mut first_failure = None;
    for i in 1..=dim {
        let sub = Matrix::from_fn(i, i, |r, c| g.at(r, c).clone());
        let det = sub.det_bareiss();
        if det <= BigInt::zero() && first_failure.is_none() {
            first_failure = Some(i);
        }
        minors.push(det);
    }
    PositivityReport {
        n,
        dim,
        minors,
        positive_definite: first_failure.is_none(),
        first_failure,
    }
}

/// The binomial-type coefficients of the dual construction: the two-variable
/// quantum binomial specialized at `q = -1`, which is `(-1)^k C(m, k)`.
pub fn q_binomial_minus_one(m: usize, k: usize) -> BigInt {
    assert!(k <= m, "binomial out of range");
    let b = binomial(m, k);
    if k % 2 == 1 { -b } else { b }
}

/// Compose a cap configuration with a Temperley-Lieb layer glued in *below*
/// it. Returns the resulting configuration together with the number of
/// undecorated circles produced, or `None` when a circle or a composite arc
/// picks up more than one X (two adjacent X marks annihilate).
fn compose_caps_below(x: &XCap, layer: &TLPairing) -> Option<(XCap, usize)> {
    let pts = x.points();
    assert_eq!(layer.bottom(), pts, "layer width mismatch");
    assert_eq!(layer.top(), pts, "layer width mismatch");
    let mut seen_top = vec![false; pts + 1];
    let mut seen_bottom = vec![false; pts + 1];
    let mut arcs = Vec::new();
    let mut xs = BTreeSet::new();
    for p in 1..=pts {
        if seen_bottom[p] {
            continue;
        }
        seen_bottom[p] = true;
        let mut xcount = 0usize;
        let mut cur = End::Bottom(p);
        let endpoint = loop {
            match layer.partner(cur) {
                End::Bottom(b) => {
                    seen_bottom[b] = true;
                    break b;
                }
                End::Top(t) => {
                    seen_top[t] = true;
                    let (l, r) = x.caps.arc_of(t);
                    if x.xs.contains(&l) {
                        xcount += 1;
                    }
                    let other = l + r - t;
                    seen_top[other] = true;
                    cur = End::Top(other);
                }
            }
        };
        let (lo, hi) = (p.min(endpoint), p.max(endpoint));
        match xcount {
            0 => {}
            1 => {
                xs.insert(lo);
            }
            _ => return None,
        }
        arcs.push((lo, hi));
    }
    let mut circles = 0usize;
    for t0 in 1..=pts {
        if seen_top[t0] {
            continue;
        }
        let mut t = t0;
        let mut xcount = 0usize;
        loop {
            seen_top[t] = true;
            let (l, r) = x.caps.arc_of(t);
            if x.xs.contains(&l) {
                xcount += 1;
            }
            let other = l + r - t;
            seen_top[other] = true;
            match layer.partner(End::Top(other)) {
                End::Top(t2) => {
                    if t2 == t0 {
                        break;
                    }
                    t = t2;
                }
                End::Bottom(_) => unreachable!("circle walk reached a free endpoint"),
            }
        }
        if xcount > 0 {
            return None;
        }
        circles += 1;
    }
    let caps = Matching::from_arcs(arcs).expect("composing planar pieces stays planar");
    Some((XCap { caps, xs }, circles))
}

/// Glue the Jones-Wenzl symmetrizer at loop value 2 onto the strands
/// `start+1 ..= start+size` below a combination of cap configurations on
/// `points` strands. Undecorated circles contribute a factor of 2; any X
/// caught on a circle, or two X marks merging onto one arc, kills the term.
pub fn attach_projector(e: &DualElement, start: usize, size: usize, points: usize) -> DualElement {
    assert!(start + size <= points, "symmetrizer out of range");
    if size <= 1 || e.is_zero() {
        return e.clone();
    }
    let jw = jones_wenzl_delta2(size);
    let left = TLPairing::identity(start);
    let right = TLPairing::identity(points - start - size);
    let layers: Vec<(TLPairing, BigRational)> = jw
        .terms()
        .map(|(t, w)| (left.tensor(t).tensor(&right), w.clone()))
        .collect();
    let mut out = DualElement::new();
    for (xcap, c) in e.terms() {
        assert_eq!(xcap.points(), points, "cap width mismatch");
        for (layer, w) in &layers {
            if let Some((xc2, circles)) = compose_caps_below(xcap, layer) {
                let mut coeff = c.mul(w);
                for _ in 0..circles {
                    coeff = coeff.add(&coeff);
                }
                out.add_term(xc2, coeff);
            }
        }
    }
    out
}

/// A cap configuration with symmetrizer boxes glued below: the pictorial
/// form of a structured dual element before expansion.
#[derive(Clone, Debug)]
pub struct XCapDiagram {
    pub caps: Matching,
    pub xs: BTreeSet<usize>,
    /// `(start, size)` pairs: a symmetrizer on strands `start+1 ..= start+size`.
    pub boxes: Vec<(usize, usize)>,
}

impl XCapDiagram {
    pub fn new(
        caps: Matching,
        xs: BTreeSet<usize>,
        boxes: Vec<(usize, usize)>,
    ) -> Result<Self, String> {
        let points = caps.points();
        XCap::new(caps.clone(), xs.clone())?;
        for &(start, size) in &boxes {
            if start + size > points {
                return Err(format!("symmetrizer ({start}, {size}) out of range"));
            }
        }
        Ok(XCapDiagram { caps, xs, boxes })
    }

    /// Expand the symmetrizer boxes into the explicit rational combination
    /// of cap configurations, attaching them in listed order.
    pub fn expand(&self) -> DualElement {
        let points = self.caps.points();
        let mut e = DualElement::term(
            XCap {
                caps: self.caps.clone(),
                xs: self.xs.clone(),
            },
            BigRational::one(),
        );
        for &(start, size) in &self.boxes {
            e = attach_projector(&e, start, size, points);
        }
        e
    }

    pub fn to_json(&self) -> Value {
        let mut v = XCap {
            caps: self.caps.clone(),
            xs: self.xs.clone(),
        }
        .to_json();
        v["projectors"] = json!(self.boxes.iter().map(|&(s, z)| json!([s, z])).collect::<Vec<_>>());
        v
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let xc = XCap::from_json(v)?;
        let boxes = v["projectors"]
            .as_array()
            .map(|a| {
                a.iter()
                    .map(|b| {
                        let pair = b.as_array().filter(|p| p.len() == 2).ok_or("bad projector")?;
                        let s = pair[0].as_u64().ok_or("bad projector")? as usize;
                        let z = pair[1].as_u64().ok_or("bad projector")? as usize;
                        Ok((s, z))
                    })
                    .collect::<Result<Vec<_>, String>>()
            })
            .transpose()?
            .unwrap_or_default();
        XCapDiagram::new(xc.caps, xc.xs, boxes)
    }
}

/// The base dual configuration for a depth-one tuple `(x^0; 1^1 ... 1^1; z^0)`
/// with `alpha` unit blocks in the middle: a single symmetrizer of width
/// `x + 2 alpha + z` whose first `x` top legs bend left into nested caps,
/// whose middle `2 alpha` legs close into X-marked caps, and whose last `z`
/// legs bend right to the end of the diagram.
pub fn bent_base(x: usize, alpha: usize, z: usize) -> DualElement {
    let s = x + 2 * alpha + z;
    let points = 2 * (x + alpha + z);
    let mut arcs = Vec::new();
    let mut xs = BTreeSet::new();
    for j in 1..=x {
        arcs.push((x + 1 - j, x + j));
    }
    for t in 1..=alpha {
        let l = 2 * x + 2 * t - 1;
        arcs.push((l, l + 1));
        xs.insert(l);
    }
    for i in 1..=z {
        arcs.push((2 * x + 2 * alpha + i, points + 1 - i));
    }
    let caps = Matching::from_arcs(arcs).expect("the bent wiring is planar");
    XCapDiagram::new(caps, xs, vec![(x, s)])
        .expect("the bent base is well-formed")
        .expand()
}

fn is_unit(b: &Block) -> bool {
    b.x == 1 && b.y == 1 && b.eps_x && b.eps_y
}

fn undotted_eq(b: &Block) -> bool {
    !b.eps_x && !b.eps_y && b.x == b.y
}

fn unit_block() -> Block {
    Block {
        x: 1,
        eps_x: true,
        y: 1,
        eps_y: true,
    }
}

/// Recognize a depth-one tuple as `(x^0; 1^1 ... 1^1; z^0)` and return
/// `(x, alpha, z)` (with `x` or `z` zero when the undotted end blocks are
/// absent).
fn base_shape(t: &TupleNotation) -> Result<(usize, usize, usize), String> {
    let bl = &t.blocks;
    let k = bl.len();
    let mut lo = 0usize;
    let mut hi = k;
    let mut x = 0usize;
    let mut z = 0usize;
    if k > 0 && !bl[0].eps_x && !bl[0].eps_y {
        if bl[0].x != bl[0].y {
            return Err(format!("{t} is not a depth-one tuple"));
        }
        x = bl[0].x;
        lo = 1;
    }
    if hi > lo && !bl[hi - 1].eps_x && !bl[hi - 1].eps_y {
        if bl[hi - 1].x != bl[hi - 1].y {
            return Err(format!("{t} is not a depth-one tuple"));
        }
        z = bl[hi - 1].x;
        hi -= 1;
    }
    for b in &bl[lo..hi] {
        if !is_unit(b) {
            return Err(format!("{t} is not a depth-one tuple"));
        }
    }
    Ok((x, hi - lo, z))
}

/// One step of the depth-reduction rewriting on tuples. Returns the reduced
/// tuple together with the strand offset `l`, the symmetrizer width `s`, and
/// the rational coefficient of the step, or `None` when the tuple is already
/// at depth one. Candidate positions are scanned left to right, one rewrite
/// family at a time.
fn reduction_step(t: &TupleNotation) -> Option<(TupleNotation, usize, usize, BigRational)> {
    let b = &t.blocks;
    let k = b.len();
    let prefix = |i: usize| -> usize { b[..i].iter().map(|bl| bl.x + bl.y).sum() };
    let qb = |m: usize, j: usize| BigRational::from_integer(q_binomial_minus_one(m, j));

    // Family 1: merge two adjacent blocks across an undotted valley.
    for i in 0..k.saturating_sub(1) {
        if !b[i].eps_y && !b[i + 1].eps_x && b[i].x >= b[i].y && b[i + 1].x <= b[i + 1].y {
            let s = b[i].y + b[i + 1].x;
            let l = prefix(i) + b[i].x;
            let c = qb(s, b[i].y);
            let mut blocks = b[..i].to_vec();
            blocks.push(Block {
                x: b[i].x + b[i + 1].x,
                eps_x: b[i].eps_x,
                y: b[i].y + b[i + 1].y,
                eps_y: b[i + 1].eps_y,
            });
            blocks.extend_from_slice(&b[i + 2..]);
            return Some((TupleNotation { blocks }, l, s, c));
        }
    }

    // Maximal runs of unit blocks, as (start index, length).
    let unit_runs: Vec<(usize, usize)> = {
        let mut runs = Vec::new();
        let mut u = 0usize;
        while u < k {
            if is_unit(&b[u]) {
                let start = u;
                while u < k && is_unit(&b[u]) {
                    u += 1;
                }
                runs.push((start, u - start));
            } else {
                u += 1;
            }
        }
        runs
    };

    // Family 2a: slide a unit run rightward past the merged flanking blocks.
    // The left flank is an undotted balanced block, or absent when the run
    // starts the tuple; the right flank must be a real undotted balanced
    // block that is not the last block.
    for &(u, alpha) in &unit_runs {
        let j = u + alpha;
        if j >= k || !undotted_eq(&b[j]) || j + 1 >= k {
            continue;
        }
        let (lx, ly, a0) = if u == 0 {
            (0, 0, 0)
        } else if undotted_eq(&b[u - 1]) {
            (b[u - 1].x, b[u - 1].y, u - 1)
        } else {
            continue;
        };
        let s = ly + 2 * alpha + b[j].x;
        let l = if u == 0 { 0 } else { prefix(a0) + lx };
        let c = qb(lx + 2 * alpha + b[j].y, lx + 2 * alpha);
        let mut blocks = b[..a0].to_vec();
        blocks.push(Block {
            x: lx + b[j].x,
            eps_x: false,
            y: ly + b[j].y,
            eps_y: false,
        });
        blocks.extend(std::iter::repeat(unit_block()).take(alpha));
        blocks.extend_from_slice(&b[j + 1..]);
        return Some((TupleNotation { blocks }, l, s, c));
    }

    // Family 2b: slide a unit run leftward past the merged flanking blocks.
    // The left flank is a real undotted balanced block that is not the first
    // block; the right flank is undotted balanced, or absent when the run
    // ends the tuple.
    for &(u, alpha) in &unit_runs {
        if u < 2 || !undotted_eq(&b[u - 1]) {
            continue;
        }
        let a = u - 1;
        let j = u + alpha;
        let (rx, ry) = if j == k {
            (0, 0)
        } else if undotted_eq(&b[j]) {
            (b[j].x, b[j].y)
        } else {
            continue;
        };
        let s = b[a].y + 2 * alpha + rx;
        let l = prefix(a) + b[a].x;
        let c = qb(b[a].x + 2 * alpha + ry, b[a].x);
        let mut blocks = b[..a].to_vec();
        blocks.extend(std::iter::repeat(unit_block()).take(alpha));
        blocks.push(Block {
            x: b[a].x + rx,
            eps_x: false,
            y: b[a].y + ry,
            eps_y: false,
        });
        if j < k {
            blocks.extend_from_slice(&b[j + 1..]);
        }
        return Some((TupleNotation { blocks }, l, s, c));
    }

    // Family 3a: shrink a balanced dotted block, absorbing the unit run and
    // the undotted block (if any) to its left.
    for d in 0..k {
        if let Some(step) = shrink_left(b, d, &prefix, &qb) {
            return Some(step);
        }
    }

    // Family 3b: the mirror image, absorbing to the right.
    for d in 0..k {
        if let Some(step) = shrink_right(b, d, &prefix, &qb) {
            return Some(step);
        }
    }

    None
}

fn dotted_balanced(b: &Block) -> bool {
    b.eps_x && b.eps_y && b.x == b.y && b.x != 1
}

fn shrink_left(
    b: &[Block],
    d: usize,
    prefix: &impl Fn(usize) -> usize,
    qb: &impl Fn(usize, usize) -> BigRational,
) -> Option<(TupleNotation, usize, usize, BigRational)> {
    if !dotted_balanced(&b[d]) {
        return None;
    }
    let mut u0 = d;
    let mut alpha = 0usize;
    while u0 > 0 && is_unit(&b[u0 - 1]) {
        u0 -= 1;
        alpha += 1;
    }
    let (lx, ly, a0) = if u0 == 0 {
        (0, 0, 0)
    } else if undotted_eq(&b[u0 - 1]) {
        (b[u0 - 1].x, b[u0 - 1].y, u0 - 1)
    } else {
        return None;
    };
    let s = ly + 2 * alpha + b[d].x;
    let l = if u0 == 0 { 0 } else { prefix(a0) + lx };
    let c = qb(lx + 2 * alpha + b[d].y, b[d].y - 1);
    let mut blocks = b[..a0].to_vec();
    blocks.push(Block {
        x: lx + b[d].x - 1,
        eps_x: false,
        y: ly + b[d].y - 1,
        eps_y: false,
    });
    blocks.extend(std::iter::repeat(unit_block()).take(alpha + 1));
    blocks.extend_from_slice(&b[d + 1..]);
    Some((TupleNotation { blocks }, l, s, c))
}

fn shrink_right(
    b: &[Block],
    d: usize,
    prefix: &impl Fn(usize) -> usize,
    qb: &impl Fn(usize, usize) -> BigRational,
) -> Option<(TupleNotation, usize, usize, BigRational)> {
    let k = b.len();
    if !dotted_balanced(&b[d]) {
        return None;
    }
    let mut u1 = d + 1;
    let mut alpha = 0usize;
    while u1 < k && is_unit(&b[u1]) {
        u1 += 1;
        alpha += 1;
    }
    let (rx, ry) = if u1 == k {
        (0, 0)
    } else if undotted_eq(&b[u1]) {
        (b[u1].x, b[u1].y)
    } else {
        return None;
    };
    let s = b[d].y + 2 * alpha + rx;
    let l = prefix(d) + b[d].x;
    let c = qb(b[d].x + 2 * alpha + ry, b[d].x - 1);
    let mut blocks = b[..d].to_vec();
    blocks.extend(std::iter::repeat(unit_block()).take(alpha + 1));
    blocks.push(Block {
        x: b[d].x + rx - 1,
        eps_x: false,
        y: b[d].y + ry - 1,
        eps_y: false,
    });
    if u1 < k {
        blocks.extend_from_slice(&b[u1 + 1..]);
    }
    Some((TupleNotation { blocks }, l, s, c))
}

/// One symmetrizer attachment in a structured dual build: glue a width-`size`
/// symmetrizer on strands `offset+1 ..= offset+size` and scale by
/// `coefficient`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualStep {
    pub offset: usize,
    pub size: usize,
    pub coefficient: BigRational,
}

/// A structured dual element: the normalized dual, the raw (unnormalized)
/// build, the symmetrizer attachments in gluing order (base first), and the
/// normalization `scale = <d, raw>`.
#[derive(Clone, Debug)]
pub struct DualBuild {
    pub dual: DualElement,
    pub raw: DualElement,
    pub steps: Vec<DualStep>,
    pub scale: BigRational,
}

impl DualBuild {
    pub fn projector_count(&self) -> usize {
        self.steps.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dual": dual_element_to_json(&self.dual),
            "raw": dual_element_to_json(&self.raw),
            "scale": self.scale.to_string(),
            "projectors": self.steps.iter().map(|s| json!([s.offset, s.size])).collect::<Vec<_>>(),
            "coefficients": self.steps.iter().map(|s| json!(s.coefficient.to_string())).collect::<Vec<_>>(),
        })
    }
}

fn trivial_build() -> DualBuild {
    let empty = XCap::undecorated(Matching::from_arcs(Vec::new()).expect("empty matching"));
    let e = DualElement::term(empty, BigRational::one());
    DualBuild {
        dual: e.clone(),
        raw: e,
        steps: Vec::new(),
        scale: BigRational::one(),
    }
}

fn normalize_build(
    d: &Diagram,
    raw: DualElement,
    steps: Vec<DualStep>,
) -> Result<DualBuild, String> {
    let scale = pair_with_dual(d, &raw);
    let inv = scale
        .inv()
        .ok_or_else(|| format!("the construction for {d} pairs to zero against itself"))?;
    let dual = raw.scale(&inv);
    Ok(DualBuild {
        dual,
        raw,
        steps,
        scale,
    })
}

/// Build the dual of a basis diagram by the tuple rewriting: reduce the
/// tuple family by family to depth one, then expand the bent base and glue
/// one symmetrizer per reduction step back on. The number of symmetrizer
/// attachments equals [`TupleNotation::r`] of the diagram. The result is
/// normalized so that `<d, dual> = 1` exactly.
pub fn dual_via_projectors(d: &Diagram) -> Result<DualBuild, String> {
    let points = d.matching().points();
    if points == 0 {
        return Ok(trivial_build());
    }
    let t = TupleNotation::encode(d)?;
    let (raw, steps) = build_from_tuple(&t, points)?;
    normalize_build(d, raw, steps)
}

fn build_from_tuple(
    t: &TupleNotation,
    points: usize,
) -> Result<(DualElement, Vec<DualStep>), String> {
    if t.r() == 1 {
        let (x, alpha, z) = base_shape(t)?;
        let s = x + 2 * alpha + z;
        return Ok((
            bent_base(x, alpha, z),
            vec![DualStep {
                offset: x,
                size: s,
                coefficient: BigRational::one(),
            }],
        ));
    }
    let (t2, l, s, c) = reduction_step(t)
        .ok_or_else(|| format!("no reduction applies to {t} though its depth exceeds one"))?;
    if t2.r() != t.r() - 1 {
        return Err(format!(
            "a reduction step failed to lower the depth: {t} -> {t2}"
        ));
    }
    let (inner, mut steps) = build_from_tuple(&t2, points)?;
    let e = attach_projector(&inner, l, s, points).scale(&c);
    steps.push(DualStep {
        offset: l,
        size: s,
        coefficient: c,
    });
    Ok((e, steps))
}

/// Build the dual of an *undotted* matching directly: write the matching's
/// tuple in valley form, repeatedly merge the leftmost mergeable valley
/// (recording a symmetrizer layer and a coefficient per merge), and finish
/// with the fully nested base `bent_base(n, 0, 0)`. Normalized like
/// [`dual_via_projectors`].
pub fn dual_undotted(m: &Matching) -> Result<DualBuild, String> {
    let n = m.n();
    if n == 0 {
        return Ok(trivial_build());
    }
    let d = Diagram::undotted(m.clone());
    let t = TupleNotation::encode(&d)?;
    let bl = &t.blocks;
    let k = bl.len();
    if bl.iter().any(|b| b.eps_x || b.eps_y) {
        return Err("dual_undotted requires an undotted diagram".to_string());
    }
    // Valley form: interleave the run lengths so each entry is a
    // down-run/up-run pair around one valley of the path.
    let mut vb: Vec<(usize, usize)> = Vec::with_capacity(k + 1);
    vb.push((0, bl[k - 1].y));
    for i in (1..k).rev() {
        vb.push((bl[i].x, bl[i - 1].y));
    }
    vb.push((bl[0].x, 0));
    let mut discovered: Vec<DualStep> = Vec::new();
    while vb.len() > 2 {
        let i = (1..vb.len() - 1)
            .find(|&i| vb[i - 1].1 >= vb[i].0 && vb[i].1 <= vb[i + 1].0)
            .ok_or_else(|| "the valley merge scan found no mergeable entry".to_string())?;
        let l: usize = vb[..i].iter().map(|&(a, b)| a + b).sum();
        let s = vb[i].0 + vb[i].1;
        let c = BigRational::from_integer(q_binomial_minus_one(s, vb[i].0));
        // The merge recursion is phrased on the matching itself; the caps
        // diagram is its half-turn, so strands `l+1..=l+s` land at
        // `2n-l-s+1..=2n-l` once the picture is rotated.
        discovered.push(DualStep {
            offset: 2 * n - l - s,
            size: s,
            coefficient: c,
        });
        vb[i - 1].1 += vb[i].1;
        vb[i + 1].0 += vb[i].0;
        vb.remove(i);
    }
    if vb != [(0, n), (n, 0)] {
        return Err("the valley merges did not terminate at the full nest".to_string());
    }
    let mut e = bent_base(n, 0, 0);
    let mut steps = vec![DualStep {
        offset: n,
        size: n,
        coefficient: BigRational::one(),
    }];
    for st in discovered.iter().rev() {
        e = attach_projector(&e, st.offset, st.size, 2 * n).scale(&st.coefficient);
        steps.push(st.clone());
    }
    normalize_build(&d, e, steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mk(arcs: &[(usize, usize)]) -> Matching {
        Matching::from_arcs(arcs.to_vec()).unwrap()
    }

    fn diag(arcs: &[(usize, usize)], dots: &[usize]) -> Diagram {
        let mut d = Diagram::undotted(mk(arcs));
        for &p in dots {
            d = d.with_dot(p);
        }
        d
    }

    fn xc(arcs: &[(usize, usize)], xs: &[usize]) -> XCap {
        XCap::new(mk(arcs), xs.iter().copied().collect()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn circle_rules_are_frozen() {
        use Decoration::{Dot, X};
        assert_eq!(evaluate_circle(&[]), BigInt::from(2));
        assert_eq!(evaluate_circle(&[Dot]), BigInt::zero());
        assert_eq!(evaluate_circle(&[X]), BigInt::zero());
        assert_eq!(evaluate_circle(&[Dot, X]), BigInt::one());
        assert_eq!(evaluate_circle(&[X, Dot]), BigInt::one());
        assert_eq!(evaluate_circle(&[Dot, Dot]), BigInt::zero());
        assert_eq!(evaluate_circle(&[Dot, X, Dot, X]), BigInt::one());
        assert_eq!(evaluate_circle(&[Dot, X, X, Dot]), BigInt::zero());
        assert_eq!(evaluate_circle(&[Dot, X, Dot]), BigInt::zero());
    }

    #[test]
    fn gram_matrix_for_one_strand() {
        let (basis, g) = gram_matrix(1);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].total_dots(), 0);
        assert_eq!(basis[1].total_dots(), 1);
        assert_eq!(g, Matrix::from_rows(vec![
            vec![BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1)],
        ]));
    }

    #[test]
    fn two_strand_pairings_are_frozen() {
        let disj = diag(&[(1, 2), (3, 4)], &[]);
        let nest = diag(&[(1, 4), (2, 3)], &[]);
        assert_eq!(pair(&disj, &disj), BigInt::from(4));
        assert_eq!(pair(&disj, &nest), BigInt::from(2));
        assert_eq!(pair(&nest, &nest), BigInt::from(4));

        let b1 = diag(&[(1, 2), (3, 4)], &[1]);
        let b2 = diag(&[(1, 2), (3, 4)], &[3]);
        let b3 = diag(&[(1, 4), (2, 3)], &[1]);
        assert_eq!(pair(&b1, &b1), BigInt::zero());
        assert_eq!(pair(&b2, &b2), BigInt::zero());
        assert_eq!(pair(&b1, &b2), BigInt::from(2));
        assert_eq!(pair(&b1, &b3), BigInt::one());
        assert_eq!(pair(&b2, &b3), BigInt::one());
        assert_eq!(pair(&b3, &b3), BigInt::from(2));
        // Mixed dot counts pair to zero.
        assert_eq!(pair(&disj, &b1), BigInt::zero());
        assert_eq!(pair(&nest, &b3), BigInt::zero());
        // A doubly dotted arc annihilates every pairing.
        let dd = diag(&[(1, 2), (3, 4)], &[1, 1]);
        assert_eq!(dd.dots_on(1), 2);
        for other in full_basis(2) {
            assert_eq!(pair(&dd, &other), BigInt::zero());
        }
    }

    #[test]
    fn gram_is_symmetric_invertible_and_dot_graded() {
        for n in 0..=3 {
            let (basis, g) = gram_matrix(n);
            assert!(g.is_symmetric(), "Gram matrix at n={n} is symmetric");
            assert!(
                !g.det_bareiss().is_zero(),
                "Gram matrix at n={n} is invertible"
            );
            for (i, bi) in basis.iter().enumerate() {
                for (j, bj) in basis.iter().enumerate() {
                    if bi.total_dots() != bj.total_dots() {
                        assert!(
                            g.at(i, j).is_zero(),
                            "mixed dot counts pair to zero at n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn relations_pair_to_zero() {
        for n in 1..=3 {
            let basis = full_basis(n);
            for k in 0..=n {
                for rel in crate::skein::classical::relations(n, k) {
                    for b in &basis {
                        assert_eq!(
                            pair_element(&rel, b),
                            BigInt::zero(),
                            "a defining relation pairs to zero against {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gram_duals_pair_to_the_identity() {
        for n in 1..=3 {
            let (basis, duals) = dual_via_gram(n);
            for (i, b) in basis.iter().enumerate() {
                for (j, e) in duals.iter().enumerate() {
                    let expected = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(pair_with_dual(b, e), expected, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn dual_via_gram_for_one_strand_is_frozen() {
        let (_, duals) = dual_via_gram(1);
        let mut half_cap = DualElement::new();
        half_cap.add_term(xc(&[(1, 2)], &[]), rat(1, 2));
        assert_eq!(duals[0], half_cap);
        let mut x_cap = DualElement::new();
        x_cap.add_term(xc(&[(1, 2)], &[1]), rat(1, 1));
        assert_eq!(duals[1], x_cap);
    }

    #[test]
    fn projector_attachment_expands_the_wenzl_terms() {
        // A cap straight across both symmetrizer strands kills the term.
        let e0 = DualElement::term(xc(&[(1, 2)], &[]), BigRational::one());
        assert!(attach_projector(&e0, 0, 2, 2).is_zero());

        // Straddling caps survive with the mixing term.
        let e1 = DualElement::term(xc(&[(1, 2), (3, 4)], &[]), BigRational::one());
        let got = attach_projector(&e1, 1, 2, 4);
        let mut want = DualElement::new();
        want.add_term(xc(&[(1, 2), (3, 4)], &[]), rat(1, 1));
        want.add_term(xc(&[(1, 4), (2, 3)], &[]), rat(-1, 2));
        assert_eq!(got, want);

        // An X caught on a circle kills the turn-back term.
        let e2 = DualElement::term(xc(&[(1, 2), (3, 4)], &[1]), BigRational::one());
        let got = attach_projector(&e2, 0, 2, 4);
        let want = DualElement::term(xc(&[(1, 2), (3, 4)], &[1]), BigRational::one());
        assert_eq!(got, want);
    }

    #[test]
    fn bent_base_cases_are_frozen() {
        let mut p2 = DualElement::new();
        p2.add_term(xc(&[(1, 4), (2, 3)], &[]), rat(1, 1));
        p2.add_term(xc(&[(1, 2), (3, 4)], &[]), rat(-1, 2));
        assert_eq!(bent_base(2, 0, 0), p2);

        let single_x = DualElement::term(xc(&[(1, 2)], &[1]), BigRational::one());
        assert_eq!(bent_base(0, 1, 0), single_x);

        let mut hook = DualElement::new();
        hook.add_term(xc(&[(1, 2), (3, 4)], &[]), rat(1, 1));
        hook.add_term(xc(&[(1, 4), (2, 3)], &[]), rat(-1, 2));
        assert_eq!(bent_base(1, 0, 1), hook);

        let mut mixed = DualElement::new();
        mixed.add_term(xc(&[(1, 2), (3, 4)], &[1]), rat(1, 1));
        mixed.add_term(xc(&[(1, 4), (2, 3)], &[1]), rat(-2, 3));
        mixed.add_term(xc(&[(1, 2), (3, 4)], &[3]), rat(1, 3));
        assert_eq!(bent_base(0, 1, 1), mixed);
    }

    #[test]
    fn undotted_dual_for_two_strands_is_frozen() {
        let build = dual_undotted(&mk(&[(1, 2), (3, 4)])).unwrap();
        assert_eq!(
            build.steps,
            vec![
                DualStep {
                    offset: 2,
                    size: 2,
                    coefficient: rat(1, 1)
                },
                DualStep {
                    offset: 1,
                    size: 2,
                    coefficient: rat(-2, 1)
                },
            ]
        );
        let mut raw = DualElement::new();
        raw.add_term(xc(&[(1, 2), (3, 4)], &[]), rat(1, 1));
        raw.add_term(xc(&[(1, 4), (2, 3)], &[]), rat(-1, 2));
        assert_eq!(build.raw, raw);
        assert_eq!(build.scale, rat(3, 1));
    }

    #[test]
    fn worked_three_strand_dual() {
        let m = mk(&[(1, 6), (2, 3), (4, 5)]);
        let build = dual_undotted(&m).unwrap();
        assert_eq!(
            build.steps,
            vec![
                DualStep {
                    offset: 3,
                    size: 3,
                    coefficient: rat(1, 1)
                },
                DualStep {
                    offset: 2,
                    size: 2,
                    coefficient: rat(-2, 1)
                },
            ]
        );
        let mut raw = DualElement::new();
        raw.add_term(xc(&[(1, 6), (2, 3), (4, 5)], &[]), rat(4, 3));
        raw.add_term(xc(&[(1, 6), (2, 5), (3, 4)], &[]), rat(-2, 3));
        raw.add_term(xc(&[(1, 2), (3, 6), (4, 5)], &[]), rat(-2, 3));
        raw.add_term(xc(&[(1, 4), (2, 3), (5, 6)], &[]), rat(-2, 3));
        raw.add_term(xc(&[(1, 2), (3, 4), (5, 6)], &[]), rat(2, 3));
        assert_eq!(build.raw, raw);
        assert_eq!(build.scale, rat(4, 1));
    }

    #[test]
    fn treble_clef_coefficient_is_frozen() {
        // The matching (1 4)(2 3)(5 6) needs a single width-3 symmetrizer
        // layer with coefficient -3 on top of the fully nested base. The
        // merge happens one strand in from the left of the matching, which is
        // one strand in from the right of the caps picture: offset 6-1-3 = 2.
        let m = mk(&[(1, 4), (2, 3), (5, 6)]);
        let build = dual_undotted(&m).unwrap();
        assert_eq!(
            build.steps,
            vec![
                DualStep {
                    offset: 3,
                    size: 3,
                    coefficient: rat(1, 1)
                },
                DualStep {
                    offset: 2,
                    size: 3,
                    coefficient: rat(-3, 1)
                },
            ]
        );
    }

    #[test]
    fn undotted_duals_match_the_gram_oracle() {
        for n in 1..=4 {
            let (basis, duals) = dual_via_gram(n);
            for (i, b) in basis.iter().enumerate() {
                if b.total_dots() != 0 {
                    continue;
                }
                let build = dual_undotted(b.matching()).unwrap();
                assert_eq!(
                    build.dual, duals[i],
                    "structured dual equals the Gram dual for {b}"
                );
            }
        }
    }

    #[test]
    fn projector_duals_are_exact_and_counted() {
        for n in 1..=3 {
            let basis = full_basis(n);
            for (i, d) in basis.iter().enumerate() {
                let t = TupleNotation::encode(d).unwrap();
                let build = dual_via_projectors(d).unwrap();
                assert_eq!(
                    build.steps.len() as i64,
                    t.r(),
                    "symmetrizer count for {d} equals its depth"
                );
                for (j, b) in basis.iter().enumerate() {
                    let expected = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(
                        pair_with_dual(b, &build.dual),
                        expected,
                        "duality of the build for {d} against {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn dotted_nest_dual_uses_two_projectors() {
        // (1 4)*(2 3): one shrink step and the bent base. The leftward
        // shrink fires first, so the extra symmetrizer sits on strands 1-2.
        let d = diag(&[(1, 4), (2, 3)], &[1]);
        let build = dual_via_projectors(&d).unwrap();
        assert_eq!(build.steps.len(), 2);
        assert_eq!(build.steps[1].size, 2);
        assert_eq!(build.steps[1].offset, 0);
        assert_eq!(build.steps[1].coefficient, rat(-2, 1));
    }

    #[test]
    fn positivity_probe_reports() {
        let p1 = positivity_probe(1);
        assert_eq!(p1.minors, vec![BigInt::from(2), BigInt::from(2)]);
        assert!(p1.positive_definite);
        assert_eq!(p1.first_failure, None);
        // Dotted diagrams are isotropic for n >= 2, so the probe fails there.
        let p2 = positivity_probe(2);
        assert!(!p2.positive_definite);
        assert!(p2.first_failure.is_some());
        let p3 = positivity_probe(3);
        assert!(!p3.positive_definite);
    }

    #[test]
    fn xcap_json_round_trips() {
        let x = xc(&[(1, 4), (2, 3), (5, 6)], &[1, 5]);
        assert_eq!(XCap::from_json(&x.to_json()).unwrap(), x);
        let v = x.to_json();
        assert_eq!(v["n"], json!(3));
        assert_eq!(v["xs"], json!([1, 5]));

        let mut e = DualElement::new();
        e.add_term(x.clone(), rat(3, 4));
        e.add_term(xc(&[(1, 2), (3, 4), (5, 6)], &[]), rat(-2, 1));
        assert_eq!(dual_element_from_json(&dual_element_to_json(&e)).unwrap(), e);

        let pic = XCapDiagram::new(
            mk(&[(1, 2), (3, 4)]),
            [1].into_iter().collect(),
            vec![(0, 2), (1, 2)],
        )
        .unwrap();
        let w = pic.to_json();
        assert_eq!(w["projectors"], json!([[0, 2], [1, 2]]));
        let back = XCapDiagram::from_json(&w).unwrap();
        assert_eq!(back.caps, pic.caps);
        assert_eq!(back.xs, pic.xs);
        assert_eq!(back.boxes, pic.boxes);
    }

    #[test]
    fn pairing_is_symmetric_on_multidotted_diagrams() {
        let a = diag(&[(1, 4), (2, 3), (5, 6)], &[1, 5]);
        let b = diag(&[(1, 2), (3, 6), (4, 5)], &[3]);
        let c = diag(&[(1, 6), (2, 5), (3, 4)], &[1, 1]);
        for x in [&a, &b, &c] {
            for y in [&a, &b, &c] {
                assert_eq!(pair(x, y), pair(y, x));
            }
        }
    }

    #[test]
    fn binomial_specialization_is_frozen() {
        assert_eq!(q_binomial_minus_one(3, 1), BigInt::from(-3));
        assert_eq!(q_binomial_minus_one(2, 1), BigInt::from(-2));
        assert_eq!(q_binomial_minus_one(4, 2), BigInt::from(6));
        assert_eq!(q_binomial_minus_one(5, 3), BigInt::from(-10));
        assert_eq!(q_binomial_minus_one(4, 0), BigInt::one());
    }
}
