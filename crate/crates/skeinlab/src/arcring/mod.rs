//! Arc rings on crossingless matchings.
//!
//! For each crossingless matching pair `(b, a)` of `2n` points, gluing the
//! vertical reflection `W(b)` on top of `a` produces a closed configuration
//! of circles; the ring `H^n` is the direct sum over all pairs of the free
//! modules on `{1, X}`-labelings of those circles. Multiplication contracts
//! a matching against its own reflection one saddle at a time, applying the
//! Frobenius algebra structure of the label ring: classically `X^2 = 0`,
//! equivariantly `X^2 = hX + t` (with the comultiplication corrected
//! accordingly). On top of the ring sit the computations this module
//! exposes:
//!
//! * [`center`] — exact commutant solves and the symmetric-function
//!   presentations of `Z(H^n)`,
//! * [`hh0`] — zeroth Hochschild homology (the ring modulo commutators),
//!   the dotted-matching map `phi` onto it, and the commutator-generator
//!   comparisons,
//! * [`sqfree`] — the square-free polynomial rings `Z[c]/(c_i^2)` and
//!   `Z[t][c]/(c_i^2 - t)`, elementary symmetric identities, and the
//!   kernel ideals of the vertical-strand closure,
//! * [`quotient`] — quotient skein module ranks and the `m = n = 1`
//!   hom-ring checks,
//! * [`bimodule`] — bimodules attached to flat tangles and exact
//!   intertwiner dimension counts.

mod surgery;

pub mod bimodule;
pub mod center;
pub mod hh0;
pub mod quotient;
pub mod sqfree;

pub use bimodule::{bimodule_hom_dim, TangleBimodule};
pub use center::{center_classical, center_t, CenterReport, CenterTReport};
pub use hh0::{hh0_classical, hh0_equivariant, phi_map, Hh0Classical, Hh0Equivariant};
pub use quotient::{hom_ring_checks, quotient_skein, HomRingReport, QuotientSkeinReport};
pub use sqfree::{
    et_function, kernel_vert, kernel_vert_t, KernelReport, KernelTReport, SqFree,
};

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use serde_json::{json, Value};

use crate::diagrams::{glue_circles, Matching};
use crate::exactmath::{LinComb, PolyHT, Ring};

use surgery::{Labels, Surgery};

/// The label ring data threaded through every surgery: a rank-two Frobenius
/// algebra on `{1, X}` described by its structure constants.
///
/// * `merge`: `m(1,1) = 1`, `m(1,X) = m(X,1) = X`,
///   `m(X,X) = xx_x * X + xx_1 * 1`;
/// * `split`: `delta(1) = 1 (x) X + X (x) 1 + d1_11 * 1 (x) 1`,
///   `delta(X) = X (x) X + dx_11 * 1 (x) 1`.
#[derive(Clone)]
pub struct Frobenius<C: Ring> {
    name: &'static str,
    xx_x: C,
    xx_1: C,
    d1_11: C,
    dx_11: C,
    coeff_degree: fn(&C) -> Option<i64>,
}

impl Frobenius<BigInt> {
    /// `X^2 = 0`: the classical rank-two Frobenius algebra over `Z`.
    pub fn classical() -> Self {
        Frobenius {
            name: "classical",
            xx_x: Ring::zero(),
            xx_1: Ring::zero(),
            d1_11: Ring::zero(),
            dx_11: Ring::zero(),
            coeff_degree: |_| Some(0),
        }
    }
}

impl Frobenius<PolyHT> {
    /// `X^2 = hX + t` over `Z[h, t]`.
    pub fn equivariant() -> Self {
        Frobenius {
            name: "equivariant",
            xx_x: PolyHT::h(),
            xx_1: PolyHT::t(),
            d1_11: Ring::neg(&PolyHT::h()),
            dx_11: PolyHT::t(),
            coeff_degree: PolyHT::homogeneous_degree,
        }
    }

    /// `X^2 = t` over `Z[t]`: the `h = 0` specialization.
    pub fn x_squared_t() -> Self {
        Frobenius {
            name: "x2t",
            xx_x: Ring::zero(),
            xx_1: PolyHT::t(),
            d1_11: Ring::zero(),
            dx_11: PolyHT::t(),
            coeff_degree: PolyHT::homogeneous_degree,
        }
    }
}

impl<C: Ring> Frobenius<C> {
    pub fn name(&self) -> &'static str {
        self.name
    }

    fn merge(&self, x: bool, y: bool) -> Vec<(bool, C)> {
        let out = match (x, y) {
            (false, false) => vec![(false, C::one())],
            (true, false) | (false, true) => vec![(true, C::one())],
            (true, true) => vec![(true, self.xx_x.clone()), (false, self.xx_1.clone())],
        };
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn split(&self, x: bool) -> Vec<(bool, bool, C)> {
        let out = match x {
            false => vec![
                (false, true, C::one()),
                (true, false, C::one()),
                (false, false, self.d1_11.clone()),
            ],
            true => vec![
                (true, true, C::one()),
                (false, false, self.dx_11.clone()),
            ],
        };
        out.into_iter().filter(|(_, _, c)| !c.is_zero()).collect()
    }

    /// `X^k = p * X + q * 1` in the label ring; returns `(p, q)`.
    pub fn x_power(&self, k: u32) -> (C, C) {
        let (mut p, mut q) = (C::zero(), C::one());
        for _ in 0..k {
            let np = Ring::add(&Ring::mul(&p, &self.xx_x), &q);
            let nq = Ring::mul(&p, &self.xx_1);
            p = np;
            q = nq;
        }
        (p, q)
    }
}

/// The circles of a glued configuration `W(b)a`, numbered in the order
/// their leftmost point appears along the gluing line.
#[derive(Clone, Debug)]
pub struct CircleConfiguration {
    n: usize,
    circles: Vec<Vec<usize>>,
    circle_of: Vec<usize>,
}

impl CircleConfiguration {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.circles.len()
    }

    /// Sorted point sets, one per circle, in index order.
    pub fn circles(&self) -> &[Vec<usize>] {
        &self.circles
    }

    /// Zero-based index of the circle through point `p` (1-based).
    pub fn circle_of(&self, p: usize) -> usize {
        self.circle_of[p]
    }
}

/// Glue the reflection of `b` on top of `a` and number the circles.
pub fn glue_and_number(b: &Matching, a: &Matching) -> CircleConfiguration {
    assert_eq!(b.n(), a.n(), "matchings must have the same size");
    let circles = glue_circles(a, b);
    let mut circle_of = vec![usize::MAX; 2 * a.n() + 1];
    for (idx, circle) in circles.iter().enumerate() {
        for &p in circle {
            circle_of[p] = idx;
        }
    }
    CircleConfiguration { n: a.n(), circles, circle_of }
}

/// A basis element: (top matching index, bottom matching index, X-mask over
/// the circles of the glued pair, bit `i` for circle `i`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArcKey(pub usize, pub usize, pub u32);

impl fmt::Display for ArcKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({},{};{:b})", self.0, self.1, self.2)
    }
}

/// An element of the arc ring: a finite combination of basis labelings.
pub type ArcElt<C> = LinComb<ArcKey, C>;

/// The arc ring of a fixed size `n`, with all circle tables precomputed.
pub struct ArcRing<C: Ring> {
    n: usize,
    frob: Frobenius<C>,
    matchings: Vec<Matching>,
    cfg: Vec<Vec<CircleConfiguration>>,
    basis: Vec<ArcKey>,
    index: BTreeMap<ArcKey, usize>,
}

impl<C: Ring> ArcRing<C> {
    pub fn new(n: usize, frob: Frobenius<C>) -> Self {
        let matchings = Matching::all(n);
        let cfg: Vec<Vec<CircleConfiguration>> = matchings
            .iter()
            .map(|top| {
                matchings
                    .iter()
                    .map(|bot| glue_and_number(top, bot))
                    .collect()
            })
            .collect();
        let mut basis = Vec::new();
        for t in 0..matchings.len() {
            for b in 0..matchings.len() {
                let k = cfg[t][b].count();
                for mask in 0..(1u32 << k) {
                    basis.push(ArcKey(t, b, mask));
                }
            }
        }
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, k)| (*k, i))
            .collect();
        ArcRing { n, frob, matchings, cfg, basis, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn frobenius(&self) -> &Frobenius<C> {
        &self.frob
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    /// Circle table of the pair `(top, bot)`.
    pub fn config(&self, top: usize, bot: usize) -> &CircleConfiguration {
        &self.cfg[top][bot]
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ArcKey] {
        &self.basis
    }

    pub fn index_of(&self, key: &ArcKey) -> usize {
        self.index[key]
    }

    /// Internal degree of a basis labeling: each `X` contributes 2, and the
    /// summand of a `k`-circle pair is shifted by `n - k`. (Classically this
    /// is the `deg 1 = -1`, `deg X = +1` convention shifted uniformly by
    /// `n`; the two readings agree term by term.)
    pub fn degree(&self, key: &ArcKey) -> i64 {
        let k = self.cfg[key.0][key.1].count() as i64;
        2 * (key.2.count_ones() as i64) + self.n as i64 - k
    }

    pub fn elt(&self, top: usize, bot: usize, mask: u32) -> ArcElt<C> {
        assert!(
            (mask as u64) < (1u64 << self.cfg[top][bot].count()),
            "mask exceeds circle count"
        );
        LinComb::term(ArcKey(top, bot, mask), C::one())
    }

    /// The idempotent `1_a` of the diagonal summand `a`.
    pub fn idempotent(&self, a: usize) -> ArcElt<C> {
        self.elt(a, a, 0)
    }

    /// The two-sided unit: the sum of all idempotents.
    pub fn one(&self) -> ArcElt<C> {
        let mut e = LinComb::new();
        for a in 0..self.matchings.len() {
            e.add_term(ArcKey(a, a, 0), C::one());
        }
        e
    }

    /// The diagonal element of summand `a` with an `X` on the circle
    /// through point `i`, weighted by the alternating sign `(-1)^(i+1)`.
    pub fn point_dot(&self, a: usize, i: usize) -> ArcElt<C> {
        let circle = self.cfg[a][a].circle_of(i);
        let sign = if i % 2 == 1 { C::one() } else { Ring::neg(&C::one()) };
        LinComb::term(ArcKey(a, a, 1 << circle), sign)
    }

    /// The central candidate attached to point `i`: the sum over all
    /// diagonal summands of the signed dot through `i`.
    pub fn cbar(&self, i: usize) -> ArcElt<C> {
        let mut e = LinComb::new();
        for a in 0..self.matchings.len() {
            e = e.add(&self.point_dot(a, i));
        }
        e
    }

    fn multiply_keys(&self, ku: &ArcKey, kv: &ArcKey, reverse_order: bool) -> ArcElt<C> {
        let ArcKey(c, b, s) = *ku;
        let ArcKey(b2, a, t) = *kv;
        if b != b2 {
            return LinComb::new();
        }
        // vertices: the upper interface point p is 2(p-1), the lower one
        // 2(p-1)+1, so smaller vertex ids are further left
        let tv = |p: usize| 2 * (p - 1);
        let bv = |p: usize| 2 * (p - 1) + 1;
        let mut fixed = Vec::new();
        for &(i, j) in self.matchings[c].arcs() {
            fixed.push((tv(i), tv(j)));
        }
        for &(i, j) in self.matchings[a].arcs() {
            fixed.push((bv(i), bv(j)));
        }
        let mut pending: Vec<_> = self.matchings[b]
            .arcs()
            .iter()
            .map(|&(i, j)| ((tv(i), tv(j)), (bv(i), bv(j))))
            .collect();
        if reverse_order {
            pending.reverse();
        }
        let nverts = 4 * self.n;
        let surgery = Surgery::new(nverts, (0..nverts).collect(), fixed, pending);

        // initial labels: before any saddle, the upper circles only touch
        // upper vertices and the lower circles only lower ones, so the
        // representative of circle `i` is its leftmost point's vertex
        let mut labels: Labels = BTreeMap::new();
        for (idx, circle) in self.cfg[c][b].circles().iter().enumerate() {
            labels.insert(tv(circle[0]), s >> idx & 1 == 1);
        }
        for (idx, circle) in self.cfg[b][a].circles().iter().enumerate() {
            labels.insert(bv(circle[0]), t >> idx & 1 == 1);
        }

        let out = surgery.run(LinComb::term(labels, C::one()), &self.frob);

        let final_cfg = &self.cfg[c][a];
        let mut result = LinComb::new();
        for (labels, coeff) in out.terms() {
            debug_assert_eq!(labels.len(), final_cfg.count());
            let mut mask = 0u32;
            for (idx, circle) in final_cfg.circles().iter().enumerate() {
                if labels[&tv(circle[0])] {
                    mask |= 1 << idx;
                }
            }
            result.add_term(ArcKey(c, a, mask), coeff.clone());
        }
        result
    }

    /// Product of two basis elements.
    pub fn multiply_basis(&self, ku: &ArcKey, kv: &ArcKey) -> ArcElt<C> {
        self.multiply_keys(ku, kv, false)
    }

    #[cfg(test)]
    pub(crate) fn multiply_basis_reversed(&self, ku: &ArcKey, kv: &ArcKey) -> ArcElt<C> {
        self.multiply_keys(ku, kv, true)
    }

    pub fn multiply(&self, u: &ArcElt<C>, v: &ArcElt<C>) -> ArcElt<C> {
        let mut out = LinComb::new();
        for (ku, cu) in u.terms() {
            for (kv, cv) in v.terms() {
                let prod = self.multiply_basis(ku, kv);
                let scale = Ring::mul(cu, cv);
                for (k, c) in prod.terms() {
                    out.add_term(*k, Ring::mul(c, &scale));
                }
            }
        }
        out
    }

    /// Commutator `uv - vu`.
    pub fn commutator(&self, u: &ArcElt<C>, v: &ArcElt<C>) -> ArcElt<C> {
        self.multiply(u, v).sub(&self.multiply(v, u))
    }

    /// Coordinates in the full basis order.
    pub fn to_vector(&self, e: &ArcElt<C>) -> Vec<C> {
        e.to_vector(&self.index, self.basis.len())
            .expect("element keys lie in the basis")
    }

    /// Check that every structure constant is homogeneous for the internal
    /// grading; returns the number of basis pairs inspected.
    pub fn grading_check(&self) -> Result<usize, String> {
        let mut pairs = 0usize;
        for ku in &self.basis {
            for kv in &self.basis {
                let prod = self.multiply_basis(ku, kv);
                if prod.is_zero() {
                    continue;
                }
                pairs += 1;
                let want = self.degree(ku) + self.degree(kv);
                for (k, c) in prod.terms() {
                    let cd = (self.frob.coeff_degree)(c).ok_or_else(|| {
                        format!("inhomogeneous coefficient {c} in {ku:?} * {kv:?}")
                    })?;
                    let got = self.degree(k) + cd;
                    if got != want {
                        return Err(format!(
                            "degree {got} != {want} for {k:?} in {ku:?} * {kv:?}"
                        ));
                    }
                }
            }
        }
        Ok(pairs)
    }

    /// The full multiplication table as JSON: basis metadata plus every
    /// nonzero structure constant, for cross-tool auditing.
    pub fn table_json(&self) -> Value {
        let matchings: Vec<Value> = self
            .matchings
            .iter()
            .map(|m| json!(m.arcs()))
            .collect();
        let basis: Vec<Value> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, &ArcKey(t, b, mask))| {
                json!({
                    "index": i,
                    "top": t,
                    "bot": b,
                    "xmask": mask,
                    "circles": self.cfg[t][b].count(),
                    "degree": self.degree(&ArcKey(t, b, mask)),
                })
            })
            .collect();
        let mut products = Vec::new();
        for (i, ku) in self.basis.iter().enumerate() {
            for (j, kv) in self.basis.iter().enumerate() {
                let prod = self.multiply_basis(ku, kv);
                if prod.is_zero() {
                    continue;
                }
                let terms: Vec<Value> = prod
                    .terms()
                    .map(|(k, c)| {
                        json!({ "basis": self.index[k], "coeff": c.to_string() })
                    })
                    .collect();
                products.push(json!({ "left": i, "right": j, "terms": terms }));
            }
        }
        json!({
            "n": self.n,
            "variant": self.frob.name,
            "dimension": self.dim(),
            "matchings": matchings,
            "basis": basis,
            "products": products,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn key_of(m: &Matching, all: &[Matching]) -> usize {
        all.iter().position(|x| x == m).expect("matching listed")
    }

    #[test]
    fn glue_matches_worked_examples() {
        // any matching against itself: one circle per arc
        for n in 1..=4 {
            for m in Matching::all(n) {
                let cfg = glue_and_number(&m, &m);
                assert_eq!(cfg.count(), n);
                // circle order follows the arcs sorted by left endpoint
                for (idx, &(l, r)) in m.arcs().iter().enumerate() {
                    assert_eq!(cfg.circle_of(l), idx);
                    assert_eq!(cfg.circle_of(r), idx);
                }
            }
        }
        let unnested = Matching::from_arcs(vec![(1, 2), (3, 4)]).unwrap();
        let nested = Matching::from_arcs(vec![(1, 4), (2, 3)]).unwrap();
        assert_eq!(glue_and_number(&nested, &unnested).count(), 1);
        assert_eq!(glue_and_number(&unnested, &nested).count(), 1);
        assert_eq!(glue_and_number(&nested, &nested).count(), 2);
        assert_eq!(glue_and_number(&unnested, &unnested).count(), 2);
    }

    #[test]
    fn h2_merge_then_split() {
        // crossing the two matchings of H^2 and coming back produces the
        // comultiplication of 1: an X on either circle
        let ring = ArcRing::new(2, Frobenius::classical());
        let unnested = key_of(
            &Matching::from_arcs(vec![(1, 2), (3, 4)]).unwrap(),
            ring.matchings(),
        );
        let nested = key_of(
            &Matching::from_arcs(vec![(1, 4), (2, 3)]).unwrap(),
            ring.matchings(),
        );
        let u = ring.elt(unnested, nested, 0);
        let v = ring.elt(nested, unnested, 0);
        let prod = ring.multiply(&u, &v);
        let mut expect: ArcElt<BigInt> = LinComb::new();
        expect.add_term(ArcKey(unnested, unnested, 0b01), BigInt::from(1));
        expect.add_term(ArcKey(unnested, unnested, 0b10), BigInt::from(1));
        assert_eq!(prod, expect);
        // dimension tally: 4 + 2 + 2 + 4
        assert_eq!(ring.dim(), 12);
    }

    #[test]
    fn equivariant_dot_square() {
        let ring = ArcRing::new(1, Frobenius::equivariant());
        let x = ring.elt(0, 0, 1);
        let prod = ring.multiply(&x, &x);
        let mut expect: ArcElt<PolyHT> = LinComb::new();
        expect.add_term(ArcKey(0, 0, 1), PolyHT::h());
        expect.add_term(ArcKey(0, 0, 0), PolyHT::t());
        assert_eq!(prod, expect);
    }

    #[test]
    fn x_powers_reduce() {
        let f = Frobenius::equivariant();
        let (p3, q3) = f.x_power(3);
        // X^3 = (h^2 + t) X + ht
        let mut h2t = PolyHT::term(BigInt::from(1), 2, 0);
        h2t = Ring::add(&h2t, &PolyHT::t());
        assert_eq!(p3, h2t);
        assert_eq!(q3, PolyHT::term(BigInt::from(1), 1, 1));
        let fc = Frobenius::classical();
        assert_eq!(fc.x_power(2), (Ring::zero(), Ring::zero()));
        assert_eq!(fc.x_power(1), (Ring::one(), Ring::zero()));
    }

    fn check_unit<C: Ring>(ring: &ArcRing<C>) {
        let one = ring.one();
        for key in ring.basis() {
            let e = LinComb::term(*key, C::one());
            assert_eq!(ring.multiply(&one, &e), e, "left unit");
            assert_eq!(ring.multiply(&e, &one), e, "right unit");
        }
        for a in 0..ring.matchings().len() {
            for b in 0..ring.matchings().len() {
                let prod = ring.multiply(&ring.idempotent(a), &ring.idempotent(b));
                if a == b {
                    assert_eq!(prod, ring.idempotent(a), "idempotent");
                } else {
                    assert!(prod.is_zero(), "orthogonality");
                }
            }
        }
    }

    #[test]
    fn unit_and_idempotents() {
        check_unit(&ArcRing::new(1, Frobenius::classical()));
        check_unit(&ArcRing::new(2, Frobenius::classical()));
        check_unit(&ArcRing::new(3, Frobenius::classical()));
        check_unit(&ArcRing::new(1, Frobenius::equivariant()));
        check_unit(&ArcRing::new(2, Frobenius::equivariant()));
        check_unit(&ArcRing::new(2, Frobenius::x_squared_t()));
    }

    fn check_associative_all<C: Ring>(ring: &ArcRing<C>) {
        for ka in ring.basis() {
            for kb in ring.basis() {
                let ab = ring.multiply_basis(ka, kb);
                for kc in ring.basis() {
                    let bc = ring.multiply_basis(kb, kc);
                    let left = ring.multiply(&ab, &LinComb::term(*kc, C::one()));
                    let right = ring.multiply(&LinComb::term(*ka, C::one()), &bc);
                    assert_eq!(left, right, "({ka:?} {kb:?}) {kc:?}");
                }
            }
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        check_associative_all(&ArcRing::new(1, Frobenius::classical()));
        check_associative_all(&ArcRing::new(2, Frobenius::classical()));
        check_associative_all(&ArcRing::new(1, Frobenius::equivariant()));
        check_associative_all(&ArcRing::new(2, Frobenius::equivariant()));
        check_associative_all(&ArcRing::new(2, Frobenius::x_squared_t()));
    }

    fn check_associative_random<C: Ring>(ring: &ArcRing<C>, trials: usize, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let ka = ring.basis()[rng.gen_range(0..ring.dim())];
            let kb = ring.basis()[rng.gen_range(0..ring.dim())];
            let kc = ring.basis()[rng.gen_range(0..ring.dim())];
            let ab = ring.multiply_basis(&ka, &kb);
            let bc = ring.multiply_basis(&kb, &kc);
            let left = ring.multiply(&ab, &LinComb::term(kc, C::one()));
            let right = ring.multiply(&LinComb::term(ka, C::one()), &bc);
            assert_eq!(left, right, "({ka:?} {kb:?}) {kc:?}");
        }
    }

    #[test]
    fn associativity_random_n3() {
        check_associative_random(&ArcRing::new(3, Frobenius::classical()), 500, 1701);
        check_associative_random(&ArcRing::new(3, Frobenius::equivariant()), 250, 1702);
    }

    #[test]
    fn surgery_order_is_irrelevant() {
        let classical = ArcRing::new(2, Frobenius::classical());
        let equivariant = ArcRing::new(2, Frobenius::equivariant());
        for ku in classical.basis() {
            for kv in classical.basis() {
                assert_eq!(
                    classical.multiply_basis(ku, kv),
                    classical.multiply_basis_reversed(ku, kv)
                );
            }
        }
        for ku in equivariant.basis() {
            for kv in equivariant.basis() {
                assert_eq!(
                    equivariant.multiply_basis(ku, kv),
                    equivariant.multiply_basis_reversed(ku, kv)
                );
            }
        }
    }

    #[test]
    fn grading_is_preserved() {
        for n in 1..=2 {
            ArcRing::new(n, Frobenius::classical()).grading_check().unwrap();
            ArcRing::new(n, Frobenius::equivariant()).grading_check().unwrap();
            ArcRing::new(n, Frobenius::x_squared_t()).grading_check().unwrap();
        }
        // the unit sits in degree zero
        let ring = ArcRing::new(3, Frobenius::classical());
        for (k, _) in ring.one().terms() {
            assert_eq!(ring.degree(k), 0);
        }
        // and an all-X diagonal labeling in degree 2n
        let top = ArcKey(0, 0, (1u32 << 3) - 1);
        assert_eq!(ring.degree(&top), 6);
    }

    #[test]
    fn grading_n3_classical() {
        let pairs = ArcRing::new(3, Frobenius::classical()).grading_check().unwrap();
        assert!(pairs > 0);
    }

    #[test]
    fn json_table_shape() {
        let ring = ArcRing::new(2, Frobenius::classical());
        let table = ring.table_json();
        assert_eq!(table["dimension"], 12);
        assert_eq!(table["variant"], "classical");
        assert_eq!(table["basis"].as_array().unwrap().len(), 12);
        // the unit row of each idempotent appears among the products
        let products = table["products"].as_array().unwrap();
        assert!(!products.is_empty());
        for p in products {
            assert!(p["terms"].as_array().map(|t| !t.is_empty()).unwrap_or(false));
        }
    }

    #[test]
    fn random_elements_multiply_bilinearly() {
        let ring = ArcRing::new(2, Frobenius::classical());
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let mut u: ArcElt<BigInt> = LinComb::new();
            let mut v: ArcElt<BigInt> = LinComb::new();
            for _ in 0..3 {
                u.add_term(
                    ring.basis()[rng.gen_range(0..ring.dim())],
                    BigInt::from(rng.gen_range(-3i64..=3)),
                );
                v.add_term(
                    ring.basis()[rng.gen_range(0..ring.dim())],
                    BigInt::from(rng.gen_range(-3i64..=3)),
                );
            }
            let direct = ring.multiply(&u, &v);
            let mut termwise: ArcElt<BigInt> = LinComb::new();
            for (ku, cu) in u.terms() {
                for (kv, cv) in v.terms() {
                    let p = ring.multiply_basis(ku, kv).scale(&Ring::mul(cu, cv));
                    termwise = termwise.add(&p);
                }
            }
            assert_eq!(direct, termwise);
        }
    }
}
