//! The equivariant rewrite engine, over `Z[h, t]`.
//!
//! Three relation families, each again on four points `a < b < c < d`
//! matched disjointly or nested with spectators fixed:
//!
//! * dot reduction: `m` dots on one arc (`m >= 2`) equals
//!   `h * (m-1 dots) + t * (m-2 dots)`;
//! * type I:  `(disj.dot(a,b) + disj.dot(c,d) - h*disj) -
//!   (nest.dot(a,d) + nest.dot(b,c) - h*nest) = 0`;
//! * type II: `(disj.dot(a,b).dot(c,d) + t*disj) -
//!   (nest.dot(a,d).dot(b,c) + t*nest) = 0`.
//!
//! Setting `h = t = 0` recovers the classical relations. The engine
//! first clears multiplicities, then moves dots off nested arcs; the
//! pair (total excess multiplicity, containment statistic) drops
//! lexicographically at every step, for *any* admissible choice of move,
//! so normal forms exist along every rewrite order. `confluence_check`
//! exercises random orders against the deterministic one.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagrams::{Diagram, Matching};
use crate::exactmath::{binomial, Matrix, PolyHT, Ring};

use super::{rewire_disjoint, spectator_dots, with_dots, NestedPair, SkeinElement};

/// One admissible rewrite move on a diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    /// Clear a multiplicity `>= 2` on the arc with this left endpoint.
    DotReduction(usize),
    /// Move the dot off the inner arc; the outer arc is undotted.
    TypeI(NestedPair),
    /// Move the dots off both arcs of the nested pair.
    TypeII(NestedPair),
}

/// Normal form: every dot simple and on an outer arc.
pub fn is_normal(d: &Diagram) -> bool {
    d.dots().iter().all(|(&l, &m)| {
        let (_, r) = d.matching().arc_of(l);
        m == 1 && d.matching().is_outer(l, r)
    })
}

/// Every admissible move on `d`. Type moves require both active arcs
/// free of multiplicity (inner dotted once, container undotted or dotted
/// once) and a planar rewiring, but ignore multiplicities elsewhere.
pub fn moves(d: &Diagram) -> Vec<Move> {
    let mut out = Vec::new();
    for (&l, &m) in d.dots() {
        if m >= 2 {
            out.push(Move::DotReduction(l));
        }
    }
    for (&b, &m) in d.dots() {
        if m != 1 {
            continue;
        }
        let (_, c) = d.matching().arc_of(b);
        for (a, dd) in d.matching().containers(b, c) {
            let p = NestedPair { a, b, c, d: dd };
            if rewire_disjoint(d.matching(), &p).is_none() {
                continue;
            }
            match d.dots().get(&a) {
                None => out.push(Move::TypeI(p)),
                Some(1) => out.push(Move::TypeII(p)),
                Some(_) => {} // clear the container's multiplicity first
            }
        }
    }
    out
}

/// The deterministic move: clear the leftmost multiplicity if any,
/// otherwise take the deepest dotted arc (tie: smallest left endpoint)
/// against its innermost container.
pub fn pivot_move(d: &Diagram) -> Option<Move> {
    if let Some((&l, _)) = d.dots().iter().find(|(_, &m)| m >= 2) {
        return Some(Move::DotReduction(l));
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for (&l, _) in d.dots() {
        let (_, r) = d.matching().arc_of(l);
        let depth = d.matching().containers(l, r).len();
        if depth == 0 {
            continue;
        }
        let better = match best {
            None => true,
            Some((bd, bl, _)) => depth > bd || (depth == bd && l < bl),
        };
        if better {
            best = Some((depth, l, r));
        }
    }
    let (_, b, c) = best?;
    let (a, dd) = d
        .matching()
        .containers(b, c)
        .into_iter()
        .max_by_key(|&(a, _)| a)
        .expect("non-outer arc has a container");
    let p = NestedPair { a, b, c, d: dd };
    if d.dots().contains_key(&p.a) {
        Some(Move::TypeII(p))
    } else {
        Some(Move::TypeI(p))
    }
}

fn excess(d: &Diagram) -> u32 {
    d.dots().values().map(|&m| m.saturating_sub(1)).sum()
}

/// Rewrite one term by one move. Every output diagram is strictly
/// smaller in the (excess, containment) lexicographic order.
pub fn rewrite(d: &Diagram, mv: &Move) -> SkeinElement<PolyHT> {
    let mut e = SkeinElement::new();
    match *mv {
        Move::DotReduction(l) => {
            let m = *d.dots().get(&l).expect("dotted arc");
            assert!(m >= 2);
            e.add_term(d.set_dots(l, m - 1), PolyHT::h());
            e.add_term(d.set_dots(l, m - 2), PolyHT::t());
        }
        Move::TypeI(p) => {
            assert_eq!(d.dots().get(&p.b), Some(&1));
            assert!(!d.dots().contains_key(&p.a));
            let disj = rewire_disjoint(d.matching(), &p).expect("move is admissible");
            let base = spectator_dots(d, &p);
            e.add_term(with_dots(&disj, &base, &[p.a]), PolyHT::one());
            e.add_term(with_dots(&disj, &base, &[p.c]), PolyHT::one());
            e.add_term(with_dots(&disj, &base, &[]), PolyHT::h().neg());
            e.add_term(with_dots(d.matching(), &base, &[p.a]), PolyHT::one().neg());
            e.add_term(with_dots(d.matching(), &base, &[]), PolyHT::h());
        }
        Move::TypeII(p) => {
            assert_eq!(d.dots().get(&p.b), Some(&1));
            assert_eq!(d.dots().get(&p.a), Some(&1));
            let disj = rewire_disjoint(d.matching(), &p).expect("move is admissible");
            let base = spectator_dots(d, &p);
            e.add_term(with_dots(&disj, &base, &[p.a, p.c]), PolyHT::one());
            e.add_term(with_dots(&disj, &base, &[]), PolyHT::t());
            e.add_term(with_dots(d.matching(), &base, &[]), PolyHT::t().neg());
        }
    }
    let before = (excess(d), d.containment_statistic());
    for (t, _) in e.terms() {
        let after = (excess(t), t.containment_statistic());
        debug_assert!(after < before, "rewrite must shrink {before:?} -> {after:?}");
    }
    e
}

/// Deterministic normal form.
pub fn reduce(e: &SkeinElement<PolyHT>) -> SkeinElement<PolyHT> {
    let mut cur = e.clone();
    loop {
        let hit = cur
            .terms()
            .find_map(|(d, c)| pivot_move(d).map(|mv| (d.clone(), c.clone(), mv)));
        let Some((d, c, mv)) = hit else {
            return cur;
        };
        cur.add_term(d.clone(), c.clone().neg());
        cur = cur.add(&rewrite(&d, &mv).scale(&c));
    }
}

/// Normal form along a random rewrite order: at each step pick a random
/// reducible term and a random admissible move on it.
pub fn reduce_random_order(e: &SkeinElement<PolyHT>, rng: &mut ChaCha8Rng) -> SkeinElement<PolyHT> {
    let mut cur = e.clone();
    loop {
        let reducible: Vec<(Diagram, PolyHT, Vec<Move>)> = cur
            .terms()
            .filter_map(|(d, c)| {
                let ms = moves(d);
                if ms.is_empty() {
                    None
                } else {
                    Some((d.clone(), c.clone(), ms))
                }
            })
            .collect();
        if reducible.is_empty() {
            return cur;
        }
        let (d, c, ms) = reducible.choose(rng).expect("nonempty");
        let mv = ms.choose(rng).expect("nonempty");
        cur.add_term(d.clone(), c.clone().neg());
        cur = cur.add(&rewrite(d, mv).scale(c));
    }
}

/// A random diagram on `2n` points with dot multiplicities up to `max_mult`.
pub fn random_diagram(n: usize, max_mult: u32, rng: &mut ChaCha8Rng) -> Diagram {
    let matchings = Matching::all(n);
    let m = matchings.choose(rng).expect("n >= 1").clone();
    let mut dots = BTreeMap::new();
    for &(l, _) in m.arcs() {
        let mult = rng.gen_range(0..=max_mult);
        if mult > 0 {
            dots.insert(l, mult);
        }
    }
    Diagram::new(m, dots).expect("left endpoints are valid dot keys")
}

/// Run `trials` random-order reductions of random elements and compare
/// each against the deterministic normal form. Returns the number of
/// agreeing trials (equal to `trials` unless confluence fails).
pub fn confluence_check(n: usize, trials: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = 0;
    for _ in 0..trials {
        let mut e = SkeinElement::new();
        for _ in 0..rng.gen_range(1..=2) {
            let d = random_diagram(n, 3, &mut rng);
            let c = PolyHT::constant(BigInt::from(rng.gen_range(-3i64..=3)));
            e.add_term(d, c);
        }
        let reference = reduce(&e);
        let shuffled = reduce_random_order(&e, &mut rng);
        if reference == shuffled {
            ok += 1;
        }
    }
    ok
}

/// All type I / type II relation elements among simple-dotted diagrams on
/// `2n` points (any number of dots), as elements over `Z[h, t]`.
pub fn relations(n: usize) -> Vec<SkeinElement<PolyHT>> {
    let mut out = Vec::new();
    for m in Matching::all(n) {
        for p in super::nested_pairs(&m) {
            let Some(disj) = rewire_disjoint(&m, &p) else {
                continue;
            };
            let spectators: Vec<usize> = m
                .arcs()
                .iter()
                .map(|&(l, _)| l)
                .filter(|&l| l != p.a && l != p.b)
                .collect();
            for s in 0..=spectators.len() {
                for sub in crate::diagrams::k_subsets(spectators.len(), s) {
                    let base: BTreeMap<usize, u32> =
                        sub.iter().map(|&i| (spectators[i], 1)).collect();
                    let mut e1 = SkeinElement::new();
                    e1.add_term(with_dots(&disj, &base, &[p.a]), PolyHT::one());
                    e1.add_term(with_dots(&disj, &base, &[p.c]), PolyHT::one());
                    e1.add_term(with_dots(&disj, &base, &[]), PolyHT::h().neg());
                    e1.add_term(with_dots(&m, &base, &[p.a]), PolyHT::one().neg());
                    e1.add_term(with_dots(&m, &base, &[p.b]), PolyHT::one().neg());
                    e1.add_term(with_dots(&m, &base, &[]), PolyHT::h());
                    out.push(e1);
                    let mut e2 = SkeinElement::new();
                    e2.add_term(with_dots(&disj, &base, &[p.a, p.c]), PolyHT::one());
                    e2.add_term(with_dots(&disj, &base, &[]), PolyHT::t());
                    e2.add_term(with_dots(&m, &base, &[p.a, p.b]), PolyHT::one().neg());
                    e2.add_term(with_dots(&m, &base, &[]), PolyHT::t().neg());
                    out.push(e2);
                }
            }
        }
    }
    out
}

/// Every simple-dotted diagram on `2n` points: the union over `k` of the
/// `k`-dotted spanning sets.
pub fn ambient(n: usize) -> Vec<Diagram> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(Diagram::all_dotted(n, k));
    }
    out.sort();
    out
}

/// The relation matrix with `h`, `t` specialized to rational values.
pub fn relation_matrix_at(
    n: usize,
    h: &BigRational,
    t: &BigRational,
) -> (Vec<Diagram>, Matrix<BigRational>) {
    let amb = ambient(n);
    let index: BTreeMap<Diagram, usize> = amb
        .iter()
        .enumerate()
        .map(|(i, d)| (d.clone(), i))
        .collect();
    let rels = relations(n);
    let rows: Vec<Vec<BigRational>> = rels
        .iter()
        .map(|r| {
            r.map_coeffs(|p| p.eval(h, t))
                .to_vector(&index, amb.len())
                .expect("relation terms are simple-dotted")
        })
        .collect();
    let mat = if rows.is_empty() {
        Matrix::zero(0, amb.len())
    } else {
        Matrix::from_rows(rows)
    };
    (amb, mat)
}

/// The dimension the quotient must have: the total number of standard
/// basis diagrams, which also equals
/// `sum_k (2k+1)/(n+k+1) * C(2n, n+k)`.
pub fn expected_rank(n: usize) -> usize {
    let mut total = BigInt::from(0);
    for k in 0..=n {
        let c = binomial(2 * n, n + k);
        let num = c * BigInt::from(2 * k as i64 + 1);
        let den = BigInt::from((n + k + 1) as i64);
        assert!(
            (&num % &den).is_zero(),
            "rank summand must be an integer"
        );
        total += num / den;
    }
    let by_basis: usize = (0..=n).map(|k| Diagram::basis(n, k).len()).sum();
    let total_usize: usize = total.to_string().parse().expect("small rank");
    assert_eq!(total_usize, by_basis, "two rank formulas must agree");
    total_usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::classical;

    fn diag(arcs: Vec<(usize, usize)>, dots: Vec<(usize, u32)>) -> Diagram {
        let mut d = Diagram::undotted(Matching::from_arcs(arcs).unwrap());
        for (l, m) in dots {
            d = d.with_dots(l, m);
        }
        d
    }

    #[test]
    fn dot_reduction_example() {
        // two dots on a single arc: h * (one dot) + t * (no dots)
        let x = SkeinElement::singleton(diag(vec![(1, 2)], vec![(1, 2)]));
        let r = reduce(&x);
        let mut want = SkeinElement::new();
        want.add_term(diag(vec![(1, 2)], vec![(1, 1)]), PolyHT::h());
        want.add_term(diag(vec![(1, 2)], vec![]), PolyHT::t());
        assert_eq!(r, want);
    }

    #[test]
    fn type_i_example() {
        let x = SkeinElement::singleton(diag(vec![(1, 4), (2, 3)], vec![(2, 1)]));
        let r = reduce(&x);
        let mut want = SkeinElement::new();
        want.add_term(diag(vec![(1, 2), (3, 4)], vec![(1, 1)]), PolyHT::one());
        want.add_term(diag(vec![(1, 2), (3, 4)], vec![(3, 1)]), PolyHT::one());
        want.add_term(diag(vec![(1, 2), (3, 4)], vec![]), PolyHT::h().neg());
        want.add_term(diag(vec![(1, 4), (2, 3)], vec![(1, 1)]), PolyHT::one().neg());
        want.add_term(diag(vec![(1, 4), (2, 3)], vec![]), PolyHT::h());
        assert_eq!(r, want);
    }

    #[test]
    fn type_ii_example() {
        let x = SkeinElement::singleton(diag(vec![(1, 4), (2, 3)], vec![(1, 1), (2, 1)]));
        let r = reduce(&x);
        let mut want = SkeinElement::new();
        want.add_term(diag(vec![(1, 2), (3, 4)], vec![(1, 1), (3, 1)]), PolyHT::one());
        want.add_term(diag(vec![(1, 2), (3, 4)], vec![]), PolyHT::t());
        want.add_term(diag(vec![(1, 4), (2, 3)], vec![]), PolyHT::t().neg());
        assert_eq!(r, want);
    }

    #[test]
    fn h_t_zero_specializes_to_classical() {
        for n in 1..=3 {
            for k in 1..=n {
                for d in Diagram::all_dotted(n, k) {
                    let eq = reduce(&SkeinElement::singleton(d.clone()));
                    let at_zero = eq.map_coeffs(|p| p.at_zero());
                    let cl = classical::reduce(&SkeinElement::singleton(d));
                    assert_eq!(at_zero, cl);
                }
            }
        }
    }

    #[test]
    fn relation_elements_reduce_to_zero() {
        for n in 1..=3 {
            for r in relations(n) {
                assert!(reduce(&r).is_zero(), "n={n}: {r}");
            }
        }
    }

    #[test]
    fn quotient_rank_at_specializations() {
        for n in 1..=3 {
            let want = expected_rank(n);
            for (h, t) in [(0i64, 0i64), (5, 7)] {
                let h = BigRational::from(BigInt::from(h));
                let t = BigRational::from(BigInt::from(t));
                let (amb, mat) = relation_matrix_at(n, &h, &t);
                let rank = if mat.rows() == 0 { 0 } else { mat.rank() };
                assert_eq!(amb.len() - rank, want, "n={n}");
            }
        }
    }

    #[test]
    fn confluence_small() {
        assert_eq!(confluence_check(2, 30, 11), 30);
        assert_eq!(confluence_check(3, 30, 12), 30);
    }

    #[test]
    fn normal_forms_have_simple_outer_dots() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let d = random_diagram(3, 3, &mut rng);
            let r = reduce(&SkeinElement::singleton(d));
            for (t, _) in r.terms() {
                assert!(is_normal(t));
            }
        }
    }

    #[test]
    fn expected_rank_values() {
        // n = 1: 1 undotted + 1 dotted; n = 2: 2 + 3 + 1; n = 3: 5 + 9 + 5 + 1
        assert_eq!(expected_rank(1), 2);
        assert_eq!(expected_rank(2), 6);
        assert_eq!(expected_rank(3), 20);
    }
}
