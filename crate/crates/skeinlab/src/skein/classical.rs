//! The classical (`q = -1`) rewrite engine.
//!
//! Relations live on four points `a < b < c < d` that are matched either
//! disjointly (`(a,b), (c,d)`) or nested (`(a,d), (b,c)`), with everything
//! else fixed:
//!
//! * type I:  `disj.dot(a,b) + disj.dot(c,d) - nest.dot(a,d) - nest.dot(b,c) = 0`
//! * type II: `disj.dot(a,b).dot(c,d) - nest.dot(a,d).dot(b,c) = 0`
//!
//! Solving each for the term whose dot sits on the inner nested arc turns
//! the relations into rewrite rules that strictly reduce the number of
//! arcs containing dots, so repeated rewriting terminates in the span of
//! diagrams whose dots all sit on outer arcs.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagrams::{Diagram, Matching};
use crate::exactmath::{Matrix, Ring};

use super::{
    nested_pairs, rewire_disjoint, spectator_dots, with_dots, NestedPair, SkeinElement,
};

/// A diagram is in normal form when every dotted arc is outer.
pub fn is_normal(d: &Diagram) -> bool {
    d.dots().iter().all(|(&l, &m)| {
        let (_, r) = d.matching().arc_of(l);
        m == 1 && d.matching().is_outer(l, r)
    })
}

/// The next rewrite site of `d`: the dotted non-outer arc with the most
/// containers (tie: smallest left endpoint), paired with its innermost
/// container. `None` when `d` is in normal form.
///
/// Panics on a dot of multiplicity two or more; the classical calculus
/// has no such diagrams (they belong to the equivariant engine).
pub fn pivot(d: &Diagram) -> Option<NestedPair> {
    let mut best: Option<(usize, usize, usize)> = None; // (depth, left, right)
    for (&l, &mult) in d.dots() {
        assert_eq!(mult, 1, "classical diagrams carry at most one dot per arc");
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
    // innermost container: the one starting furthest to the right
    let (a, d_end) = d
        .matching()
        .containers(b, c)
        .into_iter()
        .max_by_key(|&(a, _)| a)
        .expect("pivot has a container");
    Some(NestedPair { a, b, c, d: d_end })
}

/// Rewrite the pivot term of `d` as a combination of diagrams that are
/// strictly closer to normal form.
pub fn rewrite(d: &Diagram, p: &NestedPair) -> SkeinElement<BigInt> {
    let disj = rewire_disjoint(d.matching(), p)
        .expect("rewiring against the innermost container is always planar");
    let base = spectator_dots(d, p);
    let mut e = SkeinElement::new();
    if d.dots().contains_key(&p.a) {
        // type II: both active arcs dotted
        e.add_term(with_dots(&disj, &base, &[p.a, p.c]), BigInt::one());
    } else {
        // type I solved for the inner-dot term
        e.add_term(with_dots(&disj, &base, &[p.a]), BigInt::one());
        e.add_term(with_dots(&disj, &base, &[p.c]), BigInt::one());
        e.add_term(
            with_dots(d.matching(), &base, &[p.a]),
            -BigInt::one(),
        );
    }
    e
}

/// Normal form of a skein element: rewrite until every dot in every term
/// sits on an outer arc. Deterministic; like terms combine at each step.
pub fn reduce(e: &SkeinElement<BigInt>) -> SkeinElement<BigInt> {
    let mut cur = e.clone();
    loop {
        let hit = cur
            .terms()
            .find_map(|(d, c)| pivot(d).map(|p| (d.clone(), c.clone(), p)));
        let Some((d, c, p)) = hit else {
            return cur;
        };
        cur.add_term(d.clone(), -c.clone());
        cur = cur.add(&rewrite(&d, &p).scale(&c));
    }
}

/// Every admissible move on `d`: any dotted non-outer arc against any of
/// its containers that admits a planar rewiring, not only the innermost.
pub fn moves(d: &Diagram) -> Vec<NestedPair> {
    let mut out = Vec::new();
    for (&b, &m) in d.dots() {
        assert_eq!(m, 1, "classical diagrams carry at most one dot per arc");
        let (_, c) = d.matching().arc_of(b);
        for (a, dd) in d.matching().containers(b, c) {
            let p = NestedPair { a, b, c, d: dd };
            if rewire_disjoint(d.matching(), &p).is_some() {
                out.push(p);
            }
        }
    }
    out
}

/// Normal form along a random rewrite order: at each step pick a random
/// reducible term and a random admissible move on it. Terminates because
/// every move strictly shrinks the containment statistic of each new term.
pub fn reduce_random_order(e: &SkeinElement<BigInt>, rng: &mut ChaCha8Rng) -> SkeinElement<BigInt> {
    let mut cur = e.clone();
    loop {
        let reducible: Vec<(Diagram, BigInt, Vec<NestedPair>)> = cur
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
        let p = ms.choose(rng).expect("nonempty");
        let step = rewrite(d, p);
        for (t, _) in step.terms() {
            debug_assert!(
                t.containment_statistic() < d.containment_statistic(),
                "moves must shrink the containment statistic"
            );
        }
        cur.add_term(d.clone(), -c.clone());
        cur = cur.add(&step.scale(c));
    }
}

/// A random diagram on `2n` points with each arc independently dotted.
pub fn random_diagram(n: usize, rng: &mut ChaCha8Rng) -> Diagram {
    let matchings = Matching::all(n);
    let m = matchings.choose(rng).expect("n >= 1").clone();
    let mut dots = BTreeMap::new();
    for &(l, _) in m.arcs() {
        if rng.gen_bool(0.5) {
            dots.insert(l, 1);
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
            let d = random_diagram(n, &mut rng);
            let c = BigInt::from(rng.gen_range(-3i64..=3));
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

/// All type I / type II relations among diagrams with `k` dots on `2n`
/// points, as skein elements. Every diagram appearing has exactly `k`
/// dots, one per arc.
pub fn relations(n: usize, k: usize) -> Vec<SkeinElement<BigInt>> {
    let mut out = Vec::new();
    for m in Matching::all(n) {
        for p in nested_pairs(&m) {
            let Some(disj) = rewire_disjoint(&m, &p) else {
                continue;
            };
            let spectators: Vec<usize> = m
                .arcs()
                .iter()
                .map(|&(l, _)| l)
                .filter(|&l| l != p.a && l != p.b)
                .collect();
            // type I: one active dot, k-1 spectator dots
            if k >= 1 && spectators.len() >= k - 1 {
                for sub in crate::diagrams::k_subsets(spectators.len(), k - 1) {
                    let base: BTreeMap<usize, u32> =
                        sub.iter().map(|&i| (spectators[i], 1)).collect();
                    let mut e = SkeinElement::new();
                    e.add_term(with_dots(&disj, &base, &[p.a]), BigInt::one());
                    e.add_term(with_dots(&disj, &base, &[p.c]), BigInt::one());
                    e.add_term(with_dots(&m, &base, &[p.a]), -BigInt::one());
                    e.add_term(with_dots(&m, &base, &[p.b]), -BigInt::one());
                    out.push(e);
                }
            }
            // type II: both active arcs dotted, k-2 spectator dots
            if k >= 2 && spectators.len() >= k - 2 {
                for sub in crate::diagrams::k_subsets(spectators.len(), k - 2) {
                    let base: BTreeMap<usize, u32> =
                        sub.iter().map(|&i| (spectators[i], 1)).collect();
                    let mut e = SkeinElement::new();
                    e.add_term(with_dots(&disj, &base, &[p.a, p.c]), BigInt::one());
                    e.add_term(with_dots(&m, &base, &[p.a, p.b]), -BigInt::one());
                    out.push(e);
                }
            }
        }
    }
    out
}

/// The relation matrix of `relations(n, k)` in the spanning set
/// `all_dotted(n, k)`: one row per relation, one column per diagram.
pub fn relation_matrix(n: usize, k: usize) -> (Vec<Diagram>, Matrix<BigInt>) {
    let ambient = Diagram::all_dotted(n, k);
    let index: BTreeMap<Diagram, usize> = ambient
        .iter()
        .enumerate()
        .map(|(i, d)| (d.clone(), i))
        .collect();
    let rels = relations(n, k);
    let rows: Vec<Vec<BigInt>> = rels
        .iter()
        .map(|r| {
            r.to_vector(&index, ambient.len())
                .expect("relation terms stay inside the spanning set")
        })
        .collect();
    let mat = if rows.is_empty() {
        Matrix::zero(0, ambient.len())
    } else {
        Matrix::from_rows(rows)
    };
    (ambient, mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::smith_normal_form;

    fn diag(arcs: Vec<(usize, usize)>, dots: Vec<usize>) -> Diagram {
        let mut d = Diagram::undotted(Matching::from_arcs(arcs).unwrap());
        for l in dots {
            d = d.with_dot(l);
        }
        d
    }

    #[test]
    fn worked_example() {
        // dot on (2,3) inside undotted (1,4)
        let x = SkeinElement::singleton(diag(vec![(1, 4), (2, 3)], vec![2]));
        let r = reduce(&x);
        let mut want = SkeinElement::new();
        want.add_term(diag(vec![(1, 2), (3, 4)], vec![1]), BigInt::from(1));
        want.add_term(diag(vec![(1, 2), (3, 4)], vec![3]), BigInt::from(1));
        want.add_term(diag(vec![(1, 4), (2, 3)], vec![1]), BigInt::from(-1));
        assert_eq!(r, want);
    }

    #[test]
    fn type_ii_example() {
        // dots on both (1,4) and (2,3)
        let x = SkeinElement::singleton(diag(vec![(1, 4), (2, 3)], vec![1, 2]));
        let r = reduce(&x);
        let want = SkeinElement::singleton(diag(vec![(1, 2), (3, 4)], vec![1, 3]));
        assert_eq!(r, want);
    }

    #[test]
    fn basis_diagrams_are_fixed_points() {
        for n in 0..=3 {
            for k in 0..=n {
                for b in Diagram::basis(n, k) {
                    assert!(is_normal(&b));
                    let e = SkeinElement::singleton(b);
                    assert_eq!(reduce(&e), e);
                }
            }
        }
    }

    #[test]
    fn reduce_is_idempotent_and_lands_on_outer_dots() {
        for n in 1..=3 {
            for k in 1..=n {
                for d in Diagram::all_dotted(n, k) {
                    let r = reduce(&SkeinElement::singleton(d));
                    for (t, _) in r.terms() {
                        assert!(is_normal(t));
                    }
                    assert_eq!(reduce(&r), r);
                }
            }
        }
    }

    #[test]
    fn quotient_rank_matches_basis_count() {
        for n in 1..=3 {
            for k in 0..=n {
                let (ambient, mat) = relation_matrix(n, k);
                let rank = if mat.rows() == 0 {
                    0
                } else {
                    smith_normal_form(&mat).rank()
                };
                assert_eq!(
                    ambient.len() - rank,
                    Diagram::basis(n, k).len(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn random_rewrite_orders_are_confluent() {
        assert_eq!(confluence_check(3, 100, 17), 100);
    }

    #[test]
    fn reduction_stays_in_coset() {
        // reduce(x) - x must be an integer combination of relation rows
        for n in 1..=3 {
            for k in 1..=n {
                let (ambient, mat) = relation_matrix(n, k);
                if mat.rows() == 0 {
                    continue;
                }
                let index: BTreeMap<Diagram, usize> = ambient
                    .iter()
                    .enumerate()
                    .map(|(i, d)| (d.clone(), i))
                    .collect();
                let snf = smith_normal_form(&mat.transpose());
                for d in &ambient {
                    let x = SkeinElement::singleton(d.clone());
                    let diff = reduce(&x).sub(&x);
                    let v = diff
                        .to_vector(&index, ambient.len())
                        .expect("reduction stays in the spanning set");
                    assert!(snf.lattice_contains(&v), "n={n} k={k} d={d}");
                }
            }
        }
    }
}
