//! Exact matrix model of the strand calculus on tensor powers of the
//! two-dimensional representation.
//!
//! Basis of `V^{⊗n}`: index bits read left to right, bit 0 = `v^{+1}`,
//! bit 1 = `v^{-1}` (factor 1 is the most significant bit). The elementary
//! intertwiners are
//!
//! ```text
//! eps1(v^{+1} ⊗ v^{-1}) = -q,   eps1(v^{-1} ⊗ v^{+1}) = 1,   else 0
//! delta1(1) = v^{+1} ⊗ v^{-1} - q^{-1} v^{-1} ⊗ v^{+1}
//! ```
//!
//! so that `eps1 ∘ delta1 = -q - q^{-1}` and both zig-zag composites are
//! the identity. Crossings act by `v·U + v^{-1}·Id` as in the diagram
//! calculus, so representing matrices of slice words factor through
//! [`expand_word`](super::expand_word).

use num::bigint::BigInt;

use super::{compose_pairings, End, Slice, SliceWord, TLElement, TLPairing};
use crate::exactmath::{LaurentV, Matrix, Ring};

type L = LaurentV<BigInt>;

fn lid(n: usize) -> Matrix<L> {
    Matrix::identity(1 << n)
}

/// The evaluation map `V ⊗ V -> 1` as a 1 x 4 row.
pub fn eps1_matrix() -> Matrix<L> {
    Matrix::from_rows(vec![vec![
        L::zero(),
        L::q_pow(1).neg(),
        L::one(),
        L::zero(),
    ]])
}

/// The coevaluation map `1 -> V ⊗ V` as a 4 x 1 column.
pub fn delta1_matrix() -> Matrix<L> {
    Matrix::from_rows(vec![
        vec![L::zero()],
        vec![L::one()],
        vec![L::q_pow(-1).neg()],
        vec![L::zero()],
    ])
}

/// Evaluation applied to factors `i, i+1` of `V^{⊗n}`.
pub fn cap_rep(n: usize, i: usize) -> Matrix<L> {
    assert!(n >= 2 && (1..n).contains(&i));
    lid(i - 1).kronecker(&eps1_matrix()).kronecker(&lid(n - i - 1))
}

/// Coevaluation inserting new factors at positions `i, i+1`.
pub fn cup_rep(n: usize, i: usize) -> Matrix<L> {
    assert!((1..=n + 1).contains(&i));
    lid(i - 1).kronecker(&delta1_matrix()).kronecker(&lid(n + 1 - i))
}

/// `U_i = 1^{⊗(i-1)} ⊗ (delta1 ∘ eps1) ⊗ 1^{⊗(n-i-1)}` on `V^{⊗n}`.
pub fn u_rep(n: usize, i: usize) -> Matrix<L> {
    assert!(n >= 2 && (1..n).contains(&i));
    let small = delta1_matrix().mul(&eps1_matrix());
    lid(i - 1).kronecker(&small).kronecker(&lid(n - i - 1))
}

/// Crossing of factors `i, i+1`: `v·U_i + v^{-1}·Id` (positive) or the
/// conjugate weights (negative).
pub fn t_rep(n: usize, i: usize, positive: bool) -> Matrix<L> {
    let (wu, wid) = if positive { (1, -1) } else { (-1, 1) };
    u_rep(n, i)
        .scale(&L::v_pow(wu))
        .add(&lid(n).scale(&L::v_pow(wid)))
}

/// The full intertwiner package for width `n`.
pub struct IntertwinerMatrices {
    pub eps1: Matrix<L>,
    pub delta1: Matrix<L>,
    pub t: Vec<Matrix<L>>,
    pub u: Vec<Matrix<L>>,
}

pub fn intertwiner_matrices(n: usize) -> IntertwinerMatrices {
    IntertwinerMatrices {
        eps1: eps1_matrix(),
        delta1: delta1_matrix(),
        t: (1..n).map(|i| t_rep(n, i, true)).collect(),
        u: (1..n).map(|i| u_rep(n, i)).collect(),
    }
}

/// Matrix of a single pairing, `2^top x 2^bottom`, in the sign-string
/// basis. Planarity makes the entry a product of local arc weights:
/// through strands force equal signs, caps weigh `(+,-) -> -q`,
/// `(-,+) -> 1`, cups weigh `(+,-) -> 1`, `(-,+) -> -q^{-1}`.
pub fn rep_of_pairing(p: &TLPairing) -> Matrix<L> {
    let (b, t) = (p.bottom(), p.top());
    let bit = |state: usize, width: usize, pos: usize| (state >> (width - pos)) & 1;
    Matrix::from_fn(1 << t, 1 << b, |ti, bi| {
        let sign = |e: End| match e {
            End::Bottom(i) => bit(bi, b, i),
            End::Top(j) => bit(ti, t, j),
        };
        let mut w = L::one();
        for &(x, y) in p.disk().arcs() {
            let (e1, e2) = (p.end_at_pos(x), p.end_at_pos(y));
            let (s1, s2) = (sign(e1), sign(e2));
            let factor = match (e1, e2) {
                (End::Bottom(_), End::Top(_)) | (End::Top(_), End::Bottom(_)) => {
                    if s1 == s2 {
                        L::one()
                    } else {
                        L::zero()
                    }
                }
                (End::Bottom(i), End::Bottom(j)) => {
                    let (lo, hi) = if i < j { (s1, s2) } else { (s2, s1) };
                    match (lo, hi) {
                        (0, 1) => L::q_pow(1).neg(),
                        (1, 0) => L::one(),
                        _ => L::zero(),
                    }
                }
                (End::Top(i), End::Top(j)) => {
                    let (lo, hi) = if i < j { (s1, s2) } else { (s2, s1) };
                    match (lo, hi) {
                        (0, 1) => L::one(),
                        (1, 0) => L::q_pow(-1).neg(),
                        _ => L::zero(),
                    }
                }
            };
            if factor.is_zero() {
                return L::zero();
            }
            w = w.mul(&factor);
        }
        w
    })
}

/// Linear extension of [`rep_of_pairing`].
pub fn rep_of_element(e: &TLElement<L>, bottom: usize, top: usize) -> Matrix<L> {
    let mut acc = Matrix::zero(1 << top, 1 << bottom);
    for (p, c) in e.terms() {
        assert_eq!((p.bottom(), p.top()), (bottom, top), "mixed shapes");
        acc = acc.add(&rep_of_pairing(p).scale(c));
    }
    acc
}

/// Matrix of a slice word as a product of elementary slice matrices.
pub fn rep_of_word(w: &SliceWord) -> Result<Matrix<L>, String> {
    let mut width = w.bottom;
    let mut acc = lid(width);
    for s in &w.slices {
        let m = match *s {
            Slice::Cap(i) => {
                let m = cap_rep(width, i);
                width -= 2;
                m
            }
            Slice::Cup(i) => {
                let m = cup_rep(width, i);
                width += 2;
                m
            }
            Slice::Xp(i) => t_rep(width, i, true),
            Slice::Xm(i) => t_rep(width, i, false),
        };
        acc = m.mul(&acc);
    }
    w.widths()?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tlcalc::{delta_laurent, expand_word};

    #[test]
    fn circle_evaluates_to_delta() {
        let circ = eps1_matrix().mul(&delta1_matrix());
        assert_eq!(circ.at(0, 0), &delta_laurent());
    }

    #[test]
    fn zig_zag_identities() {
        // (1 ⊗ eps1)(delta1 ⊗ 1) = 1 and (eps1 ⊗ 1)(1 ⊗ delta1) = 1 on V
        let left = lid(1)
            .kronecker(&eps1_matrix())
            .mul(&delta1_matrix().kronecker(&lid(1)));
        let right = eps1_matrix()
            .kronecker(&lid(1))
            .mul(&lid(1).kronecker(&delta1_matrix()));
        assert_eq!(left, lid(1));
        assert_eq!(right, lid(1));
    }

    #[test]
    fn u_satisfies_planar_relations() {
        let d = delta_laurent();
        for n in 2..=4 {
            for i in 1..n {
                let u = u_rep(n, i);
                assert_eq!(u.mul(&u), u.scale(&d));
            }
            for i in 1..n.saturating_sub(1) {
                let a = u_rep(n, i);
                let b = u_rep(n, i + 1);
                assert_eq!(a.mul(&b).mul(&a), a);
                assert_eq!(b.mul(&a).mul(&b), b);
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        let t1 = t_rep(3, 1, true);
        let t2 = t_rep(3, 2, true);
        assert_eq!(t1.mul(&t2).mul(&t1), t2.mul(&t1).mul(&t2));
        // inverses compose to the identity
        let t1m = t_rep(3, 1, false);
        assert_eq!(t1.mul(&t1m), lid(3));
    }

    #[test]
    fn pairing_matrices_are_functorial() {
        let d = delta_laurent();
        for x in TLPairing::all(2, 2) {
            for y in TLPairing::all(2, 2) {
                let (glued, circles) = compose_pairings(&x, &y);
                let mut lhs = rep_of_pairing(&glued);
                for _ in 0..circles {
                    lhs = lhs.scale(&d);
                }
                assert_eq!(lhs, rep_of_pairing(&y).mul(&rep_of_pairing(&x)));
            }
        }
        assert_eq!(rep_of_pairing(&TLPairing::u(3, 2)), u_rep(3, 2));
        assert_eq!(rep_of_pairing(&TLPairing::cap(2, 1)), eps1_matrix());
        assert_eq!(rep_of_pairing(&TLPairing::cup(0, 1)), delta1_matrix());
    }

    #[test]
    fn word_matrices_factor_through_expansion() {
        let words = [
            SliceWord {
                bottom: 2,
                slices: vec![Slice::Xp(1), Slice::Cup(2), Slice::Cap(1)],
            },
            SliceWord {
                bottom: 3,
                slices: vec![Slice::Xp(2), Slice::Xm(1), Slice::Cap(2)],
            },
            SliceWord {
                bottom: 0,
                slices: vec![Slice::Cup(1), Slice::Cup(1), Slice::Xp(2)],
            },
        ];
        for w in words {
            let top = w.top().unwrap();
            let direct = rep_of_word(&w).unwrap();
            let expanded = rep_of_element(&expand_word(&w).unwrap(), w.bottom, top);
            assert_eq!(direct, expanded);
        }
    }
}
