//! Jones–Wenzl projectors, by the inductive recursion and by the
//! symmetric-group sum formula.
//!
//! The recursion is `p_1 = Id`, `p_{k+1} = (p_k ⊗ 1) - μ_k (p_k ⊗ 1) U_k
//! (p_k ⊗ 1)` with `μ_1 = 1/δ` and `μ_{k+1} = (δ - μ_k)^{-1}`, valid over
//! any field where the μ chain stays invertible. Two instantiations are
//! used: rational functions of `v` with `δ = -q - q^{-1}` (generic), and
//! plain rationals with `δ = 2` (the specialization where `μ_k = k/(k+1)`).
//!
//! The sum formula `p_n = [n]_-!^{-1} Σ_{s ∈ S_n} q^{-3 l(s)/2} T(s)` over
//! positive braid lifts of permutations is implemented independently as a
//! cross-check.

use itertools::Itertools;
use num::bigint::BigInt;
use num::rational::BigRational;

use super::{compose_elements, tensor_elements, TLElement, TLPairing};
use crate::exactmath::{minus_factorial, Field, RatFun, Ring};

/// The chain `p_1, ..., p_n` together with `μ_1, ..., μ_{n-1}`.
pub fn jw_chain<F: Field>(n: usize, delta: &F) -> (Vec<TLElement<F>>, Vec<F>) {
    assert!(n >= 1);
    let mut ps = vec![TLElement::term(TLPairing::identity(1), F::one())];
    let mut mus: Vec<F> = Vec::new();
    for k in 1..n {
        let mu = if k == 1 {
            delta.inv().expect("loop value must be invertible")
        } else {
            delta
                .sub(mus.last().unwrap())
                .inv()
                .expect("μ chain hit a zero of the Chebyshev recursion")
        };
        let wide = tensor_elements(
            &ps[k - 1],
            &TLElement::term(TLPairing::identity(1), F::one()),
        );
        let uk = TLElement::term(TLPairing::u(k + 1, k), F::one());
        let middle = compose_elements(&compose_elements(&wide, &uk, delta), &wide, delta);
        ps.push(wide.sub(&middle.scale(&mu)));
        mus.push(mu);
    }
    (ps, mus)
}

/// Generic projector over rational functions of `v`, `δ = -q - q^{-1}`.
pub fn jones_wenzl(n: usize) -> TLElement<RatFun> {
    let (mut ps, _) = jw_chain(n, &delta_ratfun());
    ps.pop().unwrap()
}

/// Projector at the `δ = 2` specialization, over plain rationals.
pub fn jones_wenzl_delta2(n: usize) -> TLElement<BigRational> {
    let (mut ps, _) = jw_chain(n, &BigRational::from_int(2));
    ps.pop().unwrap()
}

/// The loop value `-q - q^{-1}` as a rational function.
pub fn delta_ratfun() -> RatFun {
    RatFun::from_laurent_int(&super::delta_laurent())
}

fn positive_crossing(n: usize, i: usize) -> TLElement<RatFun> {
    let v = RatFun::var();
    let mut e = TLElement::term(TLPairing::u(n, i), v.clone());
    e.add_term(
        TLPairing::identity(n),
        v.inv().unwrap(),
    );
    e
}

/// A reduced word for the permutation `s` (as generator indices), found by
/// bubble sort; its length is the inversion number.
fn reduced_word(s: &[usize]) -> Vec<usize> {
    let mut s = s.to_vec();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..s.len().saturating_sub(1) {
            if s[i] > s[i + 1] {
                s.swap(i, i + 1);
                word.push(i + 1);
                swapped = true;
            }
        }
        if !swapped {
            return word;
        }
    }
}

/// The sum-formula projector `[n]_-!^{-1} Σ_s q^{-3 l(s)/2} T(s)`.
pub fn jones_wenzl_sum(n: usize) -> TLElement<RatFun> {
    assert!(n >= 1);
    let delta = delta_ratfun();
    let norm = RatFun::from_laurent_int(&minus_factorial(n as u32))
        .inv()
        .expect("[n]_-! is nonzero");
    let mut acc: TLElement<RatFun> = TLElement::new();
    for perm in (0..n).permutations(n) {
        let word = reduced_word(&perm);
        let mut lift = TLElement::term(TLPairing::identity(n), RatFun::one());
        for &i in &word {
            lift = compose_elements(&lift, &positive_crossing(n, i), &delta);
        }
        // weight q^{-3 l(s)/2} = v^{-3 l(s)}
        let weight = RatFun::from_laurent(crate::exactmath::LaurentV::v_pow(
            -3 * word.len() as i64,
        ));
        acc = acc.add(&lift.scale(&weight));
    }
    acc.scale(&norm)
}
