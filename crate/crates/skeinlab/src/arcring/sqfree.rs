//! Square-free polynomial algebras and the kernel ideals of the
//! vertical-strand closure.
//!
//! Elements of `Z[c_1..c_m]/(c_i^2 - s)` are stored as maps from variable
//! subsets (bitmask keys) to coefficients; multiplying two monomials
//! contributes `s^(overlap)` on the symmetric difference, so `s = 0` is the
//! plain square-free ring and `s = t` its deformation. On top of the
//! arithmetic sit the elementary symmetric functions, the reduction
//! identity for the upper half of them, the deformed `e^t_k` family, and
//! the two kernel-ideal computations: over the integers with `c_i^2 = 0`
//! and over the rational function field with `c_i^2 = t`.

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::diagrams::Matching;
use crate::exactmath::{
    integer_kernel, LinComb, Matrix, PolyHT, RatFun, Ring, RowLattice,
};

/// An element of a square-free algebra: subset bitmask -> coefficient.
pub type SqFree<C> = LinComb<u32, C>;

/// The constant 1.
pub fn sq_one<C: Ring>() -> SqFree<C> {
    LinComb::term(0, C::one())
}

/// The generator `c_i` (zero-based variable index).
pub fn sq_var<C: Ring>(i: usize) -> SqFree<C> {
    LinComb::term(1 << i, C::one())
}

/// Product under `c_i^2 = square`.
pub fn sq_mul<C: Ring>(x: &SqFree<C>, y: &SqFree<C>, square: &C) -> SqFree<C> {
    let mut out = LinComb::new();
    for (&s, cx) in x.terms() {
        for (&t, cy) in y.terms() {
            let overlap = (s & t).count_ones();
            let mut c = Ring::mul(cx, cy);
            for _ in 0..overlap {
                c = Ring::mul(&c, square);
            }
            if !c.is_zero() {
                out.add_term(s ^ t, c);
            }
        }
    }
    out
}

/// `x^k` under `c_i^2 = square`.
pub fn sq_pow<C: Ring>(x: &SqFree<C>, k: usize, square: &C) -> SqFree<C> {
    let mut out = sq_one();
    for _ in 0..k {
        out = sq_mul(&out, x, square);
    }
    out
}

/// The elementary symmetric function `e_k` in the listed variables.
pub fn e_k_of<C: Ring>(vars: &[usize], k: usize) -> SqFree<C> {
    let mut out = LinComb::new();
    for subset in crate::diagrams::k_subsets(vars.len(), k) {
        let mask = subset.iter().fold(0u32, |m, &i| m | (1 << vars[i]));
        out.add_term(mask, C::one());
    }
    out
}

/// `e_k` in the first `nvars` variables.
pub fn e_k<C: Ring>(nvars: usize, k: usize) -> SqFree<C> {
    let vars: Vec<usize> = (0..nvars).collect();
    e_k_of(&vars, k)
}

/// Coordinates of a square-free element in the full monomial basis
/// (masks `0..2^nvars` in increasing order).
pub fn sq_to_vec<C: Ring>(x: &SqFree<C>, nvars: usize) -> Vec<C> {
    let mut v = vec![C::zero(); 1 << nvars];
    for (&mask, c) in x.terms() {
        v[mask as usize] = c.clone();
    }
    v
}

/// Under `c_i^2 = 0` on `2n` variables, the upper elementary symmetric
/// functions reduce to the lower ones:
/// `e_{n+k} = sum_{m=1}^{n-k+1} (-1)^(m+1) e_m(c_{n+k}, .., c_{2n-1}) e_{n+k-m}`
/// (zero-based variables). Returns true when the identity holds for every
/// `1 <= k <= n`.
pub fn upper_e_reduction_holds(n: usize) -> bool {
    let nvars = 2 * n;
    let zero: BigInt = Ring::zero();
    for k in 1..=n {
        let lhs: SqFree<BigInt> = e_k(nvars, n + k);
        let tail: Vec<usize> = (n + k - 1..nvars).collect();
        let mut rhs: SqFree<BigInt> = LinComb::new();
        for m in 1..=(n - k + 1) {
            let left = e_k_of::<BigInt>(&tail, m);
            let prod = sq_mul(&left, &e_k(nvars, n + k - m), &zero);
            let sign = if m % 2 == 1 { BigInt::from(1) } else { BigInt::from(-1) };
            rhs = rhs.add(&prod.scale(&sign));
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn polyht_div_int(p: &PolyHT, d: &BigInt) -> PolyHT {
    let mut out = PolyHT::new();
    for (&(hd, td), c) in p.terms() {
        assert!(
            Ring::is_zero(&(c % d)),
            "coefficient {c} not divisible by {d}"
        );
        out.insert_term(hd, td, c / d);
    }
    out
}

/// The deformed elementary symmetric function `e^t_k` on `nvars`
/// variables, defined by expanding `(c_1 + .. + c_nvars)^k` under
/// `c_i^2 = t`, stripping the lower deformed terms, and dividing by `k!`.
/// Every division is exact (asserted).
pub fn et_function(k: usize, nvars: usize) -> SqFree<PolyHT> {
    assert!(k >= 1, "e^t_k starts at k = 1");
    let t = PolyHT::t();
    let e1: SqFree<PolyHT> = e_k(nvars, 1);
    let mut ets: Vec<SqFree<PolyHT>> = vec![sq_one()];
    for kk in 1..=k {
        let pow = sq_pow(&e1, kk, &t);
        // the expansion is kk! e_kk plus multiples of smaller e_i (plus a
        // constant); the coefficient of the first i variables' product
        // isolates the e_i multiple
        let mut acc = pow.clone();
        for i in 1..kk {
            let gamma = pow.coeff(&((1u32 << i) - 1));
            if !gamma.is_zero() {
                acc = acc.sub(&ets[i].scale(&gamma));
            }
        }
        let fact = (1..=kk as i64).map(BigInt::from).fold(BigInt::from(1), |a, b| a * b);
        ets.push(acc.map_coeffs(|c| polyht_div_int(c, &fact)));
    }
    ets.swap_remove(k)
}

/// Fold the integer span `{g * c_S : g in gens, S any subset}` into an
/// echelon lattice.
fn ideal_lattice(gens: &[SqFree<BigInt>], nvars: usize, square: &BigInt) -> RowLattice {
    let dim = 1usize << nvars;
    let mut lat = RowLattice::new(dim);
    for g in gens {
        for mask in 0..dim as u32 {
            let prod = sq_mul(g, &LinComb::term(mask, BigInt::from(1)), square);
            lat.add_row(sq_to_vec(&prod, nvars));
        }
    }
    lat
}

/// Intersection of two integer lattices given by row bases, via the
/// integer kernel of the stacked column matrix.
fn intersect_lattices(a: &RowLattice, b: &RowLattice, dim: usize) -> RowLattice {
    let ra = a.rank();
    let cols = ra + b.rank();
    let m = Matrix::from_fn(dim, cols, |i, j| {
        if j < ra {
            a.rows()[j][i].clone()
        } else {
            -&b.rows()[j - ra][i]
        }
    });
    let mut out = RowLattice::new(dim);
    for sol in integer_kernel(&m) {
        let mut row = vec![BigInt::from(0); dim];
        for (j, c) in sol.iter().take(ra).enumerate() {
            for (i, cell) in row.iter_mut().enumerate() {
                *cell += c * &a.rows()[j][i];
            }
        }
        out.add_row(row);
    }
    out
}

/// Result of the integer kernel-ideal computation.
#[derive(Debug)]
pub struct KernelReport {
    pub n: usize,
    pub ambient_dim: usize,
    pub intersection_rank: usize,
    pub ideal_rank: usize,
    /// Double inclusion over the integers of the matching-ideal
    /// intersection and the ideal generated by `e_1..e_n`.
    pub intersection_equals_ideal: bool,
    /// Over the rationals, `e_1` alone generates the same ideal.
    pub rational_single_generator: bool,
}

/// Intersect the per-matching ideals `I_a = (c_i + c_j : (i,j) arc of a)`
/// inside `Z[c_1..c_2n]/(c_i^2)` and compare against `(e_1, .., e_n)`.
pub fn kernel_vert(n: usize) -> KernelReport {
    let nvars = 2 * n;
    let dim = 1usize << nvars;
    let zero: BigInt = Ring::zero();
    let mut inter: Option<RowLattice> = None;
    for a in Matching::all(n) {
        let gens: Vec<SqFree<BigInt>> = a
            .arcs()
            .iter()
            .map(|&(i, j)| sq_var::<BigInt>(i - 1).add(&sq_var(j - 1)))
            .collect();
        let lat = ideal_lattice(&gens, nvars, &zero);
        inter = Some(match inter {
            None => lat,
            Some(prev) => intersect_lattices(&prev, &lat, dim),
        });
    }
    let inter = inter.expect("at least one matching");

    let egens: Vec<SqFree<BigInt>> = (1..=n).map(|k| e_k(nvars, k)).collect();
    let ideal = ideal_lattice(&egens, nvars, &zero);
    let equal = inter.contains_lattice(&ideal) && ideal.contains_lattice(&inter);

    // rational comparison: (e_1) against (e_1, .., e_n)
    let e1only = ideal_lattice(&egens[..1], nvars, &zero);
    let to_q = |lat: &RowLattice| -> Matrix<BigRational> {
        lat.to_matrix().map(|x| BigRational::from_integer(x.clone()))
    };
    let qm = to_q(&e1only);
    let single = qm.rank() == ideal.rank()
        && ideal
            .rows()
            .iter()
            .all(|r| {
                let v: Vec<BigRational> =
                    r.iter().map(|x| BigRational::from_integer(x.clone())).collect();
                qm.row_space_contains(&v)
            });

    KernelReport {
        n,
        ambient_dim: dim,
        intersection_rank: inter.rank(),
        ideal_rank: ideal.rank(),
        intersection_equals_ideal: equal,
        rational_single_generator: single,
    }
}

fn polyht_to_ratfun(p: &PolyHT) -> RatFun {
    let mut out: RatFun = Ring::zero();
    for (&(hd, td), c) in p.terms() {
        assert_eq!(hd, 0, "no h-terms expected in the t-deformation");
        let mut term = RatFun::from_rational(BigRational::from_integer(c.clone()));
        for _ in 0..td {
            term = Ring::mul(&term, &RatFun::var());
        }
        out = Ring::add(&out, &term);
    }
    out
}

fn row_basis_field(rows: Vec<Vec<RatFun>>, dim: usize) -> Matrix<RatFun> {
    if rows.is_empty() {
        return Matrix::zero(0, dim);
    }
    let m = Matrix::from_rows(rows);
    let (r, pivots) = m.rref();
    let basis: Vec<Vec<RatFun>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    if basis.is_empty() {
        Matrix::zero(0, dim)
    } else {
        Matrix::from_rows(basis)
    }
}

/// Result of the kernel-ideal computation in `Q(t)[c]/(c_i^2 - t)`.
#[derive(Debug)]
pub struct KernelTReport {
    pub n: usize,
    pub intersection_rank: usize,
    pub ideal_rank: usize,
    pub intersection_equals_ideal: bool,
}

/// The `c_i^2 = t` version of [`kernel_vert`], over the field `Q(t)`:
/// intersect the matching ideals and compare with `(e^t_1, .., e^t_n)`.
pub fn kernel_vert_t(n: usize) -> KernelTReport {
    let nvars = 2 * n;
    let dim = 1usize << nvars;
    let t = RatFun::var();

    let ideal_basis = |gens: &[SqFree<RatFun>]| -> Matrix<RatFun> {
        let mut rows = Vec::new();
        for g in gens {
            for mask in 0..dim as u32 {
                let prod = sq_mul(g, &LinComb::term(mask, RatFun::one()), &t);
                rows.push(sq_to_vec(&prod, nvars));
            }
        }
        row_basis_field(rows, dim)
    };

    let mut inter: Option<Matrix<RatFun>> = None;
    for a in Matching::all(n) {
        let gens: Vec<SqFree<RatFun>> = a
            .arcs()
            .iter()
            .map(|&(i, j)| sq_var::<RatFun>(i - 1).add(&sq_var(j - 1)))
            .collect();
        let basis = ideal_basis(&gens);
        inter = Some(match inter {
            None => basis,
            Some(prev) => {
                // kernel of [prev^T | -basis^T] gives the intersection
                let ra = prev.rows();
                let cols = ra + basis.rows();
                let m = Matrix::from_fn(dim, cols, |i, j| {
                    if j < ra {
                        prev.at(j, i).clone()
                    } else {
                        Ring::neg(basis.at(j - ra, i))
                    }
                });
                let mut rows = Vec::new();
                for sol in m.kernel() {
                    let mut row = vec![RatFun::zero(); dim];
                    for (j, c) in sol.iter().take(ra).enumerate() {
                        for (i, cell) in row.iter_mut().enumerate() {
                            *cell = Ring::add(cell, &Ring::mul(c, prev.at(j, i)));
                        }
                    }
                    rows.push(row);
                }
                row_basis_field(rows, dim)
            }
        });
    }
    let inter = inter.expect("at least one matching");

    let egens: Vec<SqFree<RatFun>> = (1..=n)
        .map(|k| et_function(k, nvars).map_coeffs(|c| polyht_to_ratfun(c)))
        .collect();
    let ideal = ideal_basis(&egens);

    let contains = |outer: &Matrix<RatFun>, inner: &Matrix<RatFun>| -> bool {
        (0..inner.rows()).all(|i| outer.row_space_contains(inner.row(i)))
    };
    let equal = inter.rows() == ideal.rows()
        && contains(&inter, &ideal)
        && contains(&ideal, &inter);

    KernelTReport {
        n,
        intersection_rank: inter.rows(),
        ideal_rank: ideal.rows(),
        intersection_equals_ideal: equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_products() {
        let zero: BigInt = Ring::zero();
        let x0 = sq_var::<BigInt>(0);
        assert!(sq_mul(&x0, &x0, &zero).is_zero());
        let t = BigInt::from(7);
        assert_eq!(sq_mul(&x0, &x0, &t), LinComb::term(0, BigInt::from(7)));
        let sum = x0.add(&sq_var(1));
        let sq = sq_mul(&sum, &sum, &zero);
        // (c0 + c1)^2 = 2 c0 c1
        assert_eq!(sq, LinComb::term(0b11, BigInt::from(2)));
    }

    #[test]
    fn worked_reduction_example() {
        // e_3 on 4 variables equals (c_3 + c_4) e_2 - c_3 c_4 e_1
        let zero: BigInt = Ring::zero();
        let lhs: SqFree<BigInt> = e_k(4, 3);
        let tail = sq_var::<BigInt>(2).add(&sq_var(3));
        let tail2 = sq_mul(&sq_var::<BigInt>(2), &sq_var(3), &zero);
        let rhs = sq_mul(&tail, &e_k(4, 2), &zero)
            .sub(&sq_mul(&tail2, &e_k(4, 1), &zero));
        assert_eq!(lhs, rhs);
        // and e_4 = c_4 e_3 - (nothing else): the k = n case
        let lhs4: SqFree<BigInt> = e_k(4, 4);
        let rhs4 = sq_mul(&sq_var::<BigInt>(3), &e_k(4, 3), &zero);
        assert_eq!(lhs4, rhs4);
    }

    #[test]
    fn reduction_identity_up_to_n4() {
        for n in 1..=4 {
            assert!(upper_e_reduction_holds(n), "n = {n}");
        }
    }

    #[test]
    fn deformed_symmetric_functions() {
        // frozen values on 8 variables
        let et2 = et_function(2, 8);
        let mut expect2: SqFree<PolyHT> = e_k(8, 2);
        expect2.add_term(0, PolyHT::term(BigInt::from(4), 0, 1));
        assert_eq!(et2, expect2);

        let et3 = et_function(3, 8);
        assert_eq!(et3, e_k(8, 3));

        let et4 = et_function(4, 8);
        let mut expect4: SqFree<PolyHT> = e_k(8, 4);
        expect4.add_term(0, PolyHT::term(BigInt::from(-6), 0, 2));
        assert_eq!(et4, expect4);
    }

    #[test]
    fn deformed_specializes_to_plain() {
        for nvars in [2usize, 4, 6, 8] {
            for k in 1..=nvars / 2 {
                let et = et_function(k, nvars);
                let at_zero = et.map_coeffs(|p| p.at_zero());
                let plain: SqFree<BigInt> = e_k(nvars, k);
                assert_eq!(at_zero, plain, "k = {k}, nvars = {nvars}");
                if k % 2 == 1 {
                    // odd k: no deformation at all
                    assert_eq!(et, e_k::<PolyHT>(nvars, k), "odd k = {k} must be undeformed");
                }
            }
        }
    }

    #[test]
    fn kernel_ideal_smallest_case() {
        let report = kernel_vert(1);
        assert_eq!(report.ambient_dim, 4);
        // the single matching contributes I = (c_1 + c_2), which is also
        // e_1, so both sides are {c_1 + c_2, c_1 c_2}: rank 2
        assert_eq!(report.intersection_rank, 2);
        assert!(report.intersection_equals_ideal);
        assert!(report.rational_single_generator);
        assert_eq!(report.intersection_rank, report.ideal_rank);
    }

    #[test]
    fn kernel_ideal_n2_and_n3() {
        for n in [2usize, 3] {
            let report = kernel_vert(n);
            assert!(report.intersection_equals_ideal, "n = {n}");
            assert!(report.rational_single_generator, "n = {n}");
        }
    }

    #[test]
    fn kernel_ideal_deformed() {
        for n in [1usize, 2] {
            let report = kernel_vert_t(n);
            assert!(report.intersection_equals_ideal, "n = {n}");
        }
    }

    #[test]
    fn kernel_ideal_deformed_n3() {
        let report = kernel_vert_t(3);
        assert!(report.intersection_equals_ideal);
        assert_eq!(report.intersection_rank, report.ideal_rank);
    }
}
