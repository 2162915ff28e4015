//! Smith normal form over the integers.
//!
//! `smith_normal_form(m)` produces unimodular `u`, `v` and a diagonal `d`
//! with `u * m * v = diag(d)` and the divisibility chain
//! `d[0] | d[1] | ...`. The transforms are kept so that lattice membership
//! and integer solving reduce to divisibility checks on `u * x`, and the
//! integer kernel falls out of the trailing columns of `v`.

use num::bigint::BigInt;

use super::{Matrix, Ring};

#[derive(Clone, Debug)]
pub struct Smith {
    /// Diagonal entries (length `min(rows, cols)`), nonnegative, each
    /// dividing the next; zeros trail.
    pub d: Vec<BigInt>,
    /// Unimodular row transform (`rows x rows`).
    pub u: Matrix<BigInt>,
    /// Unimodular column transform (`cols x cols`).
    pub v: Matrix<BigInt>,
    rows: usize,
    cols: usize,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !Ring::is_zero(*x)).count()
    }

    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .iter()
            .filter(|x| !Ring::is_zero(*x))
            .cloned()
            .collect()
    }

    /// True when the cokernel of the original matrix is torsion-free,
    /// i.e. every nonzero invariant factor is 1.
    pub fn cokernel_torsion_free(&self) -> bool {
        self.invariant_factors()
            .iter()
            .all(|x| *x == BigInt::from(1))
    }

    /// True when `x` lies in the integer column span of the original
    /// matrix.
    pub fn lattice_contains(&self, x: &[BigInt]) -> bool {
        self.solve(x).is_some()
    }

    /// Integer solution `y` of `m * y = x`, or `None`.
    pub fn solve(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(x.len(), self.rows);
        let z = self.u.mul_vec(x);
        let mut w = vec![BigInt::from(0); self.cols];
        for (i, zi) in z.iter().enumerate() {
            let di = self.d.get(i).cloned().unwrap_or_else(|| BigInt::from(0));
            if Ring::is_zero(&di) {
                if !Ring::is_zero(zi) {
                    return None;
                }
            } else {
                if !Ring::is_zero(&(zi % &di)) {
                    return None;
                }
                if i < self.cols {
                    w[i] = zi / &di;
                }
            }
        }
        Some(self.v.mul_vec(&w))
    }
}

fn row_sub(m: &mut Matrix<BigInt>, i: usize, t: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let val = m.at(i, j) - q * m.at(t, j);
        m.set(i, j, val);
    }
}

fn row_add(m: &mut Matrix<BigInt>, i: usize, t: usize) {
    for j in 0..m.cols() {
        let val = m.at(i, j) + m.at(t, j);
        m.set(i, j, val);
    }
}

fn row_swap(m: &mut Matrix<BigInt>, i: usize, t: usize) {
    for j in 0..m.cols() {
        let a = m.at(i, j).clone();
        let b = m.at(t, j).clone();
        m.set(i, j, b);
        m.set(t, j, a);
    }
}

fn row_neg(m: &mut Matrix<BigInt>, i: usize) {
    for j in 0..m.cols() {
        let val = -m.at(i, j);
        m.set(i, j, val);
    }
}

fn col_sub(m: &mut Matrix<BigInt>, j: usize, t: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let val = m.at(i, j) - q * m.at(i, t);
        m.set(i, j, val);
    }
}

fn col_swap(m: &mut Matrix<BigInt>, j: usize, t: usize) {
    for i in 0..m.rows() {
        let a = m.at(i, j).clone();
        let b = m.at(i, t).clone();
        m.set(i, j, b);
        m.set(i, t, a);
    }
}

pub fn smith_normal_form(m: &Matrix<BigInt>) -> Smith {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    let n = rows.min(cols);

    for t in 0..n {
        'place: loop {
            // smallest nonzero entry of the trailing submatrix -> (t, t)
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if Ring::is_zero(a.at(i, j)) {
                        continue;
                    }
                    let better = match &pivot {
                        None => true,
                        Some((pi, pj)) => {
                            num::abs(a.at(i, j).clone()) < num::abs(a.at(*pi, *pj).clone())
                        }
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'place; // trailing submatrix is zero
            };
            if pi != t {
                row_swap(&mut a, pi, t);
                row_swap(&mut u, pi, t);
            }
            if pj != t {
                col_swap(&mut a, pj, t);
                col_swap(&mut v, pj, t);
            }
            // clear column t
            for i in t + 1..rows {
                if !Ring::is_zero(a.at(i, t)) {
                    let q = a.at(i, t) / a.at(t, t);
                    row_sub(&mut a, i, t, &q);
                    row_sub(&mut u, i, t, &q);
                }
            }
            if (t + 1..rows).any(|i| !Ring::is_zero(a.at(i, t))) {
                continue 'place; // a remainder became the new smallest entry
            }
            // clear row t
            for j in t + 1..cols {
                if !Ring::is_zero(a.at(t, j)) {
                    let q = a.at(t, j) / a.at(t, t);
                    col_sub(&mut a, j, t, &q);
                    col_sub(&mut v, j, t, &q);
                }
            }
            if (t + 1..cols).any(|j| !Ring::is_zero(a.at(t, j))) {
                continue 'place;
            }
            // enforce divisibility of the trailing block by the pivot
            let bad_row = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !Ring::is_zero(&(a.at(i, j) % a.at(t, t))))
            });
            if let Some(i) = bad_row {
                row_add(&mut a, t, i);
                row_add(&mut u, t, i);
                continue 'place;
            }
            break 'place;
        }
        if a.at(t, t).sign() == num::bigint::Sign::Minus {
            row_neg(&mut a, t);
            row_neg(&mut u, t);
        }
    }

    let d = (0..n).map(|t| a.at(t, t).clone()).collect();
    Smith {
        d,
        u,
        v,
        rows,
        cols,
    }
}

/// Basis of the integer kernel (solutions of `m * x = 0` over `Z`): the
/// trailing columns of the Smith `v` transform.
pub fn integer_kernel(m: &Matrix<BigInt>) -> Vec<Vec<BigInt>> {
    let s = smith_normal_form(m);
    let rank = s.rank();
    (rank..m.cols()).map(|j| s.v.col(j)).collect()
}

/// Incremental integer row-echelon accumulator.
///
/// Rows are folded in one at a time using only lattice-preserving row
/// operations (subtracting integer multiples, swaps), so at any point
/// [`RowLattice::rows`] is a basis of the lattice spanned by everything
/// added so far. This keeps memory bounded by the ambient dimension when
/// the source has far more rows than columns, which is the usual shape for
/// commutator spans and ideal spans.
#[derive(Clone, Debug)]
pub struct RowLattice {
    cols: usize,
    /// Echelon rows ordered by strictly increasing pivot column.
    rows: Vec<Vec<BigInt>>,
}

impl RowLattice {
    pub fn new(cols: usize) -> Self {
        RowLattice { cols, rows: Vec::new() }
    }

    fn pivot(row: &[BigInt]) -> usize {
        row.iter()
            .position(|x| !Ring::is_zero(x))
            .expect("stored rows are nonzero")
    }

    pub fn add_row(&mut self, mut row: Vec<BigInt>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        loop {
            let Some(lead) = row.iter().position(|x| !Ring::is_zero(x)) else {
                return;
            };
            let slot = self
                .rows
                .iter()
                .position(|r| Self::pivot(r) >= lead)
                .unwrap_or(self.rows.len());
            if slot == self.rows.len() || Self::pivot(&self.rows[slot]) > lead {
                if row[lead].sign() == num::bigint::Sign::Minus {
                    for x in row.iter_mut() {
                        *x = -&*x;
                    }
                }
                self.rows.insert(slot, row);
                return;
            }
            // same pivot column: one euclidean step, swapping so the
            // smaller leading entry stays in the basis
            let q = &row[lead] / &self.rows[slot][lead];
            if !Ring::is_zero(&q) {
                for j in lead..self.cols {
                    let val = &row[j] - &q * &self.rows[slot][j];
                    row[j] = val;
                }
            }
            if Ring::is_zero(&row[lead]) {
                continue; // move on to this row's next pivot candidate
            }
            std::mem::swap(&mut row, &mut self.rows[slot]);
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True when `v` lies in the lattice spanned by the added rows:
    /// reduce left to right against the echelon basis and check that
    /// everything cancels over the integers.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut v = v.to_vec();
        let mut next = 0usize;
        for col in 0..self.cols {
            let pivot_here = next < self.rows.len() && Self::pivot(&self.rows[next]) == col;
            if pivot_here {
                let r = &self.rows[next];
                if !Ring::is_zero(&v[col]) {
                    if !Ring::is_zero(&(&v[col] % &r[col])) {
                        return false;
                    }
                    let q = &v[col] / &r[col];
                    for j in col..self.cols {
                        let val = &v[j] - &q * &r[j];
                        v[j] = val;
                    }
                }
                next += 1;
            } else if !Ring::is_zero(&v[col]) {
                return false;
            }
        }
        true
    }

    /// True when every row of `other` lies in this lattice.
    pub fn contains_lattice(&self, other: &RowLattice) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn to_matrix(&self) -> Matrix<BigInt> {
        if self.rows.is_empty() {
            Matrix::zero(0, self.cols)
        } else {
            Matrix::from_rows(self.rows.clone())
        }
    }

    /// Invariant factors of the accumulated lattice.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        smith_normal_form(&self.to_matrix()).invariant_factors()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmat(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    fn check_transforms(m: &Matrix<BigInt>, s: &Smith) {
        let lhs = s.u.mul(m).mul(&s.v);
        let n = m.rows().min(m.cols());
        let mut diag = Matrix::zero(m.rows(), m.cols());
        for t in 0..n {
            diag.set(t, t, s.d[t].clone());
        }
        assert_eq!(lhs, diag, "u*m*v must equal diag(d)");
        assert_eq!(num::abs(s.u.det_bareiss()), BigInt::from(1));
        assert_eq!(num::abs(s.v.det_bareiss()), BigInt::from(1));
        for w in s.d.windows(2) {
            if !Ring::is_zero(&w[0]) && !Ring::is_zero(&w[1]) {
                assert!(Ring::is_zero(&(&w[1] % &w[0])), "divisibility chain");
            }
        }
    }

    #[test]
    fn diagonal_oracles() {
        let m = zmat(vec![vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        check_transforms(&m, &s);
        assert_eq!(s.d, vec![BigInt::from(1), BigInt::from(6)]);

        let m = zmat(vec![vec![2, 0], vec![0, 4]]);
        let s = smith_normal_form(&m);
        check_transforms(&m, &s);
        assert_eq!(s.d, vec![BigInt::from(2), BigInt::from(4)]);

        let m = zmat(vec![vec![0, 0], vec![0, 0]]);
        let s = smith_normal_form(&m);
        check_transforms(&m, &s);
        assert_eq!(s.d, vec![BigInt::from(0), BigInt::from(0)]);
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn classic_rank_two_example() {
        let m = zmat(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        let s = smith_normal_form(&m);
        check_transforms(&m, &s);
        assert_eq!(
            s.d,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(0)]
        );
        assert_eq!(s.rank(), 2);
        assert!(!s.cokernel_torsion_free());
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| Ring::is_zero(x)));
    }

    #[test]
    fn lattice_membership() {
        // columns span { (2a, 3b) }
        let m = zmat(vec![vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        let pt = |a: i64, b: i64| vec![BigInt::from(a), BigInt::from(b)];
        assert!(s.lattice_contains(&pt(2, 3)));
        assert!(s.lattice_contains(&pt(-4, 0)));
        assert!(!s.lattice_contains(&pt(1, 0)));
        assert!(!s.lattice_contains(&pt(2, 2)));
        let y = s.solve(&pt(6, -3)).unwrap();
        assert_eq!(m.mul_vec(&y), pt(6, -3));
    }

    #[test]
    fn solve_non_square() {
        let m = zmat(vec![vec![2, 4, 4]]);
        let s = smith_normal_form(&m);
        check_transforms(&m, &s);
        assert_eq!(s.d, vec![BigInt::from(2)]);
        let y = s.solve(&[BigInt::from(10)]).unwrap();
        assert_eq!(m.mul_vec(&y), vec![BigInt::from(10)]);
        assert!(s.solve(&[BigInt::from(3)]).is_none());
        assert_eq!(integer_kernel(&m).len(), 2);
    }

    #[test]
    fn row_lattice_accumulates_exactly() {
        let zrow = |r: Vec<i64>| r.into_iter().map(BigInt::from).collect::<Vec<_>>();
        let mut lat = RowLattice::new(3);
        lat.add_row(zrow(vec![2, 4, 0]));
        lat.add_row(zrow(vec![3, 6, 0]));
        lat.add_row(zrow(vec![0, 0, 0]));
        // gcd of the first two rows is (1, 2, 0)
        assert_eq!(lat.rank(), 1);
        assert!(lat.contains(&zrow(vec![5, 10, 0])));
        assert!(!lat.contains(&zrow(vec![1, 0, 0])));
        lat.add_row(zrow(vec![0, 5, 1]));
        lat.add_row(zrow(vec![0, 0, 7]));
        assert_eq!(lat.rank(), 3);
        assert!(lat.contains(&zrow(vec![1, 2, 0])));
        assert!(lat.contains(&zrow(vec![0, 5, 8])));
        assert!(!lat.contains(&zrow(vec![0, 1, 0])));
        // same lattice as the matrix of all five rows
        let m = zmat(vec![
            vec![2, 4, 0],
            vec![3, 6, 0],
            vec![0, 0, 0],
            vec![0, 5, 1],
            vec![0, 0, 7],
        ]);
        assert_eq!(
            lat.invariant_factors(),
            smith_normal_form(&m).invariant_factors()
        );
    }
}
