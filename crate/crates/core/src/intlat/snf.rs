use super::matrix::{subsets, IntMatrix};
use crate::error::{domain, input, Result};
use crate::scalar::{xgcd, IntScalar};

/// A = U·D·V with U, V unimodular and D diagonal with α₁ | α₂ | ….
/// The inverses are kept as well: D = U⁻¹·A·V⁻¹.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub u: IntMatrix<T>,
    pub d: IntMatrix<T>,
    pub v: IntMatrix<T>,
    pub u_inv: IntMatrix<T>,
    pub v_inv: IntMatrix<T>,
    /// α₁, …, α_min(rows, cols); trailing zeros past the rank.
    pub invariant_factors: Vec<T>,
}

impl<T: IntScalar> SmithDecomposition<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|a| !a.is_zero()).count()
    }

    /// Nonzero invariant factors.
    pub fn elementary_divisors(&self) -> &[T] {
        &self.invariant_factors[..self.rank()]
    }
}

struct Work<T> {
    d: IntMatrix<T>,
    u: IntMatrix<T>,
    v: IntMatrix<T>,
    u_inv: IntMatrix<T>,
    v_inv: IntMatrix<T>,
}

fn inverse2<T: IntScalar>(m: &[T; 4]) -> [T; 4] {
    let det = m[0].clone() * m[3].clone() - m[1].clone() * m[2].clone();
    debug_assert!(det.abs().is_one());
    [
        det.clone() * m[3].clone(),
        -(det.clone() * m[1].clone()),
        -(det.clone() * m[2].clone()),
        det * m[0].clone(),
    ]
}

impl<T: IntScalar> Work<T> {
    fn row_op(&mut self, a: usize, b: usize, m: [T; 4]) {
        let inv = inverse2(&m);
        self.d.combine_rows(a, b, &m);
        self.u_inv.combine_rows(a, b, &m);
        self.u.combine_cols(a, b, &inv);
    }

    fn col_op(&mut self, a: usize, b: usize, m: [T; 4]) {
        let inv = inverse2(&m);
        self.d.combine_cols(a, b, &m);
        self.v_inv.combine_cols(a, b, &m);
        self.v.combine_rows(a, b, &inv);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            self.d.swap_rows(a, b);
            self.u_inv.swap_rows(a, b);
            self.u.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            self.d.swap_cols(a, b);
            self.v_inv.swap_cols(a, b);
            self.v.swap_rows(a, b);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.d.cols() {
            self.d[(a, j)] = -self.d[(a, j)].clone();
        }
        for j in 0..self.u_inv.cols() {
            self.u_inv[(a, j)] = -self.u_inv[(a, j)].clone();
        }
        for i in 0..self.u.rows() {
            self.u[(i, a)] = -self.u[(i, a)].clone();
        }
    }
}

/// Smith normal form A = U·D·V.
pub fn smith_normal_form<T: IntScalar>(a: &IntMatrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work {
        d: a.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        u_inv: IntMatrix::identity(rows),
        v_inv: IntMatrix::identity(cols),
    };
    let k = rows.min(cols);
    let mut t = 0;
    while t < k {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &w.d[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            loop {
                for i in t + 1..rows {
                    if !w.d[(i, t)].is_zero() {
                        let (x, y) = (w.d[(t, t)].clone(), w.d[(i, t)].clone());
                        let m = if y.is_multiple_of(&x) {
                            [T::one(), T::zero(), -(y / x), T::one()]
                        } else {
                            let (g, s, r) = xgcd(&x, &y);
                            [s, r, -(y / g.clone()), x / g]
                        };
                        w.row_op(t, i, m);
                    }
                }
                for j in t + 1..cols {
                    if !w.d[(t, j)].is_zero() {
                        let (x, y) = (w.d[(t, t)].clone(), w.d[(t, j)].clone());
                        let m = if y.is_multiple_of(&x) {
                            [T::one(), -(y / x), T::zero(), T::one()]
                        } else {
                            let (g, s, r) = xgcd(&x, &y);
                            [s, -(y / g.clone()), r, x / g]
                        };
                        w.col_op(t, j, m);
                    }
                }
                let clear = (t + 1..rows).all(|i| w.d[(i, t)].is_zero());
                if clear {
                    break;
                }
            }
            let pivot = w.d[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !w.d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.row_op(t, i, [T::one(), T::one(), T::zero(), T::one()]),
                None => break,
            }
        }
        if w.d[(t, t)].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let invariant_factors = (0..k).map(|i| w.d[(i, i)].clone()).collect();
    SmithDecomposition { u: w.u, d: w.d, v: w.v, u_inv: w.u_inv, v_inv: w.v_inv, invariant_factors }
}

/// d_k(A): gcd of all k×k minors, computed directly from the minors.
pub fn minor_gcd<T: IntScalar>(a: &IntMatrix<T>, k: usize) -> Result<T> {
    if k == 0 || k > a.rows().min(a.cols()) {
        return Err(domain!(
            "minor size {} out of range 1..={} for a {}x{} matrix",
            k,
            a.rows().min(a.cols()),
            a.rows(),
            a.cols()
        ));
    }
    let mut g = T::zero();
    for rs in subsets(a.rows(), k) {
        for cs in subsets(a.cols(), k) {
            let m = a.submatrix(&rs, &cs).det()?;
            g = g.gcd(&m);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// Check the SNF contract; used by tests and the CLI self-check.
pub fn verify_smith<T: IntScalar>(a: &IntMatrix<T>, s: &SmithDecomposition<T>) -> Result<()> {
    let back = s.u.mul(&s.d)?.mul(&s.v)?;
    if &back != a {
        return Err(input!("U·D·V does not reproduce A"));
    }
    if !s.u.is_unimodular() || !s.v.is_unimodular() {
        return Err(input!("transform is not unimodular"));
    }
    let n = s.u.rows();
    let m = s.v.rows();
    if s.u.mul(&s.u_inv)? != IntMatrix::identity(n) || s.v.mul(&s.v_inv)? != IntMatrix::identity(m) {
        return Err(input!("stored inverses are wrong"));
    }
    for w in s.invariant_factors.windows(2) {
        if w[0].is_negative() || !w[1].is_multiple_of(&w[0]) {
            return Err(input!("invariant factors do not form a divisibility chain"));
        }
    }
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j && !s.d[(i, j)].is_zero() {
                return Err(input!("D is not diagonal"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> IntMatrix<BigInt> {
        IntMatrix::from_i64_rows(rows)
    }

    fn factors(a: &IntMatrix<BigInt>) -> Vec<i64> {
        let s = smith_normal_form(a);
        verify_smith(a, &s).unwrap();
        s.invariant_factors.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(factors(&m(&[&[1, 0], &[0, 1]])), vec![1, 1]);
        assert_eq!(factors(&m(&[&[2, 4], &[6, 8]])), vec![2, 4]);
        assert_eq!(factors(&m(&[&[2, 0], &[0, 4]])), vec![2, 4]);
        assert_eq!(factors(&m(&[&[4, 0], &[0, 6]])), vec![2, 12]);
        assert_eq!(factors(&m(&[&[0, 0, 0], &[0, 0, 0]])), vec![0, 0]);
        assert_eq!(factors(&m(&[&[1, 2]])), vec![1]);
        assert_eq!(factors(&m(&[&[-3], &[6]])), vec![3]);
    }

    #[test]
    fn fixed_width_scalar_works() {
        let a: IntMatrix<i64> = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&a);
        verify_smith(&a, &s).unwrap();
        assert_eq!(s.invariant_factors, vec![2, 6, 12]);
    }

    #[test]
    fn minors_examples() {
        let a = m(&[&[2, 4], &[6, 8]]);
        assert_eq!(minor_gcd(&a, 1).unwrap(), BigInt::from(2));
        assert_eq!(minor_gcd(&a, 2).unwrap(), BigInt::from(8));
        let diag = IntMatrix::diagonal(3, 3, &[2, 6, 30].map(BigInt::from));
        assert_eq!(minor_gcd(&diag, 2).unwrap(), BigInt::from(12));
        assert_eq!(minor_gcd(&diag, 3).unwrap(), BigInt::from(360));
        assert!(minor_gcd(&a, 3).is_err());
    }
}
