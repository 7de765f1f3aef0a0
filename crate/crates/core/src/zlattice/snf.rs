//! Smith and Hermite normal forms over the integers.
//!
//! Every matrix operation here is exact. The Smith decomposition tracks both
//! the transforms and their inverses so that callers can move between the
//! original coordinates and the diagonal coordinates without inverting
//! anything afterwards.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `m = u * d * v`, with `u_inv * m * v_inv = d`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// The diagonal entries `d_1 | d_2 | ...`, including trailing zeros up
    /// to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

struct Reducer {
    a: IntMatrix,
    p: IntMatrix,
    u: IntMatrix,
    q: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn row_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        self.p.add_row_multiple(dst, src, c);
        self.u.add_col_multiple(src, dst, &-c);
    }

    fn col_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        self.q.add_col_multiple(dst, src, c);
        self.v.add_row_multiple(src, dst, &-c);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.p.swap_rows(i, j);
        self.u.swap_cols(i, j);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.q.swap_cols(i, j);
        self.v.swap_rows(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        self.p.negate_row(i);
        self.u.negate_col(i);
    }

    /// Smallest nonzero |entry| in the trailing block, first in row-major order.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if x.abs() >= self.a[(bi, bj)].abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

/// Canonical Smith normal form.
///
/// Pivots are chosen by smallest absolute value, ties broken row-major, and
/// the diagonal is made nonnegative, so the output is a deterministic
/// function of the input.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = Reducer {
        a: m.clone(),
        p: IntMatrix::identity(rows),
        u: IntMatrix::identity(rows),
        q: IntMatrix::identity(cols),
        v: IntMatrix::identity(cols),
    };

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = r.pivot(t) else {
                return finish(r);
            };
            r.row_swap(t, pi);
            r.col_swap(t, pj);

            let piv = r.a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if !r.a[(i, t)].is_zero() {
                    let qt = r.a[(i, t)].div_floor(&piv);
                    r.row_add(i, t, &-qt);
                    dirty |= !r.a[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !r.a[(t, j)].is_zero() {
                    let qt = r.a[(t, j)].div_floor(&piv);
                    r.col_add(j, t, &-qt);
                    dirty |= !r.a[(t, j)].is_zero();
                }
            }
            if dirty {
                continue;
            }
            // Pivot isolated; enforce divisibility on the trailing block.
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !r.a[(i, j)].is_multiple_of(&piv))
            });
            match offender {
                Some(i) => r.row_add(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if r.a[(t, t)].is_negative() {
            r.row_negate(t);
        }
    }
    finish(r)
}

fn finish(r: Reducer) -> SmithForm {
    SmithForm {
        u: r.u,
        d: r.a,
        v: r.v,
        u_inv: r.p,
        v_inv: r.q,
    }
}

/// Row-style Hermite normal form: the nonzero rows of the result form the
/// canonical basis of the row lattice. Pivots are positive and entries above
/// each pivot are reduced into `[0, pivot)`.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut prow = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if prow == rows {
            break;
        }
        loop {
            let best = (prow..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&i, &j| a[(i, c)].abs().cmp(&a[(j, c)].abs()).then(i.cmp(&j)));
            let Some(b) = best else { break };
            a.swap_rows(prow, b);
            let piv = a[(prow, c)].clone();
            let mut done = true;
            for i in prow + 1..rows {
                if !a[(i, c)].is_zero() {
                    let qt = a[(i, c)].div_floor(&piv);
                    a.add_row_multiple(i, prow, &-qt);
                    done &= a[(i, c)].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if prow < rows && !a[(prow, c)].is_zero() {
            if a[(prow, c)].is_negative() {
                a.negate_row(prow);
            }
            pivots.push((prow, c));
            prow += 1;
        }
    }
    for &(pr, pc) in &pivots {
        let piv = a[(pr, pc)].clone();
        for i in 0..pr {
            let qt = a[(i, pc)].div_floor(&piv);
            a.add_row_multiple(i, pr, &-qt);
        }
    }
    let kept: Vec<Vec<BigInt>> = (0..prow).map(|i| a.row(i).to_vec()).collect();
    IntMatrix::from_rows_with_cols(&kept, cols)
}

/// Basis (as columns) of the integer kernel `{x : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let rank = s.rank();
    let cols: Vec<Vec<BigInt>> = (rank..m.cols()).map(|j| s.v_inv.col(j)).collect();
    IntMatrix::from_cols(&cols, m.cols())
}

/// Some integer solution of `m x = b`, or `None` when none exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.rows());
    let s = smith_normal_form(m);
    let w = s.u_inv.mul_vec(b);
    let diag = s.diagonal();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, wi) in w.iter().enumerate() {
        match diag.get(i) {
            Some(d) if !d.is_zero() => {
                if !wi.is_multiple_of(d) {
                    return None;
                }
                y[i] = wi / d;
            }
            _ => {
                if !wi.is_zero() {
                    return None;
                }
            }
        }
    }
    Some(s.v_inv.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * &s.d) * &s.v, *m);
        assert_eq!(&(&s.u_inv * m) * &s.v_inv, s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        s
    }

    #[test]
    fn identity_stays_identity() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        // gcd of entries is 2 and |det| = 8, so the invariant factors are 2, 4.
        let s = check(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.d, IntMatrix::diagonal(&[2, 4]));
    }

    #[test]
    fn zero_map() {
        let s = check(&IntMatrix::from_rows(&[vec![0]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[vec![0]]));
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn divisibility_is_repaired() {
        let s = check(&IntMatrix::diagonal(&[4, 6]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn rectangular_inputs() {
        let s = check(&IntMatrix::from_rows(&[vec![3, 6, 9], vec![2, 4, 8]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let s = check(&IntMatrix::from_rows(&[vec![0, 0], vec![0, 5], vec![0, 10]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(5), BigInt::from(0)]);
    }

    #[test]
    fn hermite_basis() {
        let h = hermite_rows(&IntMatrix::from_rows(&[vec![4, 0], vec![0, 4], vec![2, 2]]));
        assert_eq!(h, IntMatrix::from_rows(&[vec![2, 2], vec![0, 4]]));
        let h = hermite_rows(&IntMatrix::from_rows(&[vec![0, 0]]));
        assert_eq!(h.rows(), 0);
        assert_eq!(h.cols(), 2);
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_rows(&[vec![1, 1]]);
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]);
        assert!(solve_integer(&m, &[BigInt::from(2), BigInt::from(2)]).is_none());
        let x = solve_integer(&m, &[BigInt::from(4), BigInt::from(8)]).unwrap();
        assert_eq!(x, vec![BigInt::from(2), BigInt::from(2)]);
    }
}
