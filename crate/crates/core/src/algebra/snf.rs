use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Diagonal of the Smith normal form.
///
/// `invariant_factors` has `min(rows, cols)` entries: the nonzero factors
/// `d_1 | d_2 | ... | d_r` (all positive) followed by zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    /// `U` with `U * M * V = D`, when requested.
    pub left: Option<IntMatrix>,
    pub right: Option<IntMatrix>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn nonzero_factors(&self) -> impl Iterator<Item = &BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_zero())
    }

    pub fn product_of_nonzero(&self) -> BigInt {
        self.nonzero_factors().product()
    }

    /// The factors greater than one, i.e. the torsion part of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.nonzero_factors().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    SnfCalc::new(m, false).run()
}

pub fn smith_normal_form_with_transforms(m: &IntMatrix) -> SnfResult {
    SnfCalc::new(m, true).run()
}

struct SnfCalc {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

impl SnfCalc {
    fn new(m: &IntMatrix, transforms: bool) -> Self {
        SnfCalc {
            a: m.to_rows(),
            rows: m.rows(),
            cols: m.cols(),
            u: transforms.then(|| IntMatrix::identity(m.rows()).to_rows()),
            v: transforms.then(|| IntMatrix::identity(m.cols()).to_rows()),
        }
    }

    fn run(mut self) -> SnfResult {
        let n = self.rows.min(self.cols);
        for t in 0..n {
            if !self.eliminate_at(t) {
                break;
            }
        }
        let invariant_factors = (0..n).map(|t| self.a[t][t].clone()).collect();
        SnfResult {
            invariant_factors,
            left: self.u.map(|u| IntMatrix::from_rows(u).expect("rectangular")),
            right: self.v.map(|v| IntMatrix::from_rows(v).expect("rectangular")),
        }
    }

    /// Nonzero entry of least absolute value in the trailing submatrix.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.magnitude() < self.a[bi][bj].magnitude()) {
                    best = Some((i, j));
                    if x.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Clears row and column `t` around a pivot that divides the rest of the
    /// trailing submatrix. Returns false once the submatrix is all zero.
    fn eliminate_at(&mut self, t: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.min_pivot(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..self.rows {
                if self.a[i][t].is_zero() {
                    continue;
                }
                let q = &self.a[i][t] / &self.a[t][t];
                self.add_row_multiple(i, t, &-q);
                clean &= self.a[i][t].is_zero();
            }
            for j in t + 1..self.cols {
                if self.a[t][j].is_zero() {
                    continue;
                }
                let q = &self.a[t][j] / &self.a[t][t];
                self.add_col_multiple(j, t, &-q);
                clean &= self.a[t][j].is_zero();
            }
            if !clean {
                continue;
            }

            if let Some(i) = self.row_with_non_multiple(t) {
                self.add_row_multiple(t, i, &BigInt::one());
                continue;
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            return true;
        }
    }

    fn row_with_non_multiple(&self, t: usize) -> Option<usize> {
        let p = &self.a[t][t];
        (t + 1..self.rows).find(|&i| {
            self.a[i][t + 1..]
                .iter()
                .any(|x| !x.is_zero() && !x.is_multiple_of(p))
        })
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v {
                row.swap(i, j);
            }
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
            let (s, d) = if src < dst {
                let (lo, hi) = m.split_at_mut(dst);
                (&lo[src], &mut hi[0])
            } else {
                let (lo, hi) = m.split_at_mut(src);
                (&hi[0], &mut lo[dst])
            };
            for (x, y) in d.iter_mut().zip(s) {
                if !y.is_zero() {
                    *x += q * y;
                }
            }
        }
        apply(&mut self.a, dst, src, q);
        if let Some(u) = &mut self.u {
            apply(u, dst, src, q);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
            for row in m {
                if !row[src].is_zero() {
                    let delta = q * &row[src];
                    row[dst] += delta;
                }
            }
        }
        apply(&mut self.a, dst, src, q);
        if let Some(v) = &mut self.v {
            apply(v, dst, src, q);
        }
    }

    fn negate_row(&mut self, t: usize) {
        for x in &mut self.a[t] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[t] {
                *x = -&*x;
            }
        }
    }
}
