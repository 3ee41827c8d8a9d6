//! Hermite and Smith normal forms.
//!
//! The Hermite form here is the *column* form: the column span of the input
//! is described by a basis `h_1, …, h_k` with strictly increasing pivot rows
//! `p_1 < … < p_k`, `h_j` vanishing above `p_j`, a positive pivot, and every
//! other basis column reduced into `[0, pivot)` at each pivot row. This basis
//! is unique for a given lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::arith::gcd_transform;
use super::mat::Mat;

/// Output of [`column_hermite`].
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    /// Canonical basis columns of the column span (`rows × rank`).
    pub basis: Mat,
    /// Pivot row of each basis column.
    pub pivots: Vec<usize>,
    /// Unimodular `V` with `m·V = [basis | 0]`, when requested.
    pub transform: Option<Mat>,
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns of the transform spanning the integer kernel of the input.
    pub fn kernel_columns(&self) -> Option<Mat> {
        let v = self.transform.as_ref()?;
        Some(v.select_columns(self.rank()..v.cols()))
    }
}

/// Column Hermite normal form of `m`, optionally tracking the transform.
pub fn column_hermite(m: &Mat, track: bool) -> ColumnEchelon {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut v = track.then(|| Mat::identity(cols));
    let mut pivots = Vec::new();
    let mut next = 0;

    for i in 0..rows {
        if next == cols {
            break;
        }
        for j in next + 1..cols {
            if a[(i, j)].is_zero() {
                continue;
            }
            let t = gcd_transform(&a[(i, next)], &a[(i, j)]);
            a.combine_cols(next, j, &t);
            if let Some(v) = v.as_mut() {
                v.combine_cols(next, j, &t);
            }
        }
        if a[(i, next)].is_zero() {
            continue;
        }
        if a[(i, next)].is_negative() {
            a.negate_col(next);
            if let Some(v) = v.as_mut() {
                v.negate_col(next);
            }
        }
        let pivot = a[(i, next)].clone();
        for k in 0..next {
            let c = -a[(i, k)].div_floor(&pivot);
            a.add_col_multiple(k, next, &c);
            if let Some(v) = v.as_mut() {
                v.add_col_multiple(k, next, &c);
            }
        }
        pivots.push(i);
        next += 1;
    }

    ColumnEchelon { basis: a.select_columns(0..next), pivots, transform: v }
}

/// Smith decomposition `U·m·V = diag(d)` with `d_1 | d_2 | …`, all positive.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub u: Mat,
    pub v: Mat,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

pub fn smith(m: &Mat) -> Smith {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = Mat::identity(rows);
    let mut v = Mat::identity(cols);
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let tr = gcd_transform(&a[(t, t)], &a[(i, t)]);
                a.combine_rows(t, i, &tr);
                u.combine_rows(t, i, &tr);
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let tr = gcd_transform(&a[(t, t)], &a[(t, j)]);
                a.combine_cols(t, j, &tr);
                v.combine_cols(t, j, &tr);
            }
            if (t + 1..rows).any(|i| !a[(i, t)].is_zero()) {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let p = a[(t, t)].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        diagonal.push(a[(t, t)].clone());
    }

    debug_assert_eq!(
        &(&u * m) * &v,
        Mat::diagonal(rows, cols, &diagonal),
        "Smith decomposition does not reproduce the diagonal"
    );
    Smith { diagonal, u, v }
}

/// Column Hermite form of `m` together with its Smith decomposition.
pub fn hnf_snf(m: &Mat) -> (Mat, Smith) {
    (column_hermite(m, false).basis, smith(m))
}

/// Solves `a·x = b` over the integers. Returns any solution, or `None`.
pub fn solve(a: &Mat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let s = smith(a);
    solve_with(&s, a.cols(), b)
}

fn solve_with(s: &Smith, cols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let ub = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); cols];
    for (i, c) in ub.iter().enumerate() {
        match s.diagonal.get(i) {
            Some(d) => {
                let (q, r) = c.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            None if !c.is_zero() => return None,
            None => {}
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Solves `a·X = b` column by column.
pub fn solve_matrix(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.rows(), b.rows(), "right-hand side shape mismatch");
    let s = smith(a);
    let cols = b
        .columns()
        .iter()
        .map(|c| solve_with(&s, a.cols(), c))
        .collect::<Option<Vec<_>>>()?;
    Some(Mat::from_columns(a.cols(), &cols))
}

/// Inverse of a unimodular matrix, `None` if `|det| ≠ 1`.
pub fn inverse_unimodular(a: &Mat) -> Option<Mat> {
    if !a.is_square() || !a.det().abs().is_one() {
        return None;
    }
    solve_matrix(a, &Mat::identity(a.rows()))
}
