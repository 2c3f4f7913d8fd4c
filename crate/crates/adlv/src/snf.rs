//! Smith normal form over arbitrary-precision integers.
//!
//! We reduce an integer matrix `A` to diagonal form `U·A·V = D` with
//! `d_1 | d_2 | ...` and unimodular transforms. Only the row transform `U`
//! (and its inverse) is tracked: a quotient `Z^n / col-span(A)` is read off
//! from `U` and the diagonal alone, since column operations do not change
//! the column span.

use crate::num::Int;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Unimodular row transform.
    pub u: Vec<Vec<Int>>,
    /// Inverse of `u`, also unimodular.
    pub u_inv: Vec<Vec<Int>>,
    /// Nonnegative diagonal of `U·A·V`, length `min(rows, cols)`, divisibility-sorted.
    pub diag: Vec<Int>,
    pub rows: usize,
    pub cols: usize,
}

fn identity(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::from(1) } else { Int::zero() }).collect())
        .collect()
}

/// Compute the Smith normal form of `a` (rows × cols, rows ≥ 0).
pub fn smith_normal_form(a: &[Vec<Int>]) -> SmithForm {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Int>> = a.to_vec();
    let mut u = identity(rows);
    let mut u_inv = identity(rows);

    // Row op r_i += c * r_j on m and u; u_inv gets the inverse column op.
    macro_rules! row_add {
        ($i:expr, $j:expr, $c:expr) => {{
            let (i, j, c): (usize, usize, Int) = ($i, $j, $c);
            for k in 0..cols {
                let t = &c * &m[j][k];
                m[i][k] += t;
            }
            for k in 0..rows {
                let t = &c * &u[j][k];
                u[i][k] += t;
            }
            for k in 0..rows {
                let t = &c * &u_inv[k][i];
                u_inv[k][j] -= t;
            }
        }};
    }
    macro_rules! row_swap {
        ($i:expr, $j:expr) => {{
            let (i, j): (usize, usize) = ($i, $j);
            if i != j {
                m.swap(i, j);
                u.swap(i, j);
                for k in 0..rows {
                    u_inv[k].swap(i, j);
                }
            }
        }};
    }
    macro_rules! row_neg {
        ($i:expr) => {{
            let i: usize = $i;
            for k in 0..cols {
                m[i][k] = -m[i][k].clone();
            }
            for k in 0..rows {
                u[i][k] = -u[i][k].clone();
            }
            for k in 0..rows {
                u_inv[k][i] = -u_inv[k][i].clone();
            }
        }};
    }
    macro_rules! col_add {
        ($i:expr, $j:expr, $c:expr) => {{
            let (i, j, c): (usize, usize, Int) = ($i, $j, $c);
            for r in 0..rows {
                let t = &c * &m[r][j];
                m[r][i] += t;
            }
        }};
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {{
            let (i, j): (usize, usize) = ($i, $j);
            if i != j {
                for r in 0..rows {
                    m[r].swap(i, j);
                }
            }
        }};
    }

    let bound = rows.min(cols);
    let mut k = 0;
    while k < bound {
        // Find the smallest nonzero pivot in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero()
                    && pivot
                        .map(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        row_swap!(k, pi);
        col_swap!(k, pj);
        if m[k][k].is_negative() {
            row_neg!(k);
        }

        let mut dirty = false;
        for i in (k + 1)..rows {
            if !m[i][k].is_zero() {
                let q = div_round(&m[i][k], &m[k][k]);
                row_add!(i, k, -q);
                if !m[i][k].is_zero() {
                    dirty = true;
                }
            }
        }
        for j in (k + 1)..cols {
            if !m[k][j].is_zero() {
                let q = div_round(&m[k][j], &m[k][k]);
                col_add!(j, k, -q);
                if !m[k][j].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue; // smaller remainders exist; re-pick the pivot
        }

        // Divisibility: fold in any entry the pivot does not divide.
        let mut bad: Option<(usize, usize)> = None;
        'scan: for i in (k + 1)..rows {
            for j in (k + 1)..cols {
                if !(&m[i][j] % &m[k][k]).is_zero() {
                    bad = Some((i, j));
                    break 'scan;
                }
            }
        }
        if let Some((i, _)) = bad {
            row_add!(k, i, Int::from(1));
            continue;
        }
        k += 1;
    }

    let diag: Vec<Int> = (0..bound).map(|i| m[i][i].clone()).collect();
    SmithForm { u, u_inv, diag, rows, cols }
}

/// Round-to-nearest integer division (minimizes the remainder magnitude).
fn div_round(a: &Int, b: &Int) -> Int {
    let q: Int = a / b;
    let candidates = [q.clone() - 1, q.clone(), q + 1];
    candidates
        .into_iter()
        .min_by_key(|c| (a - c * b).abs())
        .unwrap()
}

pub fn mat_vec(m: &[Vec<Int>], v: &[Int]) -> Vec<Int> {
    m.iter()
        .map(|row| row.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    fn im(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    fn check_unimodular(s: &SmithForm) {
        let n = s.rows;
        for i in 0..n {
            for j in 0..n {
                let prod: Int = (0..n).map(|k| &s.u[i][k] * &s.u_inv[k][j]).sum();
                assert_eq!(prod, if i == j { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn snf_a2_cartan() {
        let s = smith_normal_form(&im(&[&[2, -1], &[-1, 2]]));
        assert_eq!(s.diag, vec![int(1), int(3)]);
        check_unimodular(&s);
    }

    #[test]
    fn snf_single_column() {
        let s = smith_normal_form(&im(&[&[2], &[-1]]));
        assert_eq!(s.diag, vec![int(1)]);
        check_unimodular(&s);
    }

    #[test]
    fn snf_known_4x4() {
        // Divisors 1, 3, 21, 0 — classical worked example.
        let s = smith_normal_form(&im(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]));
        assert_eq!(s.diag, vec![int(1), int(3), int(21), int(0)]);
        check_unimodular(&s);
    }

    #[test]
    fn snf_divisibility_chain() {
        let s = smith_normal_form(&im(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diag, vec![int(1), int(6)]);
        check_unimodular(&s);
    }
}
