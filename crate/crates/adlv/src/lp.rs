//! Exact rational linear programming, small scale.
//!
//! Two consumers: convex-combination membership (is a target point a convex
//! combination of finitely many points?) decided by a phase-1 simplex with
//! Bland's rule, and vertex enumeration of centrally symmetric box polytopes
//! `{x : |f_k(x)| ≤ 1}` by active-set enumeration. Everything is exact; no
//! floating point.

use crate::num::{rat_zero, Rat};
use num_traits::{Signed, Zero};

/// Decide whether `target` is a convex combination of `points`.
/// All points live in the same small-dimensional rational space.
pub fn convex_combination_feasible(points: &[Vec<Rat>], target: &[Rat]) -> bool {
    let m = points.len();
    if m == 0 {
        return false;
    }
    let d = target.len();
    debug_assert!(points.iter().all(|p| p.len() == d));
    // Quick reject: outside the bounding box.
    for k in 0..d {
        let mut lo = points[0][k].clone();
        let mut hi = points[0][k].clone();
        for p in points.iter().skip(1) {
            if p[k] < lo {
                lo = p[k].clone();
            }
            if p[k] > hi {
                hi = p[k].clone();
            }
        }
        if target[k] < lo || target[k] > hi {
            return false;
        }
    }

    // Phase-1 simplex on  Σ λ_i p_i = t,  Σ λ_i = 1,  λ ≥ 0.
    let nr = d + 1;
    let ncols = m + nr; // original + artificial
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(nr);
    let mut rhs: Vec<Rat> = Vec::with_capacity(nr);
    for r in 0..nr {
        let mut row: Vec<Rat> = Vec::with_capacity(ncols);
        for i in 0..m {
            row.push(if r < d { points[i][r].clone() } else { Rat::from_integer(1.into()) });
        }
        for a in 0..nr {
            row.push(if a == r { Rat::from_integer(1.into()) } else { rat_zero() });
        }
        let b = if r < d { target[r].clone() } else { Rat::from_integer(1.into()) };
        tab.push(row);
        rhs.push(b);
    }
    for r in 0..nr {
        if rhs[r].is_negative() {
            for x in tab[r].iter_mut() {
                *x = -x.clone();
            }
            rhs[r] = -rhs[r].clone();
            // keep the artificial column for this row a +1 unit column
            tab[r][m + r] = Rat::from_integer(1.into());
        }
    }
    let mut basis: Vec<usize> = (0..nr).map(|r| m + r).collect();

    loop {
        // Reduced cost of column j for the phase-1 objective (artificials
        // cost 1): c_j - Σ_{r : basis[r] artificial} tab[r][j].
        let mut entering: Option<usize> = None;
        for j in 0..ncols {
            if basis.contains(&j) {
                continue;
            }
            let cost = if j < m { rat_zero() } else { Rat::from_integer(1.into()) };
            let mut reduced = cost;
            for r in 0..nr {
                if basis[r] >= m {
                    reduced -= &tab[r][j];
                }
            }
            if reduced.is_negative() {
                entering = Some(j);
                break; // Bland: lowest index
            }
        }
        let Some(j) = entering else {
            // Optimal. Feasible iff all artificial basic variables are zero.
            let infeas: Rat = (0..nr)
                .filter(|&r| basis[r] >= m)
                .map(|r| rhs[r].clone())
                .sum();
            return infeas.is_zero();
        };
        // Ratio test, Bland tie-break on basis index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for r in 0..nr {
            if tab[r][j].is_positive() {
                let ratio = &rhs[r] / &tab[r][j];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(r) = leave else {
            // Unbounded phase-1 cannot happen; treat as infeasible.
            return false;
        };
        // Pivot on (r, j).
        let piv = tab[r][j].clone();
        for x in tab[r].iter_mut() {
            *x /= &piv;
        }
        rhs[r] /= &piv;
        for rr in 0..nr {
            if rr != r && !tab[rr][j].is_zero() {
                let f = tab[rr][j].clone();
                for c in 0..ncols {
                    let t = &f * &tab[r][c];
                    tab[rr][c] -= t;
                }
                let t = &f * &rhs[r];
                rhs[rr] -= t;
            }
        }
        basis[r] = j;
    }
}

/// Enumerate the vertices of `{x ∈ ℝ^d : -1 ≤ f_k(x) ≤ 1 for all k}` where
/// the functionals are given as rational row vectors. The polytope must be
/// bounded (the functionals span the dual space). Vertices are returned
/// deduplicated, in sorted order.
pub fn box_polytope_vertices(functionals: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let d = if functionals.is_empty() { 0 } else { functionals[0].len() };
    if d == 0 {
        return Vec::new();
    }
    if let Some(v) = box_polytope_vertices_int(functionals, d) {
        return v;
    }
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    let n = functionals.len();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        // Try every sign pattern on the chosen active set.
        for signs in 0..(1u32 << d) {
            let mat: Vec<Vec<Rat>> = idx.iter().map(|&k| functionals[k].clone()).collect();
            let rhs: Vec<Rat> = (0..d)
                .map(|b| {
                    if signs >> b & 1 == 1 {
                        Rat::from_integer(1.into())
                    } else {
                        Rat::from_integer((-1).into())
                    }
                })
                .collect();
            if let Some(x) = crate::num::solve_square(&mat, &rhs) {
                let inside = functionals.iter().all(|f| {
                    let v = crate::num::dot(f, &x);
                    v <= Rat::from_integer(1.into()) && v >= Rat::from_integer((-1).into())
                });
                if inside && !vertices.contains(&x) {
                    vertices.push(x);
                }
            }
        }
        // next d-combination of 0..n
        let mut i = d;
        loop {
            if i == 0 {
                vertices.sort();
                return vertices;
            }
            i -= 1;
            if idx[i] != i + n - d {
                idx[i] += 1;
                for j in (i + 1)..d {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Integer-functional fast path: Cramer solves over i128, no allocation of
/// big integers. `None` when a functional is not integral or is too large.
fn box_polytope_vertices_int(functionals: &[Vec<Rat>], d: usize) -> Option<Vec<Vec<Rat>>> {
    use num_traits::ToPrimitive;
    let rows: Vec<Vec<i128>> = functionals
        .iter()
        .map(|f| {
            f.iter()
                .map(|x| if x.is_integer() { x.to_integer().to_i128() } else { None })
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<_>>()?;
    if rows.iter().flatten().any(|&v| v.abs() > 1 << 20) {
        return None;
    }
    let n = rows.len();
    fn det(m: &[Vec<i128>]) -> Option<i128> {
        // fraction-free Gaussian elimination (Bareiss) on a small copy
        let d = m.len();
        let mut a: Vec<Vec<i128>> = m.to_vec();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..d {
            if a[k][k] == 0 {
                let swap = (k + 1..d).find(|&r| a[r][k] != 0)?;
                a.swap(k, swap);
                sign = -sign;
            }
            for i in (k + 1)..d {
                for j in (k + 1)..d {
                    let num = a[k][k].checked_mul(a[i][j])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                    a[i][j] = num / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        Some(sign * a[d - 1][d - 1])
    }
    let mut raw: std::collections::BTreeSet<Vec<(i128, i128)>> = std::collections::BTreeSet::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let mat: Vec<Vec<i128>> = idx.iter().map(|&k| rows[k].clone()).collect();
        match det(&mat) {
            None => return None,
            Some(0) => {}
            Some(det_a) => {
                for signs in 0..(1u32 << d) {
                    let rhs: Vec<i128> =
                        (0..d).map(|b| if signs >> b & 1 == 1 { 1 } else { -1 }).collect();
                    // Cramer: x_j = det(A with column j replaced by rhs) / det(A)
                    let mut num = vec![0i128; d];
                    let mut overflow = false;
                    for j in 0..d {
                        let mut m = mat.clone();
                        for r in 0..d {
                            m[r][j] = rhs[r];
                        }
                        match det(&m) {
                            Some(v) => num[j] = v,
                            None => {
                                overflow = true;
                                break;
                            }
                        }
                    }
                    if overflow {
                        return None;
                    }
                    // inside: |f·x| ≤ 1 ⟺ |Σ f_j num_j| ≤ |det|
                    let inside = rows.iter().all(|f| {
                        let mut acc: i128 = 0;
                        for (fj, nj) in f.iter().zip(num.iter()) {
                            match fj.checked_mul(*nj).and_then(|t| acc.checked_add(t)) {
                                Some(v) => acc = v,
                                None => return false,
                            }
                        }
                        acc.abs() <= det_a.abs()
                    });
                    if inside {
                        let key: Vec<(i128, i128)> = num
                            .iter()
                            .map(|&n| {
                                let g = gcd_i128(n, det_a);
                                let (mut a, mut b) = (n / g, det_a / g);
                                if b < 0 {
                                    a = -a;
                                    b = -b;
                                }
                                (a, b)
                            })
                            .collect();
                        raw.insert(key);
                    }
                }
            }
        }
        let mut i = d;
        loop {
            if i == 0 {
                let mut out: Vec<Vec<Rat>> = raw
                    .into_iter()
                    .map(|key| {
                        key.into_iter()
                            .map(|(a, b)| Rat::new(a.into(), b.into()))
                            .collect()
                    })
                    .collect();
                out.sort();
                return Some(out);
            }
            i -= 1;
            if idx[i] != i + n - d {
                idx[i] += 1;
                for j in (i + 1)..d {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    if a == 0 {
        return b.max(1);
    }
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}
