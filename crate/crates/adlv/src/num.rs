//! Exact arithmetic helpers.
//!
//! Every quantity in this crate is an arbitrary-precision rational
//! (`Ratio<BigInt>`); there is no floating point anywhere. Lattice
//! membership, chamber comparisons and tie-breaks are all decided exactly.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = Ratio<BigInt>;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn frac_part(x: &Rat) -> Rat {
    x - x.floor()
}

pub fn is_integer(x: &Rat) -> bool {
    x.is_integer()
}

/// Dot product of two rational slices of equal length.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn rats_from_ints(a: &[i64]) -> Vec<Rat> {
    a.iter().map(|&x| rat(x)).collect()
}

/// Parse a rational from "p/q" or "p".
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: Int = n.trim().parse().ok()?;
        let den: Int = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rat::new(num, den))
    } else {
        let num: Int = s.parse().ok()?;
        Some(Rat::from_integer(num))
    }
}

/// Render a rational as "p" or "p/q".
pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact solve of a square rational linear system by Gaussian elimination
/// with exact pivoting. Returns `None` when the matrix is singular.
pub fn solve_square(mat: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = mat.len();
    debug_assert!(mat.iter().all(|r| r.len() == n));
    debug_assert_eq!(rhs.len(), n);
    let mut a: Vec<Vec<Rat>> = mat.to_vec();
    let mut b: Vec<Rat> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        b[col] /= &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Sum of absolute values, used as a cheap deterministic tie-break metric.
pub fn l1_norm(a: &[Rat]) -> Rat {
    a.iter().map(|x| x.abs()).sum()
}

// --- scaled-integer fast path shared by the hull/game/lift hot loops ---

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple of every coordinate denominator, refused when it
/// would grow past 2^40 (the fallback path then handles the query).
pub(crate) fn common_scale_iter<'a>(vecs: impl Iterator<Item = &'a [Rat]>) -> Option<i128> {
    use num_traits::ToPrimitive;
    let mut scale: i128 = 1;
    for v in vecs {
        for c in v {
            let den = c.denom().to_i128()?;
            let g = gcd_i128(scale, den);
            scale = scale.checked_mul(den / g)?;
            if scale > 1 << 40 {
                return None;
            }
        }
    }
    Some(scale)
}

pub(crate) fn to_scaled_slice(x: &[Rat], scale: i128) -> Option<Vec<i128>> {
    use num_traits::ToPrimitive;
    x.iter()
        .map(|c| {
            let den = c.denom().to_i128()?;
            let num = c.numer().to_i128()?;
            num.checked_mul(scale / den)
        })
        .collect()
}

pub(crate) fn from_scaled_slice(x: &[i128], scale: i128) -> Vec<Rat> {
    let den = Int::from(scale);
    x.iter().map(|&v| Rat::new(Int::from(v), den.clone())).collect()
}

/// `out = rows · x`, checked; rows are small integers.
pub(crate) fn rows_mul_scaled(rows: &[Vec<i64>], x: &[i128], out: &mut Vec<i128>) -> Option<()> {
    out.clear();
    for row in rows {
        let mut acc: i128 = 0;
        for (r, v) in row.iter().zip(x.iter()) {
            if *r != 0 {
                acc = acc.checked_add((*r as i128).checked_mul(*v)?)?;
            }
        }
        out.push(acc);
    }
    Some(())
}
