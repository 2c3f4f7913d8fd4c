//! Irreducible root systems with exact integer Cartan data.
//!
//! Coordinates follow a single convention throughout the crate: a weight is
//! stored by its coefficients in the simple-root basis, so `λ = Σ coords[i]·α_i`,
//! and a coweight by its coefficients in the simple-coroot basis. The pairing
//! of a weight with a coweight is then `cov^T · C · x` where `C` is the Cartan
//! matrix with `C[i][j] = ⟨α_j, α_i∨⟩`.
//!
//! This makes root-lattice membership a pure integrality check on `coords`,
//! weight-lattice membership an integrality check on `C·coords`, and the
//! fundamental coweight pairing `⟨x, ω_i⟩` literally `coords[i]`.

use crate::error::{Error, Result};
use crate::num::{dot, rat, rat_zero, Rat};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// Non-reduced BC series: the reduced simple system of B_n with the
    /// doubled short roots appended to the positive roots.
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        write!(f, "{s}")
    }
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(Family::A),
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "D" => Some(Family::D),
            "E" => Some(Family::E),
            "F" => Some(Family::F),
            "G" => Some(Family::G),
            "BC" => Some(Family::BC),
            _ => None,
        }
    }
}

/// A vector in `P(R) ⊗ ℝ` stored by exact rational simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec {
    pub coords: Vec<Rat>,
}

impl WeightVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        WeightVec { coords }
    }

    pub fn zero(rank: usize) -> Self {
        WeightVec { coords: vec![rat_zero(); rank] }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVec { coords: coords.iter().map(|&c| rat(c)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec::new(crate::num::vec_add(&self.coords, &other.coords))
    }

    pub fn sub(&self, other: &WeightVec) -> WeightVec {
        WeightVec::new(crate::num::vec_sub(&self.coords, &other.coords))
    }

    pub fn neg(&self) -> WeightVec {
        WeightVec::new(crate::num::vec_neg(&self.coords))
    }

    pub fn scale(&self, c: &Rat) -> WeightVec {
        WeightVec::new(crate::num::vec_scale(c, &self.coords))
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(crate::num::fmt_rat).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A positive root together with its coroot.
///
/// Root coordinates are in the simple-root basis, coroot coordinates in the
/// simple-coroot basis. For reduced systems both are integral; the doubled
/// roots of BC_n have half-integral coroot coordinates.
#[derive(Debug, Clone)]
pub struct RootPair {
    pub root: WeightVec,
    pub coroot: Vec<Rat>,
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rat>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<RootPair>,
    /// Coroot-basis coordinates of the fundamental coweights ω_i.
    fundamental_coweights: Vec<Vec<Rat>>,
    /// For each positive root β, the integer row `r` with `⟨x, β∨⟩ = Σ r_j x_j`
    /// (absent when a coroot has fractional coordinates, as for BC doubles).
    coroot_rows: Option<Vec<Vec<i64>>>,
    /// Sum of the positive roots.
    two_rho: WeightVec,
}

fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    let n = rank;
    let valid = match family {
        Family::A => n >= 1,
        Family::B => n >= 2,
        Family::C => n >= 3,
        Family::D => n >= 4,
        Family::E => (6..=8).contains(&n),
        Family::F => n == 4,
        Family::G => n == 2,
        Family::BC => n >= 1,
    };
    if !valid {
        return Err(Error::InvalidType(format!(
            "{family}{n} is not a valid irreducible type (A n>=1, B n>=2, C n>=3, D n>=4, E6-8, F4, G2, BC n>=1)"
        )));
    }
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |i: usize, j: usize, cij: i64, cji: i64, c: &mut Vec<Vec<i64>>| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1, &mut c);
            }
        }
        Family::B | Family::BC => {
            // BC_n stores the reduced simple system of B_n; BC_1 degenerates to A_1.
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1, &mut c);
            }
            if n >= 2 {
                // c[i][j] = <alpha_j, alpha_i^vee>; alpha_n is short
                c[n - 2][n - 1] = -1;
                c[n - 1][n - 2] = -2;
            }
        }
        Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1, &mut c);
            }
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        Family::D => {
            for i in 0..n - 3 {
                link(i, i + 1, -1, -1, &mut c);
            }
            link(n - 3, n - 2, -1, -1, &mut c);
            link(n - 3, n - 1, -1, -1, &mut c);
        }
        Family::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
            let chain: Vec<usize> = match n {
                6 => vec![0, 2, 3, 4, 5],
                7 => vec![0, 2, 3, 4, 5, 6],
                _ => vec![0, 2, 3, 4, 5, 6, 7],
            };
            for w in chain.windows(2) {
                link(w[0], w[1], -1, -1, &mut c);
            }
            link(1, 3, -1, -1, &mut c);
        }
        Family::F => {
            link(0, 1, -1, -1, &mut c);
            link(2, 3, -1, -1, &mut c);
            c[1][2] = -1;
            c[2][1] = -2;
        }
        Family::G => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    Ok(c)
}

fn symmetrizer_for(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    // Find positive integers d_i with d_i c[i][j] = d_j c[j][i], by rational
    // propagation along edges (the diagram is connected), then clear
    // denominators.
    let n = cartan.len();
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n]; // num/den pairs
    d[0] = Some((1, 1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let (ni, di) = d[i].unwrap();
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // d_j = d_i * c[i][j] / c[j][i]
                let num = ni * cartan[i][j];
                let den = di * cartan[j][i];
                let g = gcd_i64(num, den);
                let (mut num, mut den) = (num / g, den / g);
                if den < 0 {
                    num = -num;
                    den = -den;
                }
                d[j] = Some((num, den));
                stack.push(j);
            }
        }
    }
    let pairs: Vec<(i64, i64)> = d
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::InvalidType("disconnected Cartan matrix".into())))
        .collect::<Result<_>>()?;
    let lcm_den = pairs.iter().fold(1i64, |acc, &(_, den)| acc / gcd_i64(acc, den) * den);
    let mut out: Vec<i64> = pairs.iter().map(|&(num, den)| num * (lcm_den / den)).collect();
    let g = out.iter().fold(0i64, |acc, &x| gcd_i64(acc, x.abs()));
    for x in out.iter_mut() {
        *x /= g;
    }
    if out.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidType(
            "Cartan matrix is not symmetrizable by positive weights".into(),
        ));
    }
    Ok(out)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// Closed-form positive root counts for each irreducible type.
pub fn positive_root_count(family: Family, rank: usize) -> usize {
    let n = rank;
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
        Family::BC => n * n + n,
    }
}

fn invert_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = cartan.len();
    let mut inv = Vec::with_capacity(n);
    // Solve C x = e_k for each k; store as rows of C^{-1}.
    let m: Vec<Vec<Rat>> = cartan.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    for k in 0..n {
        let mut e = vec![rat_zero(); n];
        e[k] = rat(1);
        let col = crate::num::solve_square(&m, &e).expect("Cartan matrix of finite type is invertible");
        inv.push(col);
    }
    // inv[k] currently holds column k of C^{-1}; transpose into rows.
    let mut rows = vec![vec![rat_zero(); n]; n];
    for (k, col) in inv.iter().enumerate() {
        for i in 0..n {
            rows[i][k] = col[i].clone();
        }
    }
    rows
}

impl RootDatum {
    /// Construct the root datum of an irreducible type.
    pub fn build(family: Family, rank: usize) -> Result<RootDatum> {
        let cartan = cartan_matrix(family, rank)?;
        let symmetrizer = symmetrizer_for(&cartan)?;
        let cartan_inv = invert_cartan(&cartan);
        let mut datum = RootDatum {
            family,
            rank,
            cartan,
            cartan_inv,
            symmetrizer,
            positive_roots: Vec::new(),
            fundamental_coweights: Vec::new(),
            coroot_rows: None,
            two_rho: WeightVec::zero(rank),
        };
        datum.fundamental_coweights = (0..rank)
            .map(|i| {
                // omega_i in the simple-coroot basis solves C^T w = e_i,
                // i.e. w = row i of C^{-1}.
                datum.cartan_inv[i].clone()
            })
            .collect();
        datum.positive_roots = datum.generate_positive_roots()?;
        let expect = positive_root_count(family, rank);
        if datum.positive_roots.len() != expect {
            return Err(Error::ConsistencyFailure(format!(
                "{family}{rank}: generated {} positive roots, expected {expect}",
                datum.positive_roots.len()
            )));
        }
        datum.coroot_rows = datum.compute_coroot_rows();
        let mut two_rho = WeightVec::zero(rank);
        for rp in &datum.positive_roots {
            two_rho = two_rho.add(&rp.root);
        }
        datum.two_rho = two_rho;
        Ok(datum)
    }

    fn compute_coroot_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        let mut rows = Vec::with_capacity(self.positive_roots.len());
        for rp in &self.positive_roots {
            let mut row = Vec::with_capacity(self.rank);
            for j in 0..self.rank {
                let entry: Rat = (0..self.rank)
                    .map(|k| &rp.coroot[k] * rat(self.cartan[k][j]))
                    .sum();
                if !entry.is_integer() {
                    return None;
                }
                row.push(entry.to_integer().to_i64()?);
            }
            rows.push(row);
        }
        Some(rows)
    }

    /// Integer pairing rows against all positive coroots, when they exist.
    pub fn coroot_rows(&self) -> Option<&[Vec<i64>]> {
        self.coroot_rows.as_deref()
    }

    fn generate_positive_roots(&self) -> Result<Vec<RootPair>> {
        // Orbit closure of the simple (root, coroot) pairs under all simple
        // reflections; positives are the ones with nonnegative coordinates.
        let n = self.rank;
        let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
        let mut queue: Vec<(Vec<Rat>, Vec<Rat>)> = Vec::new();
        for i in 0..n {
            let mut root = vec![rat_zero(); n];
            root[i] = rat(1);
            let mut coroot = vec![rat_zero(); n];
            coroot[i] = rat(1);
            seen.insert(root.clone());
            queue.push((root, coroot));
        }
        let mut all: Vec<(Vec<Rat>, Vec<Rat>)> = queue.clone();
        while let Some((root, coroot)) = queue.pop() {
            for i in 0..n {
                // s_i on the root side
                let p: Rat = (0..n).map(|j| rat(self.cartan[i][j]) * &root[j]).sum();
                let mut r2 = root.clone();
                r2[i] -= &p;
                if seen.contains(&r2) {
                    continue;
                }
                // s_i on the coroot side: beta' -> beta' - <alpha_i, beta'> alpha_i'
                let q: Rat = (0..n).map(|k| &coroot[k] * rat(self.cartan[k][i])).sum();
                let mut c2 = coroot.clone();
                c2[i] -= &q;
                seen.insert(r2.clone());
                all.push((r2.clone(), c2.clone()));
                queue.push((r2, c2));
            }
        }
        let mut positives: Vec<RootPair> = all
            .into_iter()
            .filter(|(r, _)| r.iter().all(|x| !x.is_negative()))
            .map(|(r, c)| RootPair { root: WeightVec::new(r), coroot: c })
            .collect();
        if self.family == Family::BC {
            // Append doubled short roots 2β with coroots β∨/2.
            let half = crate::num::ratio(1, 2);
            let doubles: Vec<RootPair> = positives
                .iter()
                .filter(|rp| self.root_length_halved(&rp.root) == rat(1))
                .map(|rp| RootPair {
                    root: rp.root.scale(&rat(2)),
                    coroot: crate::num::vec_scale(&half, &rp.coroot),
                })
                .collect();
            positives.extend(doubles);
        }
        // Sort by height then coordinates for determinism.
        positives.sort_by(|a, b| {
            let ha: Rat = a.root.coords.iter().sum();
            let hb: Rat = b.root.coords.iter().sum();
            ha.cmp(&hb).then_with(|| a.root.cmp(&b.root))
        });
        Ok(positives)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[RootPair] {
        &self.positive_roots
    }

    pub fn fundamental_coweights(&self) -> &[Vec<Rat>] {
        &self.fundamental_coweights
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    fn check_rank(&self, x: &WeightVec) -> Result<()> {
        if x.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: x.rank() });
        }
        Ok(())
    }

    /// Pairings of `x` with all simple coroots, i.e. `C · x`.
    pub fn simple_pairings(&self, x: &WeightVec) -> Vec<Rat> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| rat(self.cartan[i][j]) * &x.coords[j]).sum())
            .collect()
    }

    pub fn pair_simple(&self, x: &WeightVec, i: usize) -> Rat {
        (0..self.rank).map(|j| rat(self.cartan[i][j]) * &x.coords[j]).sum()
    }

    /// Canonical pairing `⟨x, cov⟩` of a weight with a coweight given by
    /// simple-coroot coordinates.
    pub fn pairing(&self, x: &WeightVec, coweight: &[Rat]) -> Result<Rat> {
        self.check_rank(x)?;
        if coweight.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: coweight.len() });
        }
        let a = self.simple_pairings(x);
        Ok(dot(coweight, &a))
    }

    /// The symmetric bilinear form `(x, y) = Σ d_i C[i][j] x_i y_j`.
    pub fn form(&self, x: &WeightVec, y: &WeightVec) -> Rat {
        let mut acc = rat_zero();
        for i in 0..self.rank {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if self.cartan[i][j] != 0 && !y.coords[j].is_zero() {
                    acc += rat(self.symmetrizer[i] * self.cartan[i][j]) * &x.coords[i] * &y.coords[j];
                }
            }
        }
        acc
    }

    /// Half the squared length of a root, in units where short roots of a
    /// simply-laced system have length² 2.
    fn root_length_halved(&self, root: &WeightVec) -> Rat {
        self.form(root, root) / rat(2)
    }

    /// Simple reflection `s_i(x) = x − ⟨x, α_i∨⟩ α_i`.
    pub fn reflect(&self, i: usize, x: &WeightVec) -> Result<WeightVec> {
        self.check_rank(x)?;
        if i >= self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        let p = self.pair_simple(x, i);
        let mut coords = x.coords.clone();
        coords[i] -= p;
        Ok(WeightVec::new(coords))
    }

    /// Reflection in an arbitrary root given with its coroot.
    pub fn reflect_root(&self, rp: &RootPair, x: &WeightVec) -> WeightVec {
        let p = self.pairing(x, &rp.coroot).expect("rank checked");
        x.sub(&rp.root.scale(&p))
    }

    /// Apply a word of simple reflections left-to-right.
    pub fn apply_word(&self, word: &[usize], x: &WeightVec) -> Result<WeightVec> {
        for &i in word {
            if i >= self.rank {
                return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
            }
        }
        if let Some(out) = self.apply_word_scaled(word, x) {
            return Ok(out);
        }
        let mut cur = x.clone();
        for &i in word {
            cur = self.reflect(i, &cur)?;
        }
        Ok(cur)
    }

    fn apply_word_scaled(&self, word: &[usize], x: &WeightVec) -> Option<WeightVec> {
        let scale = crate::num::common_scale_iter(std::iter::once(x.coords.as_slice()))?;
        let mut cur = crate::num::to_scaled_slice(&x.coords, scale)?;
        for &i in word {
            let mut p: i128 = 0;
            for j in 0..self.rank {
                if self.cartan[i][j] != 0 {
                    p = p.checked_add((self.cartan[i][j] as i128).checked_mul(cur[j])?)?;
                }
            }
            cur[i] = cur[i].checked_sub(p)?;
        }
        Some(WeightVec::new(crate::num::from_scaled_slice(&cur, scale)))
    }

    pub fn is_dominant(&self, x: &WeightVec) -> bool {
        self.simple_pairings(x).iter().all(|p| !p.is_negative())
    }

    /// The unique dominant element of `W·x`, with the word of simple
    /// reflections (applied left-to-right to `x`) that reaches it. The
    /// lowest-index negative node is fired first, for determinism.
    pub fn dominant_rep(&self, x: &WeightVec) -> (WeightVec, Vec<usize>) {
        if let Some(out) = self.dominant_rep_scaled(x) {
            return out;
        }
        let mut cur = x.clone();
        let mut word = Vec::new();
        loop {
            let pairings = self.simple_pairings(&cur);
            match pairings.iter().position(|p| p.is_negative()) {
                None => return (cur, word),
                Some(i) => {
                    let mut coords = cur.coords;
                    coords[i] -= pairings[i].clone();
                    cur = WeightVec::new(coords);
                    word.push(i);
                }
            }
        }
    }

    fn dominant_rep_scaled(&self, x: &WeightVec) -> Option<(WeightVec, Vec<usize>)> {
        let scale = crate::num::common_scale_iter(std::iter::once(x.coords.as_slice()))?;
        let mut cur = crate::num::to_scaled_slice(&x.coords, scale)?;
        let mut word = Vec::new();
        let mut guard = 0u64;
        'outer: loop {
            guard += 1;
            if guard > 10_000_000 {
                return None;
            }
            for i in 0..self.rank {
                let mut p: i128 = 0;
                for j in 0..self.rank {
                    if self.cartan[i][j] != 0 {
                        p = p.checked_add((self.cartan[i][j] as i128).checked_mul(cur[j])?)?;
                    }
                }
                if p < 0 {
                    cur[i] = cur[i].checked_sub(p)?;
                    word.push(i);
                    continue 'outer;
                }
            }
            return Some((WeightVec::new(crate::num::from_scaled_slice(&cur, scale)), word));
        }
    }

    pub fn in_root_lattice(&self, x: &WeightVec) -> bool {
        x.coords.iter().all(crate::num::is_integer)
    }

    pub fn in_weight_lattice(&self, x: &WeightVec) -> bool {
        self.simple_pairings(x).iter().all(crate::num::is_integer)
    }

    /// Fundamental weight ϖ_i in simple-root coordinates (column i of C^{-1}).
    pub fn fundamental_weight(&self, i: usize) -> WeightVec {
        let coords = (0..self.rank).map(|j| self.cartan_inv[j][i].clone()).collect();
        WeightVec::new(coords)
    }

    /// The weight with prescribed simple-coroot pairings `a`, i.e. `C^{-1}·a`.
    pub fn weight_from_pairings(&self, a: &[Rat]) -> WeightVec {
        let coords = (0..self.rank)
            .map(|j| (0..self.rank).map(|k| &self.cartan_inv[j][k] * &a[k]).sum())
            .collect();
        WeightVec::new(coords)
    }

    pub fn weight_from_fundamental(&self, coeffs: &[i64]) -> WeightVec {
        let a: Vec<Rat> = coeffs.iter().map(|&c| rat(c)).collect();
        self.weight_from_pairings(&a)
    }

    /// Sum of the positive roots.
    pub fn two_rho(&self) -> &WeightVec {
        &self.two_rho
    }

    /// Sum of the fundamental weights.
    pub fn rho(&self) -> WeightVec {
        let a = vec![rat(1); self.rank];
        self.weight_from_pairings(&a)
    }

    pub fn type_name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

/// Identify the type of an indecomposable Cartan matrix up to simultaneous
/// permutation of rows and columns. Returns the type together with the
/// permutation `p` such that `m[i][j] = C_built[p[i]][p[j]]`.
pub fn classify_cartan(m: &[Vec<i64>]) -> Option<(Family, usize, Vec<usize>)> {
    let n = m.len();
    let candidates: Vec<Family> = match n {
        1 => vec![Family::A],
        2 => vec![Family::A, Family::B, Family::G],
        3 => vec![Family::A, Family::B, Family::C],
        4 => vec![Family::A, Family::B, Family::C, Family::D, Family::F],
        6 | 7 | 8 => vec![Family::A, Family::B, Family::C, Family::D, Family::E],
        _ => vec![Family::A, Family::B, Family::C, Family::D],
    };
    for family in candidates {
        let Ok(c) = cartan_matrix(family, n) else { continue };
        if let Some(p) = find_permutation(m, &c) {
            return Some((family, n, p));
        }
    }
    None
}

fn find_permutation(m: &[Vec<i64>], target: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = m.len();
    // Backtracking with row-signature pruning.
    let sig = |mat: &[Vec<i64>], i: usize| -> Vec<i64> {
        let mut row: Vec<i64> = mat[i].clone();
        row.sort_unstable();
        let mut col: Vec<i64> = (0..n).map(|j| mat[j][i]).collect();
        col.sort_unstable();
        row.extend(col);
        row
    };
    let m_sigs: Vec<Vec<i64>> = (0..n).map(|i| sig(m, i)).collect();
    let t_sigs: Vec<Vec<i64>> = (0..n).map(|i| sig(target, i)).collect();
    let mut perm: Vec<usize> = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn bt(
        i: usize,
        n: usize,
        m: &[Vec<i64>],
        target: &[Vec<i64>],
        m_sigs: &[Vec<i64>],
        t_sigs: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || m_sigs[i] != t_sigs[cand] {
                continue;
            }
            let ok = (0..i).all(|j| {
                m[i][j] == target[cand][perm[j]] && m[j][i] == target[perm[j]][cand]
            });
            if ok {
                perm[i] = cand;
                used[cand] = true;
                if bt(i + 1, n, m, target, m_sigs, t_sigs, perm, used) {
                    return true;
                }
                used[cand] = false;
                perm[i] = usize::MAX;
            }
        }
        false
    }
    if bt(0, n, m, target, &m_sigs, &t_sigs, &mut perm, &mut used) {
        Some(perm)
    } else {
        None
    }
}

/// Check that a node permutation is a Cartan-matrix automorphism.
pub fn is_diagram_automorphism(datum: &RootDatum, perm: &[usize]) -> bool {
    let n = datum.rank();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    let c = datum.cartan();
    (0..n).all(|i| (0..n).all(|j| c[perm[i]][perm[j]] == c[i][j]))
}
