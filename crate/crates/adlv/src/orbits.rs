//! Weyl orbits, convex-hull membership, and the lattice-point sets `P_μ`.
//!
//! Hull membership uses the dominance criterion (the dominant representative
//! of `x` must sit under `μ` in the real dominance cone); the vertex-based
//! linear-feasibility route lives in [`crate::lp`] and is cross-checked in
//! tests rather than used twice.

use crate::error::{Error, Result};
use crate::lattices::{LatticeClass, LeviSubset, Quotient};
use crate::num::{Int, Rat};
use crate::rootdata::{RootDatum, WeightVec};
use num_traits::{Signed, ToPrimitive};
use std::collections::BTreeSet;

/// A full Weyl orbit with its dominant representative.
#[derive(Debug, Clone)]
pub struct OrbitSet {
    pub seed: WeightVec,
    pub elements: BTreeSet<WeightVec>,
}

/// The lattice points of `Conv(Wμ)` in the class of `μ` mod the root lattice.
#[derive(Debug, Clone)]
pub struct PMuSet {
    pub mu: WeightVec,
    pub points: BTreeSet<WeightVec>,
}

// ---------------------------------------------------------------------------
// Scaled-integer fast path.
//
// Hull scans multiply out the (bounded) denominators and run the
// dominification loop on exact i128 integers with checked arithmetic;
// any overflow falls back to the arbitrary-precision route, so exactness
// is never at stake. A reflection step needs no division: with
// x_s = scale·x the pairing (C·x_s)_i equals scale·⟨x, α_i∨⟩ and
// s_i(x)_s = x_s − (C·x_s)_i · e_i.
// ---------------------------------------------------------------------------

fn common_scale(vecs: &[&WeightVec]) -> Option<i128> {
    crate::num::common_scale_iter(vecs.iter().map(|v| v.coords.as_slice()))
}

fn to_scaled(x: &WeightVec, scale: i128) -> Option<Vec<i128>> {
    crate::num::to_scaled_slice(&x.coords, scale)
}

fn pairings_scaled(cartan: &[Vec<i64>], x: &[i128]) -> Option<Vec<i128>> {
    let n = x.len();
    let mut out = vec![0i128; n];
    for i in 0..n {
        let mut acc: i128 = 0;
        for j in 0..n {
            let c = cartan[i][j];
            if c != 0 {
                acc = acc.checked_add((c as i128).checked_mul(x[j])?)?;
            }
        }
        out[i] = acc;
    }
    Some(out)
}

/// Replace `x` by its dominant representative in place. `None` on overflow.
fn dominify_scaled(cartan: &[Vec<i64>], x: &mut [i128]) -> Option<()> {
    let mut guard = 0u64;
    loop {
        guard += 1;
        if guard > 10_000_000 {
            return None;
        }
        let p = pairings_scaled(cartan, x)?;
        match p.iter().position(|v| *v < 0) {
            None => return Some(()),
            Some(i) => x[i] = x[i].checked_sub(p[i])?,
        }
    }
}

fn conv_membership_scaled(cartan: &[Vec<i64>], mu_s: &[i128], x_s: &[i128]) -> Option<bool> {
    let mut cur = x_s.to_vec();
    dominify_scaled(cartan, &mut cur)?;
    Some(mu_s.iter().zip(cur.iter()).all(|(m, c)| m >= c))
}

/// Breadth-first closure of a dominant weight under simple reflections.
pub fn weyl_orbit(datum: &RootDatum, mu: &WeightVec) -> Result<OrbitSet> {
    if !datum.is_dominant(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    let mut elements = BTreeSet::new();
    let mut queue = vec![mu.clone()];
    elements.insert(mu.clone());
    while let Some(x) = queue.pop() {
        for i in 0..datum.rank() {
            let y = datum.reflect(i, &x)?;
            if elements.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    Ok(OrbitSet { seed: mu.clone(), elements })
}

/// Exact convex-hull membership: `x ∈ Conv(Wμ)` iff the dominant
/// representative of `x` lies under `μ` in the real dominance order.
pub fn conv_membership(datum: &RootDatum, mu: &WeightVec, x: &WeightVec) -> Result<bool> {
    if !datum.is_dominant(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    if let Some(scale) = common_scale(&[mu, x]) {
        if let (Some(mu_s), Some(x_s)) = (to_scaled(mu, scale), to_scaled(x, scale)) {
            if let Some(ans) = conv_membership_scaled(datum.cartan(), &mu_s, &x_s) {
                return Ok(ans);
            }
        }
    }
    let (dom, _) = datum.dominant_rep(x);
    Ok(mu
        .coords
        .iter()
        .zip(dom.coords.iter())
        .all(|(m, d)| !(m - d).is_negative()))
}

/// `P_μ` by breadth-first search from `μ` along subtraction of simple roots,
/// pruned by hull membership.
pub fn enumerate_pmu(datum: &RootDatum, mu: &WeightVec) -> Result<PMuSet> {
    if !datum.is_dominant(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    if !datum.in_weight_lattice(mu) {
        return Err(Error::NotInLattice(format!("{mu}")));
    }
    let mut points = BTreeSet::new();
    let mut queue = vec![mu.clone()];
    points.insert(mu.clone());
    while let Some(x) = queue.pop() {
        for i in 0..datum.rank() {
            let mut coords = x.coords.clone();
            coords[i] -= Rat::from_integer(1.into());
            let y = WeightVec::new(coords);
            if !points.contains(&y) && conv_membership(datum, mu, &y)? {
                points.insert(y.clone());
                queue.push(y);
            }
        }
    }
    Ok(PMuSet { mu: mu.clone(), points })
}

/// Independent oracle for `P_μ`: scan the full bounding box
/// `{μ − Σ c_i α_i : 0 ≤ c_i ≤ (μ − w₀μ)_i}` and keep the hull members.
pub fn pmu_box_oracle(datum: &RootDatum, mu: &WeightVec) -> Result<BTreeSet<WeightVec>> {
    if !datum.is_dominant(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    let (neg_dom, _) = datum.dominant_rep(&mu.neg());
    let span = mu.add(&neg_dom); // μ − w₀μ
    let bounds: Vec<i64> = span
        .coords
        .iter()
        .map(|c| c.floor().to_integer().to_i64().unwrap_or(0).max(0))
        .collect();
    let mut points = BTreeSet::new();
    let rank = datum.rank();
    let mut c = vec![0i64; rank];
    'outer: loop {
        let cand = WeightVec::new(
            mu.coords
                .iter()
                .zip(c.iter())
                .map(|(m, &ci)| m - Rat::from_integer(ci.into()))
                .collect(),
        );
        if conv_membership(datum, mu, &cand)? {
            points.insert(cand);
        }
        // odometer
        for i in 0..rank {
            if c[i] < bounds[i] {
                c[i] += 1;
                continue 'outer;
            }
            c[i] = 0;
        }
        break;
    }
    Ok(points)
}

/// `P_μ` via dominant strata: enumerate the dominant weights `λ = μ − Σ c_i α_i`
/// with integer `c ≥ 0` and expand their Weyl orbits. Same set as
/// [`enumerate_pmu`], considerably faster on large instances; the agreement
/// is pinned by tests.
pub fn enumerate_pmu_strata(datum: &RootDatum, mu: &WeightVec) -> Result<PMuSet> {
    if !datum.is_dominant(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    if !datum.in_weight_lattice(mu) {
        return Err(Error::NotInLattice(format!("{mu}")));
    }
    if let Some(points) = pmu_strata_scaled(datum, mu) {
        return Ok(PMuSet { mu: mu.clone(), points });
    }
    let (neg_dom, _) = datum.dominant_rep(&mu.neg());
    let span = mu.add(&neg_dom);
    let bounds: Vec<i64> = span
        .coords
        .iter()
        .map(|c| c.floor().to_integer().to_i64().unwrap_or(0).max(0))
        .collect();
    let rank = datum.rank();
    let mut points = BTreeSet::new();
    let mut c = vec![0i64; rank];
    'outer: loop {
        let cand = WeightVec::new(
            mu.coords
                .iter()
                .zip(c.iter())
                .map(|(m, &ci)| m - Rat::from_integer(ci.into()))
                .collect(),
        );
        if datum.is_dominant(&cand) {
            // dominant and under μ: a stratum seed
            let orbit = weyl_orbit(datum, &cand)?;
            points.extend(orbit.elements);
        }
        for i in 0..rank {
            if c[i] < bounds[i] {
                c[i] += 1;
                continue 'outer;
            }
            c[i] = 0;
        }
        break;
    }
    Ok(PMuSet { mu: mu.clone(), points })
}

fn pmu_strata_scaled(datum: &RootDatum, mu: &WeightVec) -> Option<BTreeSet<WeightVec>> {
    let cartan = datum.cartan();
    let rank = datum.rank();
    let scale = common_scale(&[mu])?;
    let mu_s = to_scaled(mu, scale)?;
    let mut neg: Vec<i128> = mu_s.iter().map(|v| v.checked_neg()).collect::<Option<_>>()?;
    dominify_scaled(cartan, &mut neg)?;
    // μ − w₀μ lies in the root lattice: the scaled coordinates divide evenly
    let mut bounds = Vec::with_capacity(rank);
    for (a, b) in mu_s.iter().zip(neg.iter()) {
        let span = a.checked_add(*b)?;
        if span % scale != 0 {
            return None;
        }
        bounds.push((span / scale).max(0));
    }
    let mut points: BTreeSet<Vec<i128>> = BTreeSet::new();
    let mut c = vec![0i128; rank];
    let mut cand = mu_s.clone();
    'outer: loop {
        if pairings_scaled(cartan, &cand)?.iter().all(|p| *p >= 0) {
            // stratum seed: expand its orbit
            if points.insert(cand.clone()) {
                let mut queue = vec![cand.clone()];
                while let Some(x) = queue.pop() {
                    let p = pairings_scaled(cartan, &x)?;
                    for i in 0..rank {
                        if p[i] == 0 {
                            continue;
                        }
                        let mut y = x.clone();
                        y[i] = y[i].checked_sub(p[i])?;
                        if points.insert(y.clone()) {
                            queue.push(y);
                        }
                    }
                }
            }
        }
        for i in 0..rank {
            if c[i] < bounds[i] {
                c[i] += 1;
                cand[i] = cand[i].checked_sub(scale)?;
                continue 'outer;
            }
            cand[i] = cand[i].checked_add(scale * c[i])?;
            c[i] = 0;
        }
        break;
    }
    Some(
        points
            .into_iter()
            .map(|v| WeightVec::new(crate::num::from_scaled_slice(&v, scale)))
            .collect(),
    )
}

/// Scan the cone `base − Σ c_i dir_i` over the integer box `0 ≤ c ≤ bounds`
/// and return the coefficient vectors whose point lies in `Conv(Wμ)`.
/// Runs on exact scaled integers, falling back to rational arithmetic.
pub fn hull_cone_scan(
    datum: &RootDatum,
    mu: &WeightVec,
    base: &WeightVec,
    dirs: &[WeightVec],
    bounds: &[i64],
) -> Result<Vec<Vec<i64>>> {
    debug_assert_eq!(dirs.len(), bounds.len());
    if let Some(hits) = hull_cone_scan_scaled(datum, mu, base, dirs, bounds) {
        return Ok(hits);
    }
    let mut hits = Vec::new();
    let mut c = vec![0i64; bounds.len()];
    'outer: loop {
        let mut real = base.clone();
        for (ci, d) in c.iter().zip(dirs.iter()) {
            if *ci != 0 {
                real = real.sub(&d.scale(&crate::num::rat(*ci)));
            }
        }
        if conv_membership(datum, mu, &real)? {
            hits.push(c.clone());
        }
        for slot in 0..c.len() {
            if c[slot] < bounds[slot] {
                c[slot] += 1;
                continue 'outer;
            }
            c[slot] = 0;
        }
        break;
    }
    Ok(hits)
}

fn hull_cone_scan_scaled(
    datum: &RootDatum,
    mu: &WeightVec,
    base: &WeightVec,
    dirs: &[WeightVec],
    bounds: &[i64],
) -> Option<Vec<Vec<i64>>> {
    let cartan = datum.cartan();
    let mut all: Vec<&WeightVec> = vec![mu, base];
    all.extend(dirs.iter());
    let scale = common_scale(&all)?;
    let mu_s = to_scaled(mu, scale)?;
    let base_s = to_scaled(base, scale)?;
    let dirs_s: Vec<Vec<i128>> = dirs.iter().map(|d| to_scaled(d, scale)).collect::<Option<_>>()?;
    let rank = datum.rank();
    let mut hits = Vec::new();
    let mut c = vec![0i64; bounds.len()];
    let mut point = base_s.clone();
    'outer: loop {
        if conv_membership_scaled(cartan, &mu_s, &point)? {
            hits.push(c.clone());
        }
        for slot in 0..c.len() {
            if c[slot] < bounds[slot] {
                c[slot] += 1;
                for k in 0..rank {
                    point[k] = point[k].checked_sub(dirs_s[slot][k])?;
                }
                continue 'outer;
            }
            for k in 0..rank {
                point[k] = point[k].checked_add(dirs_s[slot][k].checked_mul(c[slot] as i128)?)?;
            }
            c[slot] = 0;
        }
        break;
    }
    Some(hits)
}

/// Deduplicated free coordinates of `φ_J(wμ)` over the orbit: the vertex data
/// for projected-hull feasibility.
pub fn projected_vertex_coords(
    datum: &RootDatum,
    q_xm: &Quotient,
    orbit: &OrbitSet,
) -> Result<Vec<Vec<Rat>>> {
    let mut seen: BTreeSet<Vec<Int>> = BTreeSet::new();
    for w in &orbit.elements {
        let cls = q_xm.project(datum, w)?;
        seen.insert(q_xm.free_coords(&cls));
    }
    Ok(seen
        .into_iter()
        .map(|v| v.into_iter().map(Rat::from_integer).collect())
        .collect())
}

/// Condition (ii) of the projection identity: the real image of `y` lies in
/// `pr_J(Conv(Wμ))`, decided by exact rational feasibility over the
/// projected orbit vertices.
pub fn projected_hull_membership(
    q_xm: &Quotient,
    projected_vertices: &[Vec<Rat>],
    y: &LatticeClass,
) -> bool {
    let target: Vec<Rat> = q_xm
        .free_coords(y)
        .into_iter()
        .map(Rat::from_integer)
        .collect();
    if target.is_empty() {
        // rank-0 free part: the projected hull is a point
        return !projected_vertices.is_empty();
    }
    crate::lp::convex_combination_feasible(projected_vertices, &target)
}

/// The brute-force left-hand side: `{φ_J(ν) : ν ∈ P_μ}` in canonical form.
pub fn oracle_phi_pmu(
    datum: &RootDatum,
    q_xm: &Quotient,
    pmu: &PMuSet,
) -> Result<BTreeSet<LatticeClass>> {
    if let Some(out) = oracle_phi_pmu_scaled(datum, q_xm, pmu) {
        return Ok(out);
    }
    let mut out = BTreeSet::new();
    for p in &pmu.points {
        out.insert(q_xm.project(datum, p)?);
    }
    Ok(out)
}

fn oracle_phi_pmu_scaled(
    datum: &RootDatum,
    q_xm: &Quotient,
    pmu: &PMuSet,
) -> Option<BTreeSet<LatticeClass>> {
    use crate::lattices::AmbientLattice;
    let cartan = datum.cartan();
    let rank = datum.rank();
    let rows: Vec<Vec<i128>> = q_xm
        .kept_rows()
        .iter()
        .map(|row| row.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let moduli: Vec<i128> = q_xm.moduli().iter().map(|m| m.to_i128()).collect::<Option<_>>()?;
    let mut out = BTreeSet::new();
    for p in &pmu.points {
        let scale = common_scale(&[p])?;
        let x_s = to_scaled(p, scale)?;
        // ambient coordinates, exactly divided back by the scale
        let mut a = vec![0i128; rank];
        match q_xm.ambient() {
            AmbientLattice::Weight => {
                for i in 0..rank {
                    let mut acc: i128 = 0;
                    for j in 0..rank {
                        if cartan[i][j] != 0 {
                            acc = acc.checked_add((cartan[i][j] as i128).checked_mul(x_s[j])?)?;
                        }
                    }
                    if acc % scale != 0 {
                        return None; // not a lattice point; take the slow path's error
                    }
                    a[i] = acc / scale;
                }
            }
            AmbientLattice::Root => {
                for i in 0..rank {
                    if x_s[i] % scale != 0 {
                        return None;
                    }
                    a[i] = x_s[i] / scale;
                }
            }
        }
        let mut coords = Vec::with_capacity(rows.len());
        for (row, m) in rows.iter().zip(moduli.iter()) {
            let mut acc: i128 = 0;
            for (r, v) in row.iter().zip(a.iter()) {
                acc = acc.checked_add(r.checked_mul(*v)?)?;
            }
            if *m != 0 {
                acc = acc.rem_euclid(*m);
            }
            coords.push(crate::num::Int::from(acc));
        }
        out.insert(LatticeClass { tag: q_xm.tag().to_string(), coords });
    }
    Some(out)
}

/// Convenience wrapper: `φ_J(P_μ)` from scratch.
pub fn phi_pmu(
    datum: &RootDatum,
    levi: &LeviSubset,
    q_xm: &Quotient,
    mu: &WeightVec,
) -> Result<BTreeSet<LatticeClass>> {
    let _ = levi;
    let pmu = enumerate_pmu_strata(datum, mu)?;
    oracle_phi_pmu(datum, q_xm, &pmu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{xm_quotient, AmbientLattice};
    use crate::num::{int, rat, ratio};
    use crate::rootdata::Family;

    fn a2() -> RootDatum {
        RootDatum::build(Family::A, 2).unwrap()
    }

    #[test]
    fn orbit_sizes() {
        let r = a2();
        let rho = WeightVec::from_ints(&[1, 1]);
        assert_eq!(weyl_orbit(&r, &rho).unwrap().elements.len(), 6);
        assert_eq!(weyl_orbit(&r, &WeightVec::zero(2)).unwrap().elements.len(), 1);
        let a3 = RootDatum::build(Family::A, 3).unwrap();
        let w2 = a3.fundamental_weight(1);
        assert_eq!(weyl_orbit(&a3, &w2).unwrap().elements.len(), 6);
    }

    #[test]
    fn orbit_of_rho_a2_hand_listed() {
        let r = a2();
        let rho = WeightVec::from_ints(&[1, 1]);
        let orbit = weyl_orbit(&r, &rho).unwrap().elements;
        let expect: BTreeSet<WeightVec> = [
            [1i64, 1],
            [0, 1],
            [1, 0],
            [0, -1],
            [-1, 0],
            [-1, -1],
        ]
        .iter()
        .map(|c| WeightVec::from_ints(c))
        .collect();
        assert_eq!(orbit, expect);
    }

    #[test]
    fn orbit_rejects_non_dominant() {
        let r = a2();
        assert!(weyl_orbit(&r, &WeightVec::from_ints(&[-1, 0])).is_err());
    }

    #[test]
    fn conv_membership_examples() {
        let r = a2();
        let mu = WeightVec::from_ints(&[1, 1]);
        assert!(conv_membership(&r, &mu, &WeightVec::zero(2)).unwrap());
        assert!(!conv_membership(&r, &mu, &WeightVec::from_ints(&[2, 1])).unwrap());
        assert!(conv_membership(&r, &mu, &mu).unwrap());
        // rational interior point
        let x = WeightVec::new(vec![ratio(1, 2), ratio(0, 1)]);
        assert!(conv_membership(&r, &mu, &x).unwrap());
    }

    #[test]
    fn conv_membership_agrees_with_vertex_lp() {
        // Dominance criterion vs vertex feasibility on a rational grid.
        for (fam, rank, mu_f) in [
            (Family::A, 2, vec![1i64, 1]),
            (Family::B, 2, vec![1, 1]),
            (Family::A, 3, vec![1, 0, 1]),
        ] {
            let r = RootDatum::build(fam, rank).unwrap();
            let mu = r.weight_from_fundamental(&mu_f);
            let orbit = weyl_orbit(&r, &mu).unwrap();
            let verts: Vec<Vec<Rat>> = orbit.elements.iter().map(|w| w.coords.clone()).collect();
            let steps: Vec<Rat> = (-4..=4).map(|k| ratio(k, 2)).collect();
            let mut grid = vec![vec![]];
            for _ in 0..rank {
                let mut next = Vec::new();
                for prefix in &grid {
                    for s in &steps {
                        let mut p: Vec<Rat> = prefix.clone();
                        p.push(s.clone());
                        next.push(p);
                    }
                }
                grid = next;
            }
            for coords in grid {
                let x = WeightVec::new(coords.clone());
                let lhs = conv_membership(&r, &mu, &x).unwrap();
                let rhs = crate::lp::convex_combination_feasible(&verts, &coords);
                assert_eq!(lhs, rhs, "{fam:?}{rank} at {x}");
            }
        }
    }

    #[test]
    fn pmu_worked_instance_a2() {
        let r = a2();
        let mu = WeightVec::from_ints(&[1, 1]);
        let pmu = enumerate_pmu(&r, &mu).unwrap();
        assert_eq!(pmu.points.len(), 7);
        let oracle = pmu_box_oracle(&r, &mu).unwrap();
        assert_eq!(pmu.points, oracle);
        let strata = enumerate_pmu_strata(&r, &mu).unwrap();
        assert_eq!(pmu.points, strata.points);
        assert!(pmu.points.contains(&WeightVec::zero(2)));
    }

    #[test]
    fn pmu_minuscule_a2() {
        let r = a2();
        let w1 = r.fundamental_weight(0);
        let pmu = enumerate_pmu(&r, &w1).unwrap();
        assert_eq!(pmu.points.len(), 3);
        assert_eq!(pmu.points, pmu_box_oracle(&r, &w1).unwrap());
    }

    #[test]
    fn pmu_zero() {
        let r = RootDatum::build(Family::G, 2).unwrap();
        let pmu = enumerate_pmu(&r, &WeightVec::zero(2)).unwrap();
        assert_eq!(pmu.points.len(), 1);
    }

    #[test]
    fn pmu_routes_agree_more_types() {
        for (fam, rank, mu_f) in [
            (Family::B, 2, vec![2i64, 1]),
            (Family::G, 2, vec![1, 0]),
            (Family::A, 3, vec![1, 1, 0]),
            (Family::C, 3, vec![0, 1, 1]),
        ] {
            let r = RootDatum::build(fam, rank).unwrap();
            let mu = r.weight_from_fundamental(&mu_f);
            let bfs = enumerate_pmu(&r, &mu).unwrap().points;
            let strata = enumerate_pmu_strata(&r, &mu).unwrap().points;
            let oracle = pmu_box_oracle(&r, &mu).unwrap();
            assert_eq!(bfs, strata, "{fam:?}{rank}");
            assert_eq!(bfs, oracle, "{fam:?}{rank}");
        }
    }

    #[test]
    fn pmu_is_weyl_stable_and_contains_orbit() {
        let r = RootDatum::build(Family::B, 2).unwrap();
        let mu = r.weight_from_fundamental(&[1, 1]);
        let pmu = enumerate_pmu(&r, &mu).unwrap();
        let orbit = weyl_orbit(&r, &mu).unwrap();
        assert!(orbit.elements.is_subset(&pmu.points));
        for p in &pmu.points {
            for i in 0..2 {
                assert!(pmu.points.contains(&r.reflect(i, p).unwrap()));
            }
        }
    }

    #[test]
    fn oracle_phi_worked_instance() {
        let r = a2();
        let mu = WeightVec::from_ints(&[1, 1]);
        let pmu = enumerate_pmu(&r, &mu).unwrap();
        for nodes in [vec![0usize], vec![1usize]] {
            let j = LeviSubset::new(&r, &nodes.iter().copied().collect()).unwrap();
            let q = xm_quotient(&r, &j, AmbientLattice::Weight);
            let image = oracle_phi_pmu(&r, &q, &pmu).unwrap();
            let coords: BTreeSet<Int> =
                image.iter().map(|c| c.coords[0].clone()).collect();
            assert_eq!(coords, [int(-3), int(0), int(3)].into_iter().collect());
        }
    }

    #[test]
    fn projected_membership_routes_agree() {
        // the realization criterion (hull slice) against vertex LP feasibility
        use crate::lattices::orth_project_complement;
        use num_traits::Zero;
        for (fam, rank, jn, mu_f) in [
            (Family::A, 2, vec![0usize], vec![1i64, 1]),
            (Family::A, 3, vec![1], vec![1, 1, 0]),
            (Family::B, 3, vec![0, 2], vec![1, 0, 1]),
            (Family::D, 4, vec![0, 3], vec![0, 1, 0, 1]),
        ] {
            let r = RootDatum::build(fam, rank).unwrap();
            let j = LeviSubset::new(&r, &jn.iter().copied().collect()).unwrap();
            let q = xm_quotient(&r, &j, AmbientLattice::Weight);
            let mu = r.weight_from_fundamental(&mu_f);
            let orbit = weyl_orbit(&r, &mu).unwrap();
            let verts = projected_vertex_coords(&r, &q, &orbit).unwrap();
            // scan a box of classes around the image of mu
            let mu_class = q.project(&r, &mu).unwrap();
            let n = q.num_coords();
            let mut deltas = vec![vec![]];
            for pos in 0..n {
                let range: Vec<i64> = if q.moduli()[pos].is_zero() {
                    (-6..=6).collect()
                } else {
                    (0..q.moduli()[pos].to_i64().unwrap()).collect()
                };
                let mut next = Vec::new();
                for prefix in &deltas {
                    for &v in &range {
                        let mut p: Vec<i64> = prefix.clone();
                        p.push(v);
                        next.push(p);
                    }
                }
                deltas = next;
            }
            for d in deltas {
                let mut coords = mu_class.coords.clone();
                for (c, v) in coords.iter_mut().zip(d.iter()) {
                    *c += Int::from(*v);
                }
                let y = q.class_from_coords(coords);
                let via_lp = projected_hull_membership(&q, &verts, &y);
                let sect = q.section(&r, &y).unwrap();
                let (real, _) = orth_project_complement(&r, &j, &sect);
                let via_slice = conv_membership(&r, &mu, &real).unwrap();
                assert_eq!(via_lp, via_slice, "{fam:?}{rank} J={jn:?} y={:?}", y.coords);
            }
        }
    }

    #[test]
    fn projected_hull_segment() {
        let r = a2();
        let mu = WeightVec::from_ints(&[1, 1]);
        let j = LeviSubset::new(&r, &[0usize].into_iter().collect()).unwrap();
        let q = xm_quotient(&r, &j, AmbientLattice::Weight);
        let orbit = weyl_orbit(&r, &mu).unwrap();
        let verts = projected_vertex_coords(&r, &q, &orbit).unwrap();
        for (val, expect) in [(0i64, true), (3, true), (-3, true), (6, false), (2, true)] {
            let y = q.class_from_coords(vec![int(val)]);
            assert_eq!(projected_hull_membership(&q, &verts, &y), expect, "y={val}");
        }
        let _ = rat(0);
    }
}
