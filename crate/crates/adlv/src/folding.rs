//! Diagram folding: from a simply-laced system with an orthogonal-orbit
//! automorphism to the fixed-point system of non-simply-laced type.
//!
//! For an automorphism θ whose node orbits are pairwise orthogonal, the
//! fixed lattice `Y = P(R)^θ` carries a root datum of its own: the simple
//! generators are the orbit sums `N(α) = Σ_{γ∈orbit} γ`, with coroots the
//! restrictions of the source coroots. The folded Cartan matrix is computed,
//! never looked up, and is classified by permutation matching.
//!
//! The transfer lemmas (dominance, order, orbit-hull sets, and the lattice
//! inclusions `Y_H ↪ X_G`, `Y_{M_H} ↪ X_M`) are verified by exhaustive scan,
//! and the projection identity for the folded type is carried by lifting
//! every folded class through the simply-laced engine.

use crate::engine::{rhs_set, verify_theorem_cached, witness, witness_cached, LeviCache, VerificationReport};
use crate::error::{Error, Result};
use crate::lattices::{
    j_minuscule_dominant_lift, leq_dominance, xg_quotient, xm_quotient, AmbientLattice,
    LatticeClass, LeviSubset,
};
use crate::num::{rat, Rat};
use crate::orbits::{enumerate_pmu_strata, oracle_phi_pmu};
use crate::rootdata::{classify_cartan, is_diagram_automorphism, Family, RootDatum, WeightVec};
use num_traits::Zero;
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct FoldingDatum {
    pub source: RootDatum,
    pub theta: Vec<usize>,
    /// Node orbits of θ, each sorted, ordered by smallest node.
    pub orbits: Vec<Vec<usize>>,
    /// `folded_cartan[p][q] = ⟨ᾱ_q, N(α_p∨)⟩` over orbit representatives.
    pub folded_cartan: Vec<Vec<i64>>,
    /// The folded type as an abstract root datum.
    pub h: RootDatum,
    /// `h_node_of_orbit[p]` is the node of `h` carrying orbit `p`.
    pub h_node_of_orbit: Vec<usize>,
    /// Inverse of `h_node_of_orbit`.
    pub orbit_of_h_node: Vec<usize>,
}

fn orbit_decomposition(theta: &[usize]) -> Vec<Vec<usize>> {
    let n = theta.len();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut cur = theta[start];
        while cur != start {
            seen[cur] = true;
            orbit.push(cur);
            cur = theta[cur];
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Validate θ and build the folded datum.
pub fn build_folding(source: RootDatum, theta: Vec<usize>) -> Result<FoldingDatum> {
    if !source.is_simply_laced() {
        return Err(Error::Precondition(format!(
            "folding sources must be simply-laced, got {}",
            source.type_name()
        )));
    }
    if !is_diagram_automorphism(&source, &theta) {
        return Err(Error::Precondition("theta is not a Cartan-matrix automorphism".into()));
    }
    let orbits = orbit_decomposition(&theta);
    // orthogonality condition on orbits
    let c = source.cartan();
    for orbit in &orbits {
        for (a_pos, &a) in orbit.iter().enumerate() {
            for &b in orbit.iter().skip(a_pos + 1) {
                if c[a][b] != 0 {
                    return Err(Error::Precondition(format!(
                        "orbit condition fails: nodes {} and {} lie in one orbit but are adjacent",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
    }
    let m = orbits.len();
    let mut folded = vec![vec![0i64; m]; m];
    for (p, op) in orbits.iter().enumerate() {
        for (q, oq) in orbits.iter().enumerate() {
            let rep_q = oq[0];
            folded[p][q] = op.iter().map(|&g| c[g][rep_q]).sum();
        }
    }
    // The abstract folded datum has Cartan matrix folded^T (the orbit sums
    // are its simple roots, the restricted coroots its simple coroots).
    let transposed: Vec<Vec<i64>> = (0..m)
        .map(|i| (0..m).map(|j| folded[j][i]).collect())
        .collect();
    let Some((family, rank, perm)) = classify_cartan(&transposed) else {
        return Err(Error::ConsistencyFailure(
            "folded Cartan matrix is not of finite type".into(),
        ));
    };
    let h = RootDatum::build(family, rank)?;
    let mut orbit_of_h_node = vec![usize::MAX; m];
    for (p, &node) in perm.iter().enumerate() {
        orbit_of_h_node[node] = p;
    }
    let fd = FoldingDatum {
        source,
        theta,
        orbits,
        folded_cartan: folded,
        h,
        h_node_of_orbit: perm,
        orbit_of_h_node,
    };
    // Consistency: each orbit sum transfers to the matching simple root of h.
    for p in 0..m {
        let n_root = fd.orbit_root_sum(p);
        let transferred = fd.to_h(&n_root)?;
        let mut expect = WeightVec::zero(fd.h.rank());
        expect.coords[fd.h_node_of_orbit[p]] = rat(1);
        if transferred != expect {
            return Err(Error::ConsistencyFailure(format!(
                "orbit sum {p} does not transfer to the simple root of the folded datum"
            )));
        }
    }
    Ok(fd)
}

impl FoldingDatum {
    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }

    /// `N(α) = Σ_{γ∈orbit} α_γ` as a source weight.
    pub fn orbit_root_sum(&self, p: usize) -> WeightVec {
        let mut w = WeightVec::zero(self.source.rank());
        for &g in &self.orbits[p] {
            w.coords[g] = rat(1);
        }
        w
    }

    /// Basis vector `Σ_{i∈orbit} ϖ_i` of the fixed lattice `Y`.
    pub fn fixed_basis(&self, p: usize) -> WeightVec {
        let mut acc = WeightVec::zero(self.source.rank());
        for &g in &self.orbits[p] {
            acc = acc.add(&self.source.fundamental_weight(g));
        }
        acc
    }

    pub fn theta_apply(&self, x: &WeightVec) -> WeightVec {
        let mut coords = vec![Rat::zero(); x.coords.len()];
        for (i, c) in x.coords.iter().enumerate() {
            coords[self.theta[i]] = c.clone();
        }
        WeightVec::new(coords)
    }

    pub fn is_theta_fixed(&self, x: &WeightVec) -> bool {
        self.theta_apply(x) == *x
    }

    /// Transfer a θ-fixed source vector to the folded datum by pairings with
    /// orbit-representative coroots.
    pub fn to_h(&self, y: &WeightVec) -> Result<WeightVec> {
        if !self.is_theta_fixed(y) {
            return Err(Error::Precondition(format!("{y} is not θ-fixed")));
        }
        let mut a = vec![Rat::zero(); self.h.rank()];
        for (p, orbit) in self.orbits.iter().enumerate() {
            a[self.h_node_of_orbit[p]] = self.source.pair_simple(y, orbit[0]);
        }
        Ok(self.h.weight_from_pairings(&a))
    }

    /// Transfer a folded weight back to the fixed lattice of the source.
    pub fn from_h(&self, x: &WeightVec) -> WeightVec {
        let a = self.h.simple_pairings(x);
        let mut acc = WeightVec::zero(self.source.rank());
        for p in 0..self.num_orbits() {
            let coeff = &a[self.h_node_of_orbit[p]];
            if !coeff.is_zero() {
                acc = acc.add(&self.fixed_basis(p).scale(coeff));
            }
        }
        acc
    }

    /// Enumerate `Y`-box elements with orbit coordinates in `[-bound, bound]`.
    fn fixed_box(&self, bound: i64) -> Vec<WeightVec> {
        let m = self.num_orbits();
        let mut out = vec![WeightVec::zero(self.source.rank())];
        for p in 0..m {
            let basis = self.fixed_basis(p);
            let mut next = Vec::with_capacity(out.len() * (2 * bound as usize + 1));
            for w in &out {
                for c in -bound..=bound {
                    next.push(w.add(&basis.scale(&rat(c))));
                }
            }
            out = next;
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct FoldingLemmaReport {
    pub dominance_transfer: bool,
    pub order_transfer: bool,
    pub hull_set_transfer: bool,
    pub lattice_inclusions: bool,
    pub counterexamples: Vec<String>,
}

impl FoldingLemmaReport {
    pub fn all_pass(&self) -> bool {
        self.dominance_transfer && self.order_transfer && self.hull_set_transfer && self.lattice_inclusions
    }
}

/// Exhaustively verify the four transfer lemmas on a coordinate box of the
/// fixed lattice.
pub fn verify_folding_lemmas(fd: &FoldingDatum, bound: i64) -> Result<FoldingLemmaReport> {
    let src = &fd.source;
    let h = &fd.h;
    let box_elems = fd.fixed_box(bound);
    let transferred: Vec<WeightVec> =
        box_elems.iter().map(|y| fd.to_h(y)).collect::<Result<_>>()?;
    let mut cex: Vec<String> = Vec::new();

    // dominance transfer (G-dominant iff H-dominant)
    let mut dominance_transfer = true;
    for (y, yh) in box_elems.iter().zip(transferred.iter()) {
        if src.is_dominant(y) != h.is_dominant(yh) {
            dominance_transfer = false;
            cex.push(format!("dominance transfer fails at {y}"));
        }
    }

    // order transfer (≤_G iff ≤_H)
    let mut order_transfer = true;
    for (nu, nuh) in box_elems.iter().zip(transferred.iter()) {
        for (mu, muh) in box_elems.iter().zip(transferred.iter()) {
            if leq_dominance(nu, mu) != leq_dominance(nuh, muh) {
                order_transfer = false;
                cex.push(format!("order transfer fails at nu={nu} mu={mu}"));
            }
        }
    }

    // hull-set transfer: P(H, μ) = Y ∩ P(G, μ) within the box
    let mut hull_set_transfer = true;
    for (mu, muh) in box_elems.iter().zip(transferred.iter()) {
        if !src.is_dominant(mu) {
            continue;
        }
        for (nu, nuh) in box_elems.iter().zip(transferred.iter()) {
            let (src_dom, _) = src.dominant_rep(nu);
            let (h_dom, _) = h.dominant_rep(nuh);
            let in_g = leq_dominance(&src_dom, mu);
            let in_h = leq_dominance(&h_dom, muh);
            if in_g != in_h {
                hull_set_transfer = false;
                cex.push(format!("hull-set transfer fails at mu={mu} nu={nu}"));
            }
        }
    }

    // lattice inclusions: Y_H ↪ X_G and Y_{M_H} ↪ X_M, commuting squares
    let mut lattice_inclusions = true;
    let ambient = AmbientLattice::Weight;
    let q_xg = xg_quotient(src, ambient);
    let q_yh = xg_quotient(h, ambient);
    let xg_classes: Vec<LatticeClass> =
        box_elems.iter().map(|y| q_xg.project(src, y)).collect::<Result<_>>()?;
    let yh_classes: Vec<LatticeClass> =
        transferred.iter().map(|yh| q_yh.project(h, yh)).collect::<Result<_>>()?;
    for a in 0..box_elems.len() {
        for b in (a + 1)..box_elems.len() {
            if (yh_classes[a] == yh_classes[b]) != (xg_classes[a] == xg_classes[b]) {
                lattice_inclusions = false;
                cex.push(format!(
                    "Y_H -> X_G inclusion fails between {} and {}",
                    box_elems[a], box_elems[b]
                ));
            }
        }
    }
    // X_M -> X_G is well defined (square commutes through a section)
    for (y, c) in box_elems.iter().zip(xg_classes.iter()) {
        let back = q_xg.section(src, c)?;
        if q_xg.project(src, &back)? != *c {
            lattice_inclusions = false;
            cex.push(format!("section round trip fails at {y}"));
        }
    }
    // the Levi-level inclusion for every θ-stable proper nonempty union of orbits
    let m = fd.num_orbits();
    for mask in 1..(1u32 << m) - 1 {
        let orbit_idx: Vec<usize> = (0..m).filter(|p| mask >> p & 1 == 1).collect();
        let src_nodes: BTreeSet<usize> = orbit_idx
            .iter()
            .flat_map(|&p| fd.orbits[p].iter().copied())
            .collect();
        let h_nodes: BTreeSet<usize> =
            orbit_idx.iter().map(|&p| fd.h_node_of_orbit[p]).collect();
        let levi_src = LeviSubset::new(src, &src_nodes)?;
        let levi_h = LeviSubset::new(h, &h_nodes)?;
        let q_xm = xm_quotient(src, &levi_src, ambient);
        let q_ymh = xm_quotient(h, &levi_h, ambient);
        let xm_classes: Vec<LatticeClass> =
            box_elems.iter().map(|y| q_xm.project(src, y)).collect::<Result<_>>()?;
        let ymh_classes: Vec<LatticeClass> =
            transferred.iter().map(|yh| q_ymh.project(h, yh)).collect::<Result<_>>()?;
        for a in 0..box_elems.len() {
            for b in (a + 1)..box_elems.len() {
                if (ymh_classes[a] == ymh_classes[b]) != (xm_classes[a] == xm_classes[b]) {
                    lattice_inclusions = false;
                    cex.push(format!(
                        "Y_MH -> X_M inclusion fails for orbits {orbit_idx:?} between {} and {}",
                        box_elems[a], box_elems[b]
                    ));
                }
            }
        }
    }

    cex.truncate(20);
    Ok(FoldingLemmaReport {
        dominance_transfer,
        order_transfer,
        hull_set_transfer,
        lattice_inclusions,
        counterexamples: cex,
    })
}

#[derive(Debug, Clone)]
pub struct FoldingLiftCheck {
    pub nu: LatticeClass,
    pub theta_fixed: bool,
    pub lift_in_pmu: bool,
    pub maps_back: bool,
}

impl FoldingLiftCheck {
    pub fn all_pass(&self) -> bool {
        self.theta_fixed && self.lift_in_pmu && self.maps_back
    }
}

#[derive(Debug, Clone)]
pub struct FoldingReport {
    pub source_type: String,
    pub h_type: String,
    /// H-side set comparison; certificates are the source-side witnesses.
    pub report: VerificationReport,
    pub lift_checks: Vec<FoldingLiftCheck>,
}

impl FoldingReport {
    pub fn all_valid(&self) -> bool {
        self.report.all_valid() && self.lift_checks.iter().all(FoldingLiftCheck::all_pass)
    }
}

/// Verify the projection identity for the folded type: compute both H-side
/// sets, and witness each right-hand-side class by lifting through the
/// simply-laced source. The lift used for the transfer is the M-dominant,
/// M-minuscule representative; its θ-fixedness is the key step and is
/// checked for every class.
pub fn verify_via_folding(
    fd: &FoldingDatum,
    orbit_levi: &BTreeSet<usize>,
    mu_fixed: &WeightVec,
    ambient: AmbientLattice,
) -> Result<FoldingReport> {
    let mu_h = fd.to_h(mu_fixed)?;
    let pmu_h = enumerate_pmu_strata(&fd.h, &mu_h)?;
    verify_via_folding_cached(fd, orbit_levi, mu_fixed, ambient, &pmu_h)
}

/// [`verify_via_folding`] with the folded-side point set precomputed, so
/// sweeps can share it across Levi subsets.
pub fn verify_via_folding_cached(
    fd: &FoldingDatum,
    orbit_levi: &BTreeSet<usize>,
    mu_fixed: &WeightVec,
    ambient: AmbientLattice,
    pmu_h: &crate::orbits::PMuSet,
) -> Result<FoldingReport> {
    let src = &fd.source;
    let h = &fd.h;
    if orbit_levi.is_empty() || orbit_levi.len() >= fd.num_orbits() {
        return Err(Error::InvalidLevi(
            "the folded Levi must be a proper nonempty union of orbits".into(),
        ));
    }
    if !fd.is_theta_fixed(mu_fixed) {
        return Err(Error::Precondition(format!("μ = {mu_fixed} is not θ-fixed")));
    }
    if !src.is_dominant(mu_fixed) {
        return Err(Error::NotDominant(format!("{mu_fixed}")));
    }
    let mu_h = fd.to_h(mu_fixed)?;
    let src_nodes: BTreeSet<usize> = orbit_levi
        .iter()
        .flat_map(|&p| fd.orbits[p].iter().copied())
        .collect();
    let h_nodes: BTreeSet<usize> = orbit_levi.iter().map(|&p| fd.h_node_of_orbit[p]).collect();
    let levi_src = LeviSubset::new(src, &src_nodes)?;
    let levi_h = LeviSubset::new(h, &h_nodes)?;
    let q_xm_h = xm_quotient(h, &levi_h, ambient);

    let q_xm_src = xm_quotient(src, &levi_src, ambient);
    let q_xg_src = xg_quotient(src, ambient);

    // H-side both sides
    if pmu_h.mu != mu_h {
        return Err(Error::Precondition("cached point set belongs to a different weight".into()));
    }
    let lhs_h = oracle_phi_pmu(h, &q_xm_h, pmu_h)?;
    let rhs_h = rhs_set(h, &levi_h, &q_xm_h, &mu_h)?;

    // source-side witnesses per H-class
    let mu_g_src = q_xg_src.project(src, mu_fixed)?;
    let mut certificates = Vec::new();
    let mut counterexamples = Vec::new();
    let mut lift_checks = Vec::new();
    let mut cache = LeviCache::new();
    for nu in &rhs_h {
        // H-side minuscule-dominant lift into Y, then down to X_M
        let z_h = j_minuscule_dominant_lift(h, &levi_h, &q_xm_h, nu)?;
        let y_fixed = fd.from_h(&z_h);
        let y_src = q_xm_src.project(src, &y_fixed)?;
        match witness_cached(src, &levi_src, &q_xm_src, &q_xg_src, mu_fixed, &y_src, &mut cache) {
            Ok(cert) => certificates.push(cert),
            Err(e) => counterexamples.push(format!("nu={:?}: {e}", nu.coords)),
        }
        // the source M-dominant M-minuscule lift must be θ-fixed
        let lift = j_minuscule_dominant_lift(src, &levi_src, &q_xm_src, &y_src)?;
        let theta_fixed = fd.is_theta_fixed(&lift);
        let (lift_dom, _) = src.dominant_rep(&lift);
        let lift_in_pmu =
            leq_dominance(&lift_dom, mu_fixed) && q_xg_src.project(src, &lift)? == mu_g_src;
        let maps_back = theta_fixed && {
            let back = fd.to_h(&lift)?;
            q_xm_h.project(h, &back)? == *nu
        };
        lift_checks.push(FoldingLiftCheck {
            nu: nu.clone(),
            theta_fixed,
            lift_in_pmu,
            maps_back,
        });
    }
    let equal = lhs_h == rhs_h;
    if !equal {
        counterexamples.push(format!(
            "H-side mismatch: lhs {:?} rhs {:?}",
            lhs_h.iter().map(|c| &c.coords).collect::<Vec<_>>(),
            rhs_h.iter().map(|c| &c.coords).collect::<Vec<_>>()
        ));
    }
    Ok(FoldingReport {
        source_type: src.type_name(),
        h_type: h.type_name(),
        report: VerificationReport {
            type_name: h.type_name(),
            ambient,
            levi: levi_h.nodes().to_vec(),
            mu: mu_h,
            lhs: lhs_h,
            rhs: rhs_h,
            equal,
            certificates,
            counterexamples,
        },
        lift_checks,
    })
}

/// A single-class witness through the folding: lift the folded class to the
/// fixed lattice and certify it with the simply-laced engine.
pub fn folded_class_witness(
    fd: &FoldingDatum,
    orbit_levi: &BTreeSet<usize>,
    mu_fixed: &WeightVec,
    nu_coords: Vec<crate::num::Int>,
    ambient: AmbientLattice,
) -> Result<crate::engine::Certificate> {
    let src = &fd.source;
    let h = &fd.h;
    let h_nodes: BTreeSet<usize> = orbit_levi.iter().map(|&p| fd.h_node_of_orbit[p]).collect();
    let src_nodes: BTreeSet<usize> =
        orbit_levi.iter().flat_map(|&p| fd.orbits[p].iter().copied()).collect();
    let levi_h = LeviSubset::new(h, &h_nodes)?;
    let levi_src = LeviSubset::new(src, &src_nodes)?;
    let q_xm_h = xm_quotient(h, &levi_h, ambient);
    let q_xg_h = xg_quotient(h, ambient);
    if nu_coords.len() != q_xm_h.num_coords() {
        return Err(Error::DimensionMismatch {
            expected: q_xm_h.num_coords(),
            got: nu_coords.len(),
        });
    }
    let nu = q_xm_h.class_from_coords(nu_coords);
    let mu_h = fd.to_h(mu_fixed)?;
    // H-side membership conditions
    let sect = q_xm_h.section(h, &nu)?;
    if q_xg_h.project(h, &sect)? != q_xg_h.project(h, &mu_h)? {
        return Err(Error::Precondition(
            "condition (i) fails: the class and μ differ in the full quotient".into(),
        ));
    }
    let (nu_real, _) = crate::lattices::orth_project_complement(h, &levi_h, &sect);
    if !crate::orbits::conv_membership(h, &mu_h, &nu_real)? {
        return Err(Error::Precondition(
            "condition (ii) fails: realization is outside the projected hull".into(),
        ));
    }
    let z_h = j_minuscule_dominant_lift(h, &levi_h, &q_xm_h, &nu)?;
    let y_fixed = fd.from_h(&z_h);
    let q_xm_src = xm_quotient(src, &levi_src, ambient);
    let q_xg_src = xg_quotient(src, ambient);
    let y_src = q_xm_src.project(src, &y_fixed)?;
    witness(src, &levi_src, &q_xm_src, &q_xg_src, mu_fixed, &y_src)
}

/// The canonical simply-laced source for each non-simply-laced type.
pub fn canonical_source(family: Family, rank: usize) -> Result<(RootDatum, Vec<usize>)> {
    match (family, rank) {
        (Family::B, n) if n >= 2 => {
            let m = 2 * n - 1;
            let src = RootDatum::build(Family::A, m)?;
            let theta: Vec<usize> = (0..m).map(|i| m - 1 - i).collect();
            Ok((src, theta))
        }
        (Family::C, n) if n >= 3 => {
            let src = RootDatum::build(Family::D, n + 1)?;
            let mut theta: Vec<usize> = (0..=n).collect();
            theta.swap(n - 1, n);
            Ok((src, theta))
        }
        (Family::F, 4) => {
            let src = RootDatum::build(Family::E, 6)?;
            Ok((src, vec![5, 1, 4, 3, 2, 0]))
        }
        (Family::G, 2) => {
            let src = RootDatum::build(Family::D, 4)?;
            Ok((src, vec![2, 1, 3, 0]))
        }
        _ => Err(Error::InvalidType(format!(
            "{family}{rank} has no canonical folding source"
        ))),
    }
}

/// Verify the projection identity for any reduced irreducible type:
/// simply-laced types run the engine directly, the rest go through their
/// canonical folding.
pub fn verify_any(
    family: Family,
    rank: usize,
    levi_nodes: &BTreeSet<usize>,
    mu_fund: &[i64],
    ambient: AmbientLattice,
) -> Result<VerificationReport> {
    let datum = RootDatum::build(family, rank)?;
    if mu_fund.len() != rank {
        return Err(Error::DimensionMismatch { expected: rank, got: mu_fund.len() });
    }
    if mu_fund.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(format!("{mu_fund:?}")));
    }
    if datum.is_simply_laced() {
        let levi = LeviSubset::new(&datum, levi_nodes)?;
        let mu = datum.weight_from_fundamental(mu_fund);
        let pmu = enumerate_pmu_strata(&datum, &mu)?;
        return verify_theorem_cached(&datum, &levi, &mu, ambient, &pmu);
    }
    if datum.family() == Family::BC {
        return Err(Error::InvalidType(
            "the non-reduced BC series is reached through coinvariants, not direct verification"
                .into(),
        ));
    }
    let (src, theta) = canonical_source(family, rank)?;
    let fd = build_folding(src, theta)?;
    if fd.h.family() != family || fd.h.rank() != rank {
        return Err(Error::ConsistencyFailure(format!(
            "canonical source folds to {}, expected {family}{rank}",
            fd.h.type_name()
        )));
    }
    // user works in the folded datum's labeling
    for &k in levi_nodes {
        if k >= rank {
            return Err(Error::IndexOutOfRange { index: k, rank });
        }
    }
    let orbit_levi: BTreeSet<usize> = levi_nodes.iter().map(|&k| fd.orbit_of_h_node[k]).collect();
    let mu_h = fd.h.weight_from_fundamental(mu_fund);
    let mu_fixed = fd.from_h(&mu_h);
    let folding_report = verify_via_folding(&fd, &orbit_levi, &mu_fixed, ambient)?;
    let mut report = folding_report.report;
    // fold the lift checks into the counterexample list
    for lc in &folding_report.lift_checks {
        if !lc.all_pass() {
            report.counterexamples.push(format!(
                "lift check failed at nu={:?}: theta_fixed={} in_pmu={} maps_back={}",
                lc.nu.coords, lc.theta_fixed, lc.lift_in_pmu, lc.maps_back
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    #[test]
    fn fold_a3_to_b2() {
        let src = RootDatum::build(Family::A, 3).unwrap();
        let fd = build_folding(src, vec![2, 1, 0]).unwrap();
        assert_eq!(fd.orbits, vec![vec![0, 2], vec![1]]);
        assert_eq!(fd.folded_cartan, vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(fd.h.family(), Family::B);
        assert_eq!(fd.h.rank(), 2);
    }

    #[test]
    fn fold_rejects_adjacent_orbit() {
        let src = RootDatum::build(Family::A, 2).unwrap();
        match build_folding(src, vec![1, 0]) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("adjacent")),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn fold_d4_triality_to_g2() {
        let src = RootDatum::build(Family::D, 4).unwrap();
        let fd = build_folding(src, vec![2, 1, 3, 0]).unwrap();
        assert_eq!(fd.h.family(), Family::G);
        assert_eq!(fd.h.rank(), 2);
    }

    #[test]
    fn fold_types_match_fixed_point_table() {
        // A_{2n-1} -> B_n, D_n -> C_{n-1}, E6 -> F4 (orbit sums as roots)
        let a5 = RootDatum::build(Family::A, 5).unwrap();
        let fd = build_folding(a5, vec![4, 3, 2, 1, 0]).unwrap();
        assert_eq!((fd.h.family(), fd.h.rank()), (Family::B, 3));

        let d5 = RootDatum::build(Family::D, 5).unwrap();
        let fd = build_folding(d5, vec![0, 1, 2, 4, 3]).unwrap();
        assert_eq!((fd.h.family(), fd.h.rank()), (Family::C, 4));

        let e6 = RootDatum::build(Family::E, 6).unwrap();
        let fd = build_folding(e6, vec![5, 1, 4, 3, 2, 0]).unwrap();
        assert_eq!((fd.h.family(), fd.h.rank()), (Family::F, 4));
    }

    #[test]
    fn canonical_sources_classify_correctly() {
        for (f, n) in [(Family::B, 2), (Family::B, 3), (Family::C, 3), (Family::C, 4), (Family::F, 4), (Family::G, 2)] {
            let (src, theta) = canonical_source(f, n).unwrap();
            let fd = build_folding(src, theta).unwrap();
            assert_eq!((fd.h.family(), fd.h.rank()), (f, n), "{f}{n}");
        }
    }

    #[test]
    fn transfer_round_trip() {
        let (src, theta) = canonical_source(Family::G, 2).unwrap();
        let fd = build_folding(src, theta).unwrap();
        for f in [[1i64, 0], [0, 1], [2, 1]] {
            let xh = fd.h.weight_from_fundamental(&f);
            let y = fd.from_h(&xh);
            assert!(fd.is_theta_fixed(&y));
            assert_eq!(fd.to_h(&y).unwrap(), xh);
        }
    }

    #[test]
    fn lemmas_a3_folding() {
        let src = RootDatum::build(Family::A, 3).unwrap();
        let fd = build_folding(src, vec![2, 1, 0]).unwrap();
        let report = verify_folding_lemmas(&fd, 2).unwrap();
        assert!(report.all_pass(), "{:?}", report.counterexamples);
    }

    #[test]
    fn verify_via_folding_a3_worked() {
        let src = RootDatum::build(Family::A, 3).unwrap();
        let fd = build_folding(src, vec![2, 1, 0]).unwrap();
        // folded highest weight: both folded nodes within a small bound
        for orbit_levi in [[0usize], [1usize]] {
            let mu_h = fd.h.weight_from_fundamental(&[1, 1]);
            let mu_fixed = fd.from_h(&mu_h);
            let report = verify_via_folding(
                &fd,
                &orbit_levi.iter().copied().collect(),
                &mu_fixed,
                AmbientLattice::Weight,
            )
            .unwrap();
            assert!(report.all_valid(), "{:?}", report.report.counterexamples);
        }
    }

    #[test]
    fn verify_via_folding_zero_mu() {
        let src = RootDatum::build(Family::A, 3).unwrap();
        let fd = build_folding(src, vec![2, 1, 0]).unwrap();
        let report = verify_via_folding(
            &fd,
            &[0usize].into_iter().collect(),
            &WeightVec::zero(3),
            AmbientLattice::Weight,
        )
        .unwrap();
        assert!(report.all_valid());
        assert_eq!(report.report.lhs.len(), 1);
    }

    #[test]
    fn verify_any_g2() {
        let report = verify_any(
            Family::G,
            2,
            &[0usize].into_iter().collect(),
            &[1, 0],
            AmbientLattice::Weight,
        )
        .unwrap();
        assert!(report.all_valid(), "{:?}", report.counterexamples);
    }

    #[test]
    fn adjoint_lattice_spot_check() {
        // identity also holds over the root-lattice ambient
        let src = RootDatum::build(Family::A, 3).unwrap();
        let fd = build_folding(src, vec![2, 1, 0]).unwrap();
        let mu_h = fd.h.weight_from_fundamental(&[0, 2]);
        let mu_fixed = fd.from_h(&mu_h);
        // 2*omega_2(H) transfers into the root lattice of the source
        if fd.source.in_root_lattice(&mu_fixed) {
            let report = verify_via_folding(
                &fd,
                &[0usize].into_iter().collect(),
                &mu_fixed,
                AmbientLattice::Root,
            )
            .unwrap();
            assert!(report.all_valid(), "{:?}", report.report.counterexamples);
        }
        let _ = int(0);
    }
}
