//! Coinvariant lattices and the quasi-split non-emptiness criterion.
//!
//! A diagram automorphism σ (the combinatorial shadow of Frobenius) yields
//! the coinvariant lattice `Y = X/(1−σ)X` with projection ρ, the further
//! quotients `Y_M`, `Y_G`, and the cofolded system `R′ = ρ(R)` — which is
//! non-reduced of type BC when σ has adjacent orbits, e.g. the involution
//! of `A_{2n}`. The relative Weyl group is generated by one longest element
//! per node orbit and acts on `Y`.
//!
//! The criterion: for `ν_M` strictly dominant in `Y_M`, `ν_M ⪯ μ` iff `ν_M`
//! is the image of a lattice point of `Conv(Wμ)` in the right coset. The
//! forward direction is produced constructively: a cover chain of dominant
//! `Y`-classes, one positive coroot class per cover, each cover realized on
//! the source by subtracting a positive root with pairing ≥ 1 and replaying
//! the cutoff game.

use crate::error::{Error, Result};
use crate::game::{cutoff_condition, play_to_dominant};
use crate::lattices::{
    leq_by_generators, orth_project_complement, AmbientLattice, LatticeClass, LeviSubset, Quotient,
};
use crate::num::{rat, Int, Rat};
use crate::orbits::enumerate_pmu_strata;
use crate::rootdata::{
    classify_cartan, is_diagram_automorphism, Family, RootDatum, RootPair, WeightVec,
};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct CoinvariantDatum {
    pub source: RootDatum,
    pub sigma: Vec<usize>,
    /// Node orbits of σ, sorted by smallest node.
    pub orbits: Vec<Vec<usize>>,
    /// `Y = X/(1−σ)X` in canonical coordinates.
    pub q_y: Quotient,
    /// `Y_G = X_G/(1−σ)X_G`.
    pub q_yg: Quotient,
    /// Classes of the positive roots in `Y` (the positive part of `R′`),
    /// deduplicated.
    pub positive_classes: BTreeSet<LatticeClass>,
    /// One generator class per orbit: the image of the orbit's simple roots.
    pub simple_classes: Vec<LatticeClass>,
    /// Reduced/non-reduced type label of `R′`, e.g. "C2", "BC2", "A2".
    pub cofolded_label: String,
    /// Per orbit, a word of simple reflections for the longest element of
    /// the orbit subsystem; these generate the relative Weyl group on `Y`.
    pub relative_gen_words: Vec<Vec<usize>>,
}

fn orbit_decomposition(sigma: &[usize]) -> Vec<Vec<usize>> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut cur = sigma[start];
        while cur != start {
            seen[cur] = true;
            orbit.push(cur);
            cur = sigma[cur];
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Build the coinvariant datum for a diagram automorphism.
pub fn build_coinvariants(source: RootDatum, sigma: Vec<usize>) -> Result<CoinvariantDatum> {
    if !is_diagram_automorphism(&source, &sigma) {
        return Err(Error::Precondition("sigma is not a Cartan-matrix automorphism".into()));
    }
    let orbits = orbit_decomposition(&sigma);
    let rank = source.rank();
    let ambient = AmbientLattice::Weight;

    // (1−σ)X generators: ϖ_i − ϖ_{σ(i)}
    let mut cogen: Vec<WeightVec> = Vec::new();
    for i in 0..rank {
        if sigma[i] != i {
            cogen.push(source.fundamental_weight(i).sub(&source.fundamental_weight(sigma[i])));
        }
    }
    let q_y = Quotient::new(&source, ambient, &cogen, format!("{}|Y(sigma)", source.type_name()))?;
    // Y_G adds the full root lattice
    let mut g_gens = cogen.clone();
    for i in 0..rank {
        let mut a = WeightVec::zero(rank);
        a.coords[i] = rat(1);
        g_gens.push(a);
    }
    let q_yg =
        Quotient::new(&source, ambient, &g_gens, format!("{}|Y_G(sigma)", source.type_name()))?;

    // cofolded classes
    let mut positive_classes = BTreeSet::new();
    for rp in source.positive_roots() {
        positive_classes.insert(q_y.project(&source, &rp.root)?);
    }
    let mut simple_classes: Vec<LatticeClass> = Vec::new();
    for orbit in &orbits {
        let mut a = WeightVec::zero(rank);
        a.coords[orbit[0]] = rat(1);
        let c = q_y.project(&source, &a)?;
        if !simple_classes.contains(&c) {
            simple_classes.push(c);
        }
    }

    // relative Weyl generators: longest element per orbit subsystem
    let c = source.cartan();
    let mut relative_gen_words = Vec::new();
    for orbit in &orbits {
        let pairwise_orthogonal = orbit
            .iter()
            .enumerate()
            .all(|(pos, &a)| orbit.iter().skip(pos + 1).all(|&b| c[a][b] == 0));
        if pairwise_orthogonal {
            relative_gen_words.push(orbit.clone());
        } else if orbit.len() == 2 {
            // adjacent pair: longest element of the A2 subsystem
            relative_gen_words.push(vec![orbit[0], orbit[1], orbit[0]]);
        } else {
            return Err(Error::Precondition(format!(
                "unsupported orbit shape {orbit:?} for the relative Weyl group"
            )));
        }
    }

    let mut datum = CoinvariantDatum {
        cofolded_label: String::new(),
        source,
        sigma,
        orbits,
        q_y,
        q_yg,
        positive_classes,
        simple_classes,
        relative_gen_words,
    };
    datum.cofolded_label = datum.classify_cofolded()?;
    Ok(datum)
}

impl CoinvariantDatum {
    pub fn is_split(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn sigma_apply(&self, x: &WeightVec) -> WeightVec {
        let mut coords = vec![Rat::zero(); x.coords.len()];
        for (i, c) in x.coords.iter().enumerate() {
            coords[self.sigma[i]] = c.clone();
        }
        WeightVec::new(coords)
    }

    pub fn sigma_order(&self) -> usize {
        self.orbits.iter().map(|o| o.len()).fold(1, num_integer::lcm)
    }

    /// σ-average of a source vector; constant on `(1−σ)X`-cosets, so it
    /// realizes `Y ⊗ ℝ` inside the σ-fixed subspace.
    pub fn average(&self, x: &WeightVec) -> WeightVec {
        let ord = self.sigma_order();
        let mut acc = x.clone();
        let mut cur = x.clone();
        for _ in 1..ord {
            cur = self.sigma_apply(&cur);
            acc = acc.add(&cur);
        }
        acc.scale(&Rat::new(Int::from(1), Int::from(ord as i64)))
    }

    pub fn rho(&self, x: &WeightVec) -> Result<LatticeClass> {
        self.q_y.project(&self.source, x)
    }

    pub fn realization(&self, y: &LatticeClass) -> Result<WeightVec> {
        Ok(self.average(&self.q_y.section(&self.source, y)?))
    }

    /// Pairings of the realization with one coroot per orbit.
    pub fn y_pairings(&self, y: &LatticeClass) -> Result<Vec<Rat>> {
        let real = self.realization(y)?;
        Ok(self.orbits.iter().map(|o| self.source.pair_simple(&real, o[0])).collect())
    }

    pub fn y_dominant(&self, y: &LatticeClass) -> Result<bool> {
        Ok(self.y_pairings(y)?.iter().all(|p| !p.is_negative()))
    }

    /// Apply the relative generator of orbit `p` to a `Y`-class.
    pub fn relative_reflect(&self, p: usize, y: &LatticeClass) -> Result<LatticeClass> {
        let sect = self.q_y.section(&self.source, y)?;
        let moved = self.source.apply_word(&self.relative_gen_words[p], &sect)?;
        self.q_y.project(&self.source, &moved)
    }

    /// The dominant representative of a class under the relative Weyl group.
    pub fn y_dominant_rep(&self, y: &LatticeClass) -> Result<LatticeClass> {
        let mut cur = y.clone();
        let mut guard = 0usize;
        loop {
            guard += 1;
            if guard > 100_000 {
                return Err(Error::ConsistencyFailure(
                    "relative dominification did not terminate".into(),
                ));
            }
            let pairings = self.y_pairings(&cur)?;
            match pairings.iter().position(|p| p.is_negative()) {
                None => return Ok(cur),
                Some(p) => cur = self.relative_reflect(p, &cur)?,
            }
        }
    }

    fn y_antidominant_rep(&self, y: &LatticeClass) -> Result<LatticeClass> {
        let mut cur = y.clone();
        let mut guard = 0usize;
        loop {
            guard += 1;
            if guard > 100_000 {
                return Err(Error::ConsistencyFailure(
                    "relative antidominification did not terminate".into(),
                ));
            }
            let pairings = self.y_pairings(&cur)?;
            match pairings.iter().position(|p| p.is_positive()) {
                None => return Ok(cur),
                Some(p) => cur = self.relative_reflect(p, &cur)?,
            }
        }
    }

    /// Coefficients of `y` on the simple classes (unique since their free
    /// parts form a basis); `None` when the torsion parts do not match an
    /// integral combination.
    pub fn decompose(&self, y: &LatticeClass) -> Result<Option<Vec<Rat>>> {
        let free_idx = self.q_y.free_positions();
        let mat: Vec<Vec<Rat>> = free_idx
            .iter()
            .map(|&row| {
                self.simple_classes
                    .iter()
                    .map(|g| Rat::from_integer(g.coords[row].clone()))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> =
            free_idx.iter().map(|&row| Rat::from_integer(y.coords[row].clone())).collect();
        let Some(sol) = crate::num::solve_square(&mat, &rhs) else {
            return Err(Error::ConsistencyFailure(
                "simple cofolded classes are not independent".into(),
            ));
        };
        // verify the full identity (torsion included) when integral
        if sol.iter().all(|c| c.is_integer()) {
            let mut acc = self.q_y.zero_class();
            for (c, g) in sol.iter().zip(self.simple_classes.iter()) {
                acc = self.q_y.add(&acc, &self.q_y.scale(&c.to_integer(), g)?)?;
            }
            if acc != *y {
                return Ok(None);
            }
        }
        Ok(Some(sol))
    }

    /// Full dominance on `Y`: `b − a` a nonnegative integral combination of
    /// the simple classes.
    pub fn leq_y(&self, a: &LatticeClass, b: &LatticeClass) -> Result<bool> {
        let diff = self.q_y.sub(b, a)?;
        match self.decompose(&diff)? {
            Some(sol) => Ok(sol.iter().all(|c| c.is_integer() && !c.is_negative())),
            None => Ok(false),
        }
    }

    /// Real-cone version used for hull membership on the cofolded system.
    fn leq_y_real(&self, a: &LatticeClass, b: &LatticeClass) -> Result<bool> {
        let diff = self.q_y.sub(b, a)?;
        match self.decompose(&diff)? {
            Some(sol) => Ok(sol.iter().all(|c| !c.is_negative())),
            None => Ok(false),
        }
    }

    fn classify_cofolded(&self) -> Result<String> {
        if self.is_split() {
            return Ok(self.source.type_name());
        }
        // non-reduced iff some class doubles to another class
        let nonreduced = self.positive_classes.iter().any(|c| {
            let doubled = self.q_y.scale(&Int::from(2), c).unwrap();
            self.positive_classes.contains(&doubled)
        });
        let m = self.simple_classes.len();
        if nonreduced {
            return Ok(format!("BC{m}"));
        }
        // Cartan-style matrix of the realization vectors
        let reals: Vec<WeightVec> =
            self.simple_classes.iter().map(|c| self.realization(c)).collect::<Result<_>>()?;
        let mut mat = vec![vec![0i64; m]; m];
        for p in 0..m {
            let norm = self.source.form(&reals[p], &reals[p]);
            for q in 0..m {
                let val = rat(2) * self.source.form(&reals[q], &reals[p]) / norm.clone();
                if !val.is_integer() {
                    return Err(Error::ConsistencyFailure(
                        "cofolded pairing matrix is not integral".into(),
                    ));
                }
                mat[p][q] = val.to_integer().to_i64().unwrap();
            }
        }
        // prefer the C-labeling for the ambiguous rank-2 double bond:
        // cofolding A_{2n-1} yields C_n
        if m == 2 {
            if let Some((Family::B, _, _)) = classify_cartan(&mat) {
                return Ok("C2".into());
            }
        }
        match classify_cartan(&mat) {
            Some((fam, rank, _)) => Ok(format!("{fam}{rank}")),
            None => {
                Err(Error::ConsistencyFailure("cofolded system is not of finite type".into()))
            }
        }
    }

    /// `Y_M(J) = X/(Q(R_J) + (1−σ)X)` for a σ-stable Levi.
    pub fn levi_quotient(&self, levi: &LeviSubset) -> Result<Quotient> {
        for &j in levi.nodes() {
            if !levi.contains(self.sigma[j]) {
                return Err(Error::InvalidLevi(format!(
                    "J is not sigma-stable: node {} maps outside",
                    j + 1
                )));
            }
        }
        let rank = self.source.rank();
        let mut gens: Vec<WeightVec> = Vec::new();
        for &j in levi.nodes() {
            let mut a = WeightVec::zero(rank);
            a.coords[j] = rat(1);
            gens.push(a);
        }
        for i in 0..rank {
            if self.sigma[i] != i {
                gens.push(
                    self.source
                        .fundamental_weight(i)
                        .sub(&self.source.fundamental_weight(self.sigma[i])),
                );
            }
        }
        Quotient::new(
            &self.source,
            AmbientLattice::Weight,
            &gens,
            format!("{}|Y_M{}(sigma)", self.source.type_name(), levi.label()),
        )
    }

    /// ψ: Y → Y_M.
    pub fn psi(&self, q_ym: &Quotient, y: &LatticeClass) -> Result<LatticeClass> {
        let sect = self.q_y.section(&self.source, y)?;
        q_ym.project(&self.source, &sect)
    }

    /// Deduplicated generator classes of `⪯` on `Y_M`: images of the simple
    /// roots outside `J`, one per σ-orbit.
    pub fn ym_order_generators(
        &self,
        levi: &LeviSubset,
        q_ym: &Quotient,
    ) -> Result<Vec<LatticeClass>> {
        let rank = self.source.rank();
        let mut gens = Vec::new();
        for orbit in &self.orbits {
            if levi.contains(orbit[0]) {
                continue;
            }
            let mut a = WeightVec::zero(rank);
            a.coords[orbit[0]] = rat(1);
            let c = q_ym.project(&self.source, &a)?;
            if !gens.contains(&c) {
                gens.push(c);
            }
        }
        Ok(gens)
    }

    /// The order `⪯` on `Y_M`.
    pub fn leq_ym(
        &self,
        levi: &LeviSubset,
        q_ym: &Quotient,
        a: &LatticeClass,
        b: &LatticeClass,
    ) -> Result<bool> {
        let gens = self.ym_order_generators(levi, q_ym)?;
        leq_by_generators(q_ym, a, b, &gens)
    }

    /// Strict positive chamber `Y_M^+`: the realization pairs strictly
    /// positively with every simple coroot outside `J`.
    pub fn in_ym_plus(
        &self,
        levi: &LeviSubset,
        q_ym: &Quotient,
        nu: &LatticeClass,
    ) -> Result<bool> {
        let sect = q_ym.section(&self.source, nu)?;
        let avg = self.average(&sect);
        let (pr, _) = orth_project_complement(&self.source, levi, &avg);
        Ok(levi
            .complement(self.source.rank())
            .iter()
            .all(|&i| self.source.pair_simple(&pr, i).is_positive()))
    }

    /// All dominant classes of the interval `{y : bottom ⪯ y ⪯ top}`.
    pub fn dominant_interval(
        &self,
        top: &LatticeClass,
        bottom: &LatticeClass,
    ) -> Result<Vec<LatticeClass>> {
        let diff = self.q_y.sub(top, bottom)?;
        let Some(sol) = self.decompose(&diff)? else {
            return Ok(Vec::new());
        };
        if sol.iter().any(|c| !c.is_integer() || c.is_negative()) {
            return Ok(Vec::new());
        }
        let bounds: Vec<i64> = sol.iter().map(|c| c.to_integer().to_i64().unwrap()).collect();
        let mut out = Vec::new();
        let m = bounds.len();
        let mut counter = vec![0i64; m];
        'outer: loop {
            let mut y = bottom.clone();
            for (p, &a) in counter.iter().enumerate() {
                if a != 0 {
                    y = self
                        .q_y
                        .add(&y, &self.q_y.scale(&Int::from(a), &self.simple_classes[p])?)?;
                }
            }
            if self.y_dominant(&y)? {
                out.push(y);
            }
            for p in 0..m {
                if counter[p] < bounds[p] {
                    counter[p] += 1;
                    continue 'outer;
                }
                counter[p] = 0;
            }
            break;
        }
        Ok(out)
    }

    /// A chain of dominance covers from `top` down to `bottom` among dominant
    /// classes, each difference checked against the positive cofolded classes.
    pub fn cover_chain(
        &self,
        top: &LatticeClass,
        bottom: &LatticeClass,
    ) -> Result<Vec<LatticeClass>> {
        if !self.y_dominant(top)? || !self.y_dominant(bottom)? {
            return Err(Error::Precondition("cover chains need dominant endpoints".into()));
        }
        if !self.leq_y(bottom, top)? {
            return Err(Error::Precondition("bottom is not below top".into()));
        }
        let interval = self.dominant_interval(top, bottom)?;
        let mut chain = vec![top.clone()];
        let mut cur = top.clone();
        while cur != *bottom {
            let below: Vec<&LatticeClass> = interval
                .iter()
                .filter(|y| **y != cur && self.leq_y(y, &cur).unwrap_or(false))
                .collect();
            // a maximal element of the strictly-below set is a cover of cur
            let next = below
                .iter()
                .find(|y| below.iter().all(|z| z == *y || !self.leq_y(y, z).unwrap_or(false)))
                .ok_or_else(|| {
                    Error::ConsistencyFailure("no cover found inside a nonempty interval".into())
                })?;
            let diff = self.q_y.sub(&cur, next)?;
            if !self.positive_classes.contains(&diff) {
                return Err(Error::ConsistencyFailure(format!(
                    "cover difference {:?} is not a positive cofolded class",
                    diff.coords
                )));
            }
            cur = (*next).clone();
            chain.push(cur.clone());
        }
        Ok(chain)
    }

    /// A positive source root `γ` with `ρ(γ)` the given class and
    /// `⟨μ, γ∨⟩ ≥ 1`.
    pub fn find_gamma(&self, mu: &WeightVec, beta_class: &LatticeClass) -> Result<RootPair> {
        let mut fiber_nonempty = false;
        for rp in self.source.positive_roots() {
            if self.rho(&rp.root)? == *beta_class {
                fiber_nonempty = true;
                let pairing = self.source.pairing(mu, &rp.coroot)?;
                if pairing >= rat(1) {
                    if self.source.is_simply_laced() {
                        // ⟨γ, α∨⟩ ≤ 1 for every other positive coroot
                        for other in self.source.positive_roots() {
                            if other.root != rp.root
                                && self.source.pairing(&rp.root, &other.coroot)? > rat(1)
                            {
                                return Err(Error::ConsistencyFailure(format!(
                                    "simply-laced pairing bound fails for γ = {}",
                                    rp.root
                                )));
                            }
                        }
                    }
                    return Ok(rp.clone());
                }
            }
        }
        if fiber_nonempty {
            Err(Error::ConsistencyFailure(
                "no fiber element pairs ≥ 1 with μ (contradicts dominance of the cover)".into(),
            ))
        } else {
            Err(Error::Precondition(
                "empty fiber: the class is not the image of a positive root".into(),
            ))
        }
    }

    /// `P′_{ρ(μ)}`: classes in the coset of `ρ(μ)` whose relative dominant
    /// representative lies under `ρ(μ)` in the real cofolded cone.
    pub fn pprime_set(&self, mu_y: &LatticeClass) -> Result<BTreeSet<LatticeClass>> {
        if !self.y_dominant(mu_y)? {
            return Err(Error::NotDominant("P' needs a dominant seed".into()));
        }
        let antidom = self.y_antidominant_rep(mu_y)?;
        let span = self.q_y.sub(mu_y, &antidom)?;
        let Some(sol) = self.decompose(&span)? else {
            return Err(Error::ConsistencyFailure(
                "orbit span not in the root-class lattice".into(),
            ));
        };
        let bounds: Vec<i64> =
            sol.iter().map(|c| c.floor().to_integer().to_i64().unwrap().max(0)).collect();
        let m = bounds.len();
        let mut out = BTreeSet::new();
        let mut counter = vec![0i64; m];
        'outer: loop {
            let mut y = mu_y.clone();
            for (p, &a) in counter.iter().enumerate() {
                if a != 0 {
                    y = self
                        .q_y
                        .sub(&y, &self.q_y.scale(&Int::from(a), &self.simple_classes[p])?)?;
                }
            }
            let rep = self.y_dominant_rep(&y)?;
            if self.leq_y_real(&rep, mu_y)? {
                out.insert(y);
            }
            for p in 0..m {
                if counter[p] < bounds[p] {
                    counter[p] += 1;
                    continue 'outer;
                }
                counter[p] = 0;
            }
            break;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct DominanceFactsReport {
    pub dominance_descends: bool,
    pub order_descends: bool,
    pub counterexamples: Vec<String>,
}

/// Exhaustively check that ρ carries dominance to dominance and the source
/// order to the coinvariant order, over a fundamental-coordinate box.
pub fn dominance_facts_check(datum: &CoinvariantDatum, bound: i64) -> Result<DominanceFactsReport> {
    let src = &datum.source;
    let rank = src.rank();
    let mut dominance_descends = true;
    let mut order_descends = true;
    let mut cex = Vec::new();
    let mut coords = vec![-bound; rank];
    'outer: loop {
        let x = src.weight_from_fundamental(&coords);
        let y = datum.rho(&x)?;
        if src.is_dominant(&x) && !datum.y_dominant(&y)? {
            dominance_descends = false;
            cex.push(format!("dominance fails at {coords:?}"));
        }
        if x.coords.iter().all(|c| c.is_integer() && !c.is_negative())
            && !datum.leq_y(&datum.q_y.zero_class(), &y)?
        {
            order_descends = false;
            cex.push(format!("order fails at {coords:?}"));
        }
        for slot in 0..rank {
            if coords[slot] < bound {
                coords[slot] += 1;
                continue 'outer;
            }
            coords[slot] = -bound;
        }
        break;
    }
    cex.truncate(10);
    Ok(DominanceFactsReport { dominance_descends, order_descends, counterexamples: cex })
}

/// Scan the dominant classes with orbit coordinates in `[0, bound]` and check
/// that every cover of the dominance poset differs by one positive cofolded
/// class (the Stembridge property, non-reduced types included).
pub fn cover_poset_check(datum: &CoinvariantDatum, bound: i64) -> Result<(bool, Vec<String>)> {
    // dominant classes: nonnegative combinations of the fixed basis
    let mut elems: Vec<LatticeClass> = Vec::new();
    let m = datum.orbits.len();
    let mut counter = vec![0i64; m];
    'outer: loop {
        let mut w = WeightVec::zero(datum.source.rank());
        for (p, &c) in counter.iter().enumerate() {
            if c != 0 {
                for &i in &datum.orbits[p] {
                    w = w.add(&datum.source.fundamental_weight(i).scale(&rat(c)));
                }
            }
        }
        let y = datum.rho(&w)?;
        if !elems.contains(&y) {
            elems.push(y);
        }
        for p in 0..m {
            if counter[p] < bound {
                counter[p] += 1;
                continue 'outer;
            }
            counter[p] = 0;
        }
        break;
    }
    let mut ok = true;
    let mut cex = Vec::new();
    for a in &elems {
        for b in &elems {
            if a == b || !datum.leq_y(a, b)? {
                continue;
            }
            // is (a, b) a cover? decide inside the complete interval
            let interval = datum.dominant_interval(b, a)?;
            if interval.len() == 2 {
                let diff = datum.q_y.sub(b, a)?;
                if !datum.positive_classes.contains(&diff) {
                    ok = false;
                    cex.push(format!(
                        "cover {:?} -> {:?} differs by {:?}",
                        b.coords, a.coords, diff.coords
                    ));
                }
            }
        }
    }
    cex.truncate(10);
    Ok((ok, cex))
}

#[derive(Debug, Clone)]
pub struct CandidateOutcome {
    pub nu: LatticeClass,
    pub leq_holds: bool,
    pub member_holds: bool,
    /// For classes with `⪯`: whether the constructive chain produced and
    /// verified a witness.
    pub constructive: Option<bool>,
    pub chain_length: usize,
}

#[derive(Debug, Clone)]
pub struct QuasisplitReport {
    pub source_type: String,
    pub cofolded_label: String,
    pub levi: Vec<usize>,
    pub mu: WeightVec,
    pub rho_pmu_equals_pprime: bool,
    pub equivalent: bool,
    pub candidates: Vec<CandidateOutcome>,
    pub counterexamples: Vec<String>,
}

impl QuasisplitReport {
    pub fn all_valid(&self) -> bool {
        self.equivalent
            && self.rho_pmu_equals_pprime
            && self.counterexamples.is_empty()
            && self.candidates.iter().all(|c| c.constructive.unwrap_or(true))
    }
}

/// The constructive cover-chain descent for one `ν_M` with `ν_M ⪯ μ`.
/// Returns the witness point of `P_μ` mapping to `ν_M` and the number of
/// source-side subtraction steps, or an error describing the failed step.
fn constructive_descent(
    datum: &CoinvariantDatum,
    q_ym: &Quotient,
    mu: &WeightVec,
    nu_m: &LatticeClass,
    pprime: &BTreeSet<LatticeClass>,
) -> Result<(WeightVec, usize)> {
    let src = &datum.source;
    // target: a dominant element of P' in the ψ-fiber of ν_M
    let mut fiber: Vec<&LatticeClass> = Vec::new();
    for y in pprime {
        if datum.psi(q_ym, y)? == *nu_m {
            fiber.push(y);
        }
    }
    if fiber.is_empty() {
        return Err(Error::ConsistencyFailure(
            "cofolded identity guarantees a fiber element, found none".into(),
        ));
    }
    let mut y_star: Option<LatticeClass> = None;
    for y in &fiber {
        if datum.y_dominant(y)? {
            y_star = Some((*y).clone());
            break;
        }
    }
    let y_star = y_star.ok_or_else(|| {
        Error::ConsistencyFailure("no dominant element in the ψ-fiber inside P'".into())
    })?;

    let mut cur = mu.clone();
    let mut steps = 0usize;
    loop {
        let cur_y = datum.rho(&cur)?;
        if cur_y == y_star {
            return Ok((cur, steps));
        }
        if !datum.leq_y(&y_star, &cur_y)? {
            return Err(Error::ConsistencyFailure(
                "descent drifted away from the target class".into(),
            ));
        }
        let chain = datum.cover_chain(&cur_y, &y_star)?;
        let beta_class = datum.q_y.sub(&chain[0], &chain[1])?;
        let gamma = datum.find_gamma(&cur, &beta_class)?;
        let nu_point = cur.sub(&gamma.root);
        if !cutoff_condition(src, &nu_point) {
            return Err(Error::ConsistencyFailure(format!(
                "cutoff fails after subtracting {} from {}",
                gamma.root, cur
            )));
        }
        steps += 1;
        if datum.rho(&nu_point)? == y_star {
            return Ok((nu_point, steps));
        }
        let game = play_to_dominant(src, &nu_point, Some(mu))?;
        cur = game.end();
        if steps > 500 {
            return Err(Error::ConsistencyFailure("descent exceeded its step budget".into()));
        }
    }
}

/// Verify the quasi-split criterion for all strict-chamber classes in range:
/// `ν_M ⪯ μ ⟺ ν_M ∈ φ(P_μ)`, with the forward direction realized
/// constructively (cover chain, γ-selection, cutoff game) and the backward
/// direction checked against the enumeration oracle. Also performs the
/// central set equality `ρ(P_μ) = P′_{ρ(μ)}` by double enumeration.
pub fn verify_quasisplit_criterion(
    datum: &CoinvariantDatum,
    levi: &LeviSubset,
    mu: &WeightVec,
    bound: i64,
) -> Result<QuasisplitReport> {
    let src = &datum.source;
    if !src.is_dominant(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    let q_ym = datum.levi_quotient(levi)?;
    let mu_ym = q_ym.project(src, mu)?;

    // oracle: the image of P_mu in Y_M (and in Y for the set equality)
    let pmu = enumerate_pmu_strata(src, mu)?;
    let mut image: BTreeSet<LatticeClass> = BTreeSet::new();
    let mut rho_pmu: BTreeSet<LatticeClass> = BTreeSet::new();
    for p in &pmu.points {
        image.insert(q_ym.project(src, p)?);
        rho_pmu.insert(datum.rho(p)?);
    }

    // central set equality by double enumeration
    let mu_y = datum.rho(mu)?;
    let pprime = datum.pprime_set(&mu_y)?;
    let rho_pmu_equals_pprime = rho_pmu == pprime;

    // candidate box: free coordinates of the image, padded by the bound
    let free_idx = q_ym.free_positions();
    let n_coords = q_ym.num_coords();
    let mut ranges: Vec<Vec<i64>> = Vec::with_capacity(n_coords);
    for pos in 0..n_coords {
        if free_idx.contains(&pos) {
            let vals: Vec<i64> =
                image.iter().map(|c| c.coords[pos].to_i64().unwrap()).collect();
            let lo = vals.iter().min().copied().unwrap_or(0) - bound;
            let hi = vals.iter().max().copied().unwrap_or(0) + bound;
            ranges.push((lo..=hi).collect());
        } else {
            let m = q_ym.moduli()[pos].to_i64().unwrap();
            ranges.push((0..m).collect());
        }
    }
    let mut stack: Vec<Vec<i64>> = vec![vec![]];
    for range in &ranges {
        let mut next = Vec::new();
        for prefix in &stack {
            for &v in range {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        stack = next;
    }

    let mut candidates = Vec::new();
    let mut counterexamples = Vec::new();
    let mut equivalent = true;
    for coords in stack {
        let nu = q_ym.class_from_coords(coords.iter().map(|&v| v.into()).collect());
        if !datum.in_ym_plus(levi, &q_ym, &nu)? {
            continue;
        }
        let leq_holds = datum.leq_ym(levi, &q_ym, &nu, &mu_ym)?;
        let member_holds = image.contains(&nu);
        if leq_holds != member_holds {
            equivalent = false;
            counterexamples.push(format!(
                "nu={:?}: leq={leq_holds} membership={member_holds}",
                nu.coords
            ));
        }
        let mut constructive = None;
        let mut chain_length = 0;
        if leq_holds && member_holds {
            match constructive_descent(datum, &q_ym, mu, &nu, &pprime) {
                Ok((witness, steps)) => {
                    chain_length = steps;
                    let ok = crate::orbits::conv_membership(src, mu, &witness)?
                        && q_ym.project(src, &witness)? == nu
                        && pmu.points.contains(&witness);
                    constructive = Some(ok);
                    if !ok {
                        counterexamples
                            .push(format!("nu={:?}: constructive witness invalid", nu.coords));
                    }
                }
                Err(e) => {
                    constructive = Some(false);
                    counterexamples.push(format!("nu={:?}: descent failed: {e}", nu.coords));
                }
            }
        }
        candidates.push(CandidateOutcome {
            nu,
            leq_holds,
            member_holds,
            constructive,
            chain_length,
        });
    }

    Ok(QuasisplitReport {
        source_type: src.type_name(),
        cofolded_label: datum.cofolded_label.clone(),
        levi: levi.nodes().to_vec(),
        mu: mu.clone(),
        rho_pmu_equals_pprime,
        equivalent,
        candidates,
        counterexamples,
    })
}

#[derive(Debug, Clone)]
pub struct AdlvQuery {
    pub datum: CoinvariantDatum,
    pub levi: LeviSubset,
    pub mu: WeightVec,
    pub nu_m: LatticeClass,
}

#[derive(Debug, Clone, Copy)]
pub struct AdlvVerdict {
    pub nonempty: bool,
    pub via_order: bool,
    pub via_membership: bool,
}

/// The non-emptiness criterion: for `ν_M` in the strict chamber, the variety
/// attached to `(μ, b)` with `κ_M(b) = ν_M` is non-empty iff `ν_M ⪯ μ`.
/// Both computation paths (the order test and the membership test) run and
/// must agree before an answer is returned.
pub fn adlv_nonempty(query: &AdlvQuery) -> Result<AdlvVerdict> {
    let datum = &query.datum;
    let src = &datum.source;
    if !src.is_dominant(&query.mu) {
        return Err(Error::NotDominant(format!("{}", query.mu)));
    }
    let q_ym = datum.levi_quotient(&query.levi)?;
    if query.nu_m.tag != q_ym.tag() {
        return Err(Error::MismatchedQuotients(q_ym.tag().into(), query.nu_m.tag.clone()));
    }
    if !datum.in_ym_plus(&query.levi, &q_ym, &query.nu_m)? {
        return Err(Error::ChamberViolation(format!(
            "nu_M = {:?} is not in the strict chamber Y_M^+",
            query.nu_m.coords
        )));
    }
    let mu_ym = q_ym.project(src, &query.mu)?;
    let via_order = datum.leq_ym(&query.levi, &q_ym, &query.nu_m, &mu_ym)?;
    let pmu = enumerate_pmu_strata(src, &query.mu)?;
    let mut via_membership = false;
    for p in &pmu.points {
        if q_ym.project(src, p)? == query.nu_m {
            via_membership = true;
            break;
        }
    }
    if via_order != via_membership {
        return Err(Error::ConsistencyFailure(format!(
            "order and membership paths disagree at nu_M={:?}: {via_order} vs {via_membership}",
            query.nu_m.coords
        )));
    }
    Ok(AdlvVerdict { nonempty: via_order, via_order, via_membership })
}
