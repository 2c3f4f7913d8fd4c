//! The numbers game with cutoff: λ-minuscule Weyl elements.
//!
//! A node may fire only when its pairing is exactly −1; firing adds the
//! simple root. A start vector converges to a dominant one under such moves
//! iff it pairs ≥ −1 with every positive coroot, and the number of moves is
//! forced (the count of positive coroots with negative pairing drops by one
//! per firing).

use crate::error::{Error, Result};
use crate::num::{frac_part, rat};
use crate::rootdata::{RootDatum, WeightVec};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// A minuscule firing word. `word` is stored with the convention that
/// reflections apply right-to-left: the last letter fires first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameWord {
    pub word: Vec<usize>,
    pub start_coords: Vec<String>,
    pub end_coords: Vec<String>,
}

impl GameWord {
    pub fn new(word: Vec<usize>, start: &WeightVec, end: &WeightVec) -> Self {
        GameWord {
            word,
            start_coords: start.coords.iter().map(crate::num::fmt_rat).collect(),
            end_coords: end.coords.iter().map(crate::num::fmt_rat).collect(),
        }
    }

    pub fn start(&self) -> WeightVec {
        WeightVec::new(self.start_coords.iter().map(|s| crate::num::parse_rat(s).unwrap()).collect())
    }

    pub fn end(&self) -> WeightVec {
        WeightVec::new(self.end_coords.iter().map(|s| crate::num::parse_rat(s).unwrap()).collect())
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Replay the word right-to-left, checking that every step fires at
    /// pairing exactly −1 and that the end matches.
    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        let mut cur = self.start();
        for &i in self.word.iter().rev() {
            let p = datum.pair_simple(&cur, i);
            if p != rat(-1) {
                return Err(Error::ConsistencyFailure(format!(
                    "firing node {} at pairing {} (must be -1)",
                    i + 1,
                    crate::num::fmt_rat(&p)
                )));
            }
            cur = datum.reflect(i, &cur)?;
        }
        if cur != self.end() {
            return Err(Error::ConsistencyFailure(
                "game word does not reach its recorded end".into(),
            ));
        }
        Ok(())
    }
}

/// The cutoff criterion: `⟨λ, α∨⟩ ≥ −1` for every positive coroot.
pub fn cutoff_condition(datum: &RootDatum, lambda: &WeightVec) -> bool {
    cutoff_witness(datum, lambda).is_none()
}

/// All positive-coroot pairings of `λ` on the scaled-integer fast path.
fn coroot_pairings_scaled(datum: &RootDatum, lambda: &WeightVec) -> Option<(Vec<i128>, i128)> {
    let rows = datum.coroot_rows()?;
    let scale = crate::num::common_scale_iter(std::iter::once(lambda.coords.as_slice()))?;
    let x = crate::num::to_scaled_slice(&lambda.coords, scale)?;
    let mut out = Vec::new();
    crate::num::rows_mul_scaled(rows, &x, &mut out)?;
    Some((out, scale))
}

/// First positive coroot violating the cutoff, if any.
pub fn cutoff_witness<'a>(
    datum: &'a RootDatum,
    lambda: &WeightVec,
) -> Option<&'a crate::rootdata::RootPair> {
    if let Some((pairings, scale)) = coroot_pairings_scaled(datum, lambda) {
        return pairings
            .iter()
            .position(|&v| v < -scale)
            .map(|idx| &datum.positive_roots()[idx]);
    }
    datum.positive_roots().iter().find(|rp| {
        datum.pairing(lambda, &rp.coroot).expect("rank checked") < rat(-1)
    })
}

/// Count of positive coroots pairing negatively with `λ` (the size of `S_λ`).
fn negative_count(datum: &RootDatum, lambda: &WeightVec) -> usize {
    if let Some((pairings, _)) = coroot_pairings_scaled(datum, lambda) {
        return pairings.iter().filter(|&&v| v < 0).count();
    }
    datum
        .positive_roots()
        .iter()
        .filter(|rp| datum.pairing(lambda, &rp.coroot).expect("rank checked").is_negative())
        .count()
}

/// Membership in the translated antidominant cone
/// `C⁺_μ = {x : ⟨x, ω_i⟩ ≤ ⟨μ, ω_i⟩ ∀i}`, i.e. coordinatewise `x ≤ μ`.
pub fn in_cone(mu: &WeightVec, x: &WeightVec) -> bool {
    mu.coords
        .iter()
        .zip(x.coords.iter())
        .all(|(m, c)| !(m - c).is_negative())
}

/// Play the cutoff game from `λ` to the dominant chamber, firing the
/// lowest-index node of pairing −1 first. With a `μ`-context every
/// intermediate vector is asserted to stay in `C⁺_μ`.
pub fn play_to_dominant(
    datum: &RootDatum,
    lambda: &WeightVec,
    mu_context: Option<&WeightVec>,
) -> Result<GameWord> {
    if let Some(rp) = cutoff_witness(datum, lambda) {
        let v = datum.pairing(lambda, &rp.coroot)?;
        return Err(Error::CutoffViolation {
            coroot: format!("{}", rp.root),
            value: crate::num::fmt_rat(&v),
        });
    }
    if let Some(mu) = mu_context {
        if !in_cone(mu, lambda) {
            return Err(Error::Precondition(format!("start {lambda} is outside the cone of {mu}")));
        }
    }
    if let Some(result) = play_scaled(datum, lambda, mu_context) {
        return result;
    }
    let mut cur = lambda.clone();
    let mut fired: Vec<usize> = Vec::new();
    let mut s_size = negative_count(datum, &cur);
    loop {
        let pairings = datum.simple_pairings(&cur);
        let Some(i) = pairings.iter().position(|p| p.is_negative()) else {
            // dominant
            let mut word = fired.clone();
            word.reverse(); // right-to-left application order
            debug_assert_eq!(word.len(), negative_count(datum, lambda));
            return Ok(GameWord::new(word, lambda, &cur));
        };
        if pairings[i] != rat(-1) {
            return Err(Error::ConsistencyFailure(format!(
                "cutoff held at start but node {} reached pairing {}",
                i + 1,
                crate::num::fmt_rat(&pairings[i])
            )));
        }
        cur = datum.reflect(i, &cur)?;
        fired.push(i);
        let next_size = negative_count(datum, &cur);
        if next_size + 1 != s_size {
            return Err(Error::ConsistencyFailure(format!(
                "negative-pairing count went {s_size} -> {next_size}; must drop by exactly 1"
            )));
        }
        s_size = next_size;
        if let Some(mu) = mu_context {
            if !in_cone(mu, &cur) {
                return Err(Error::ConsistencyFailure(format!(
                    "firing escaped the cone of {mu} at {cur}"
                )));
            }
        }
    }
}

/// Scaled-integer play loop with the same invariant assertions.
fn play_scaled(
    datum: &RootDatum,
    lambda: &WeightVec,
    mu_context: Option<&WeightVec>,
) -> Option<Result<GameWord>> {
    let rows = datum.coroot_rows()?;
    let cartan = datum.cartan();
    let rank = datum.rank();
    let mut vecs = vec![lambda.coords.as_slice()];
    if let Some(mu) = mu_context {
        vecs.push(mu.coords.as_slice());
    }
    let scale = crate::num::common_scale_iter(vecs.into_iter())?;
    let mut cur = crate::num::to_scaled_slice(&lambda.coords, scale)?;
    let mu_s = match mu_context {
        Some(mu) => Some(crate::num::to_scaled_slice(&mu.coords, scale)?),
        None => None,
    };
    let mut buf: Vec<i128> = Vec::new();
    crate::num::rows_mul_scaled(rows, &cur, &mut buf)?;
    let mut s_size = buf.iter().filter(|&&v| v < 0).count();
    let mut fired: Vec<usize> = Vec::new();
    'outer: loop {
        let mut target: Option<usize> = None;
        for i in 0..rank {
            let mut p: i128 = 0;
            for j in 0..rank {
                if cartan[i][j] != 0 {
                    p = p.checked_add((cartan[i][j] as i128).checked_mul(cur[j])?)?;
                }
            }
            if p < 0 {
                if p != -scale {
                    return Some(Err(Error::ConsistencyFailure(format!(
                        "cutoff held at start but node {} reached a pairing below -1",
                        i + 1
                    ))));
                }
                target = Some(i);
                break;
            }
        }
        let Some(i) = target else {
            let mut word = fired.clone();
            word.reverse();
            let end = WeightVec::new(crate::num::from_scaled_slice(&cur, scale));
            return Some(Ok(GameWord::new(word, lambda, &end)));
        };
        cur[i] = cur[i].checked_add(scale)?; // firing at pairing −1 adds α_i
        fired.push(i);
        crate::num::rows_mul_scaled(rows, &cur, &mut buf)?;
        let next_size = buf.iter().filter(|&&v| v < 0).count();
        if next_size + 1 != s_size {
            return Some(Err(Error::ConsistencyFailure(format!(
                "negative-pairing count went {s_size} -> {next_size}; must drop by exactly 1"
            ))));
        }
        s_size = next_size;
        if let Some(mu_s) = &mu_s {
            if mu_s.iter().zip(cur.iter()).any(|(m, c)| m < c) {
                return Some(Err(Error::ConsistencyFailure(
                    "firing escaped the dominance cone of the context weight".into(),
                )));
            }
        }
        continue 'outer;
    }
}

/// Coordinatewise fractional part of a vector with nonnegative coordinates.
pub fn fractional_part(u: &WeightVec) -> Result<WeightVec> {
    if u.coords.iter().any(|c| c.is_negative()) {
        return Err(Error::Precondition(format!(
            "fractional part requires nonnegative root coordinates, got {u}"
        )));
    }
    Ok(WeightVec::new(u.coords.iter().map(frac_part).collect()))
}

/// Is `u` minuscule: `⟨u, α∨⟩ ∈ {−1, 0, 1}` for every coroot.
pub fn is_minuscule(datum: &RootDatum, u: &WeightVec) -> bool {
    datum.positive_roots().iter().all(|rp| {
        let p = datum.pairing(u, &rp.coroot).expect("rank checked");
        p >= rat(-1) && p <= rat(1)
    })
}

/// Constructive fractional-part lift: a word `w` with `w(u') = u` that is
/// `u'`-minuscule, where `u'` is the fractional part of `u`. Found by
/// descending from `u`: repeatedly pick a node with amplitude 1 whose
/// coordinate is ≥ 1 and subtract that simple root.
pub fn lift_fractional(datum: &RootDatum, u: &WeightVec) -> Result<GameWord> {
    if !datum.is_simply_laced() {
        return Err(Error::Precondition(format!(
            "fractional-part lifts are stated for simply-laced types, got {}",
            datum.type_name()
        )));
    }
    if !is_minuscule(datum, u) {
        return Err(Error::Precondition(format!("{u} is not minuscule")));
    }
    let target = fractional_part(u)?;
    let mut cur = u.clone();
    let mut word: Vec<usize> = Vec::new();
    while cur != target {
        let pick = (0..datum.rank()).find(|&i| {
            cur.coords[i] >= rat(1) && datum.pair_simple(&cur, i) == rat(1)
        });
        let Some(i) = pick else {
            return Err(Error::ConsistencyFailure(format!(
                "no descent node with amplitude 1 and coordinate >= 1 at {cur}"
            )));
        };
        cur = datum.reflect(i, &cur)?; // pairing 1, so this subtracts α_i
        word.push(i);
    }
    // Recorded in descent order from u; right-to-left application to u'
    // rebuilds u, which is exactly the stored convention.
    let game = GameWord::new(word, &target, u);
    game.validate(datum)?;
    Ok(game)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;
    use crate::orbits::weyl_orbit;
    use crate::rootdata::Family;

    fn a2() -> RootDatum {
        RootDatum::build(Family::A, 2).unwrap()
    }

    #[test]
    fn cutoff_examples() {
        let r = a2();
        // λ = -ω1 + ω2: pairings with the three positive coroots are -1, 1, 0
        let l = r.weight_from_fundamental(&[-1, 1]);
        assert!(cutoff_condition(&r, &l));
        // λ = -α1 fails at α1 itself
        let l2 = WeightVec::from_ints(&[-1, 0]);
        assert!(!cutoff_condition(&r, &l2));
        // dominant weights always pass
        assert!(cutoff_condition(&r, &r.weight_from_fundamental(&[2, 1])));
    }

    #[test]
    fn play_examples() {
        let r = a2();
        let l = r.weight_from_fundamental(&[-1, 1]);
        let g = play_to_dominant(&r, &l, None).unwrap();
        assert_eq!(g.word, vec![0]);
        assert_eq!(g.end(), r.fundamental_weight(0));
        g.validate(&r).unwrap();

        let dom = r.weight_from_fundamental(&[1, 2]);
        let g2 = play_to_dominant(&r, &dom, None).unwrap();
        assert!(g2.is_empty());
        assert_eq!(g2.end(), dom);
    }

    #[test]
    fn play_example_a3() {
        let r = RootDatum::build(Family::A, 3).unwrap();
        let l = r.weight_from_fundamental(&[1, -1, 1]);
        let g = play_to_dominant(&r, &l, None).unwrap();
        assert_eq!(g.word, vec![1]);
        assert_eq!(g.end(), r.fundamental_weight(1));
    }

    #[test]
    fn play_rejects_cutoff_violation() {
        let r = a2();
        let l = WeightVec::from_ints(&[-1, 0]);
        match play_to_dominant(&r, &l, None) {
            Err(Error::CutoffViolation { value, .. }) => assert_eq!(value, "-2"),
            other => panic!("expected cutoff violation, got {other:?}"),
        }
    }

    #[test]
    fn word_length_is_s_lambda_size() {
        let r = RootDatum::build(Family::A, 3).unwrap();
        for f in [[-1i64, 1, 0], [-1, -1, 3], [1, -2, 1]] {
            let l = r.weight_from_fundamental(&f);
            if !cutoff_condition(&r, &l) {
                continue;
            }
            let g = play_to_dominant(&r, &l, None).unwrap();
            let s = r
                .positive_roots()
                .iter()
                .filter(|rp| r.pairing(&l, &rp.coroot).unwrap().is_negative())
                .count();
            assert_eq!(g.len(), s, "{f:?}");
        }
    }

    #[test]
    fn in_cone_examples() {
        let r = a2();
        let mu = WeightVec::from_ints(&[1, 1]);
        assert!(in_cone(&mu, &mu));
        assert!(!in_cone(&mu, &WeightVec::from_ints(&[1, 2])));
        assert!(in_cone(&mu, &WeightVec::new(vec![ratio(1, 2), ratio(0, 1)])));
        let _ = r;
    }

    #[test]
    fn fractional_part_examples() {
        let a3 = RootDatum::build(Family::A, 3).unwrap();
        let w2 = a3.fundamental_weight(1);
        assert_eq!(w2.coords, vec![ratio(1, 2), ratio(1, 1), ratio(1, 2)]);
        let f = fractional_part(&w2).unwrap();
        assert_eq!(f.coords, vec![ratio(1, 2), ratio(0, 1), ratio(1, 2)]);
        // idempotent
        assert_eq!(fractional_part(&f).unwrap(), f);
        // integers collapse to zero
        let z = fractional_part(&WeightVec::from_ints(&[2, 1, 0])).unwrap();
        assert!(z.is_zero());
        // negative coordinates rejected
        assert!(fractional_part(&WeightVec::from_ints(&[-1, 0, 0])).is_err());
    }

    #[test]
    fn lift_fractional_a3_example() {
        let a3 = RootDatum::build(Family::A, 3).unwrap();
        let w2 = a3.fundamental_weight(1);
        let g = lift_fractional(&a3, &w2).unwrap();
        assert_eq!(g.word, vec![1]);
        assert_eq!(g.start(), fractional_part(&w2).unwrap());
        assert_eq!(g.end(), w2);
    }

    #[test]
    fn lift_fractional_trivial_cases() {
        let a1 = RootDatum::build(Family::A, 1).unwrap();
        let w = a1.fundamental_weight(0);
        let g = lift_fractional(&a1, &w).unwrap();
        assert!(g.is_empty());
        let a3 = RootDatum::build(Family::A, 3).unwrap();
        let u = fractional_part(&a3.fundamental_weight(1)).unwrap();
        assert!(lift_fractional(&a3, &u).unwrap().is_empty());
    }

    #[test]
    fn firing_order_independence_small_box() {
        // highest-index-first firing reaches the same end vector
        let r = a2();
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                let l = WeightVec::from_ints(&[a, b]);
                if !cutoff_condition(&r, &l) {
                    continue;
                }
                let low = play_to_dominant(&r, &l, None).unwrap();
                // replay with highest-first policy
                let mut cur = l.clone();
                let mut n = 0;
                loop {
                    let pairings = r.simple_pairings(&cur);
                    let pos = pairings.iter().rposition(|p| p.is_negative());
                    match pos {
                        None => break,
                        Some(i) => {
                            assert_eq!(pairings[i], rat(-1));
                            cur = r.reflect(i, &cur).unwrap();
                            n += 1;
                        }
                    }
                }
                assert_eq!(cur, low.end(), "start {l}");
                assert_eq!(n, low.len());
            }
        }
    }

    #[test]
    fn minuscule_orbit_fractional_parts_stay_in_orbit() {
        let a3 = RootDatum::build(Family::A, 3).unwrap();
        let orbit = weyl_orbit(&a3, &a3.fundamental_weight(1)).unwrap();
        for u in &orbit.elements {
            if u.coords.iter().any(|c| c.is_negative()) {
                continue;
            }
            let f = fractional_part(u).unwrap();
            assert!(orbit.elements.contains(&f), "u={u}");
            lift_fractional(&a3, u).unwrap();
        }
    }
}
