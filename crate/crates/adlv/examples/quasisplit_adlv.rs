//! Coinvariant lattices, cofolded root systems, and the quasi-split
//! non-emptiness criterion.
//!
//! Cofolding (coinvariants) is dual to folding: the A3 flip cofolds to C2,
//! and the A4 flip — whose middle orbit is adjacent — produces the
//! non-reduced system BC2. For a class `ν_M` in the strict chamber of `Y_M`
//! the criterion `ν_M ⪯ μ` decides non-emptiness, and the library always
//! computes it along both routes (order test and orbit-hull membership)
//! before answering.
//!
//! ```sh
//! cargo run --release --example quasisplit_adlv
//! ```

use adlv::lattices::LeviSubset;
use adlv::num::int;
use adlv::quasisplit::{
    adlv_nonempty, build_coinvariants, dominance_facts_check, verify_quasisplit_criterion,
    AdlvQuery,
};
use adlv::rootdata::{Family, RootDatum, WeightVec};

fn main() {
    // cofolded labels
    for (family, rank, sigma, label) in [
        (Family::A, 3, vec![2usize, 1, 0], "A3 flip"),
        (Family::A, 4, vec![3, 2, 1, 0], "A4 flip"),
        (Family::D, 4, vec![0, 1, 3, 2], "D4 swap"),
    ] {
        let source = RootDatum::build(family, rank).expect("valid source");
        let datum = build_coinvariants(source, sigma).expect("diagram automorphism");
        println!("{label}: cofolded system {}", datum.cofolded_label);
        let facts = dominance_facts_check(&datum, 2).expect("scan");
        assert!(facts.dominance_descends && facts.order_descends);
    }

    // the criterion on the A3 involution
    let source = RootDatum::build(Family::A, 3).expect("A3 is valid");
    let datum = build_coinvariants(source, vec![2, 1, 0]).expect("involution");
    let levi = LeviSubset::new(&datum.source, &[0usize, 2].into_iter().collect()).expect("σ-stable");
    let mu = datum.source.weight_from_fundamental(&[1, 0, 1]);
    let report = verify_quasisplit_criterion(&datum, &levi, &mu, 2).expect("verification");
    println!(
        "\nA3/σ criterion for μ = ω_1+ω_3: candidates={} equivalent={} ρ(P_μ)=P′: {}",
        report.candidates.len(),
        report.equivalent,
        report.rho_pmu_equals_pprime,
    );
    assert!(report.all_valid());

    // split-case queries mirror the classical picture
    let split = build_coinvariants(RootDatum::build(Family::A, 2).unwrap(), vec![0, 1]).unwrap();
    let levi = LeviSubset::new(&split.source, &[0usize].into_iter().collect()).unwrap();
    let q_ym = split.levi_quotient(&levi).unwrap();
    let mu = WeightVec::from_ints(&[1, 1]);
    for value in [3i64, 6] {
        let query = AdlvQuery {
            datum: split.clone(),
            levi: levi.clone(),
            mu: mu.clone(),
            nu_m: q_ym.class_from_coords(vec![int(value)]),
        };
        let verdict = adlv_nonempty(&query).expect("strict-chamber query");
        println!(
            "split A2, ν_M = {value}: {} (order {}, membership {})",
            if verdict.nonempty { "nonempty" } else { "empty" },
            verdict.via_order,
            verdict.via_membership,
        );
    }
    // boundary classes are rejected, not silently answered
    let query = AdlvQuery {
        datum: split.clone(),
        levi: levi.clone(),
        mu,
        nu_m: q_ym.class_from_coords(vec![int(-3)]),
    };
    match adlv_nonempty(&query) {
        Err(e) => println!("ν_M = -3 rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
