//! Produce a witness certificate, serialize it, and re-validate it from the
//! serialized data alone.
//!
//! A certificate pins down every constructive step: the minuscule-dominant
//! coset lift `z`, its Levi coefficients `k`, the fractional shift `z′`, the
//! cutoff game to the dominant chamber, and (when the class sits in a
//! non-dominant chamber) the Weyl word that moved it.
//!
//! ```sh
//! cargo run --example certificates
//! ```

use adlv::engine::{check_certificate, witness};
use adlv::lattices::{xg_quotient, xm_quotient, AmbientLattice, LeviSubset};
use adlv::num::int;
use adlv::report::{certificate_from_json, certificate_to_json};
use adlv::rootdata::{Family, RootDatum, WeightVec};

fn main() {
    let datum = RootDatum::build(Family::A, 2).expect("A2 is valid");
    let levi = LeviSubset::new(&datum, &[0usize].into_iter().collect()).expect("valid Levi");
    let q_xm = xm_quotient(&datum, &levi, AmbientLattice::Weight);
    let q_xg = xg_quotient(&datum, AmbientLattice::Weight);
    let mu = WeightVec::from_ints(&[1, 1]);

    for value in [3i64, 0, -3] {
        let y = q_xm.class_from_coords(vec![int(value)]);
        let cert = witness(&datum, &levi, &q_xm, &q_xg, &mu, &y).expect("y is in the set");
        println!(
            "y = {value}: chamber word {:?}, game length {}, witness point {}",
            cert.chamber_word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            cert.game.len(),
            cert.witness_point,
        );
        let json = certificate_to_json(&cert);
        let parsed = certificate_from_json(&json).expect("round trip");
        let verdicts = check_certificate(&parsed).expect("well-formed certificate");
        for (name, pass) in &verdicts {
            assert!(pass, "{name} failed");
        }
        println!("  re-validated standalone: {} checks pass", verdicts.len());
        // serialization is byte-stable
        assert_eq!(json, certificate_to_json(&parsed));
    }

    // a class that is not in the set is rejected with the failing condition
    let bad = q_xm.class_from_coords(vec![int(1)]);
    match witness(&datum, &levi, &q_xm, &q_xg, &mu, &bad) {
        Err(e) => println!("\ny = 1 rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
