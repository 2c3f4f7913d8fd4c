//! The numbers game with cutoff: fire a node only when its pairing is
//! exactly −1. A start vector reaches the dominant chamber this way iff it
//! pairs ≥ −1 with every positive coroot, and the number of firings equals
//! the number of positive coroots with negative pairing.
//!
//! ```sh
//! cargo run --example numbers_game
//! ```

use adlv::game::{cutoff_condition, cutoff_witness, fractional_part, lift_fractional, play_to_dominant};
use adlv::rootdata::{Family, RootDatum};

fn main() {
    let a3 = RootDatum::build(Family::A, 3).expect("A3 is valid");

    // a convergent start: λ = ω_1 − ω_2 + ω_3
    let lambda = a3.weight_from_fundamental(&[1, -1, 1]);
    println!("λ = {lambda}, cutoff holds: {}", cutoff_condition(&a3, &lambda));
    let game = play_to_dominant(&a3, &lambda, None).expect("cutoff holds");
    println!(
        "game word (right-to-left, 1-based): {:?}, end = {}",
        game.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
        game.end()
    );
    game.validate(&a3).expect("every firing at pairing -1");

    // a divergent start: λ = −α_1 pairs −2 with α_1∨
    let bad = a3.weight_from_fundamental(&[-2, 1, 0]);
    if let Some(witness) = cutoff_witness(&a3, &bad) {
        println!("\nλ = {bad} fails the cutoff at coroot of {}", witness.root);
    }
    assert!(play_to_dominant(&a3, &bad, None).is_err());

    // fractional-part lift of a minuscule weight
    let omega2 = a3.fundamental_weight(1);
    let frac = fractional_part(&omega2).expect("nonnegative coordinates");
    println!("\nω_2 = {omega2} has fractional part {frac}");
    let lift = lift_fractional(&a3, &omega2).expect("minuscule lift");
    println!(
        "lift word {:?} carries the fractional part back to ω_2",
        lift.word.iter().map(|i| i + 1).collect::<Vec<_>>()
    );
}
