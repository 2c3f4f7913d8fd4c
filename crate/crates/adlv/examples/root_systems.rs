//! Build root data for several types and print their exact Cartan data.
//!
//! ```sh
//! cargo run --example root_systems
//! ```

use adlv::rootdata::{Family, RootDatum};

fn main() {
    for (family, rank) in [
        (Family::A, 2),
        (Family::B, 3),
        (Family::G, 2),
        (Family::F, 4),
        (Family::BC, 2),
    ] {
        let datum = RootDatum::build(family, rank).expect("valid type");
        println!("== {} ==", datum.type_name());
        println!("cartan matrix (rows = coroots):");
        for row in datum.cartan() {
            println!("  {row:?}");
        }
        println!("symmetrizer: {:?}", datum.symmetrizer());
        println!("positive roots: {}", datum.positive_roots().len());
        let rho = datum.rho();
        println!("rho in simple-root coordinates: {rho}");
        for i in 0..rank {
            let refl = datum.reflect(i, &rho).expect("index in range");
            println!("  s_{}(rho) = {refl}", i + 1);
        }
        println!();
    }

    // invalid types are rejected with a diagnostic
    match RootDatum::build(Family::C, 2) {
        Err(e) => println!("C2 rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
}
