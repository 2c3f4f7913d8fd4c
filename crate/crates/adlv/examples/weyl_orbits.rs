//! Enumerate a Weyl orbit and the lattice points of its convex hull in the
//! class of the highest weight, then project everything to a Levi quotient.
//!
//! This is the worked A2 instance: J = {1}, μ = α_1 + α_2, with
//! X_M ≅ ℤ normalized by m·ω_1 + n·ω_2 ↦ m + 2n, and φ_J(P_μ) = {−3, 0, 3}.
//!
//! ```sh
//! cargo run --example weyl_orbits
//! ```

use adlv::lattices::{xm_quotient, AmbientLattice, LeviSubset};
use adlv::orbits::{enumerate_pmu, oracle_phi_pmu, pmu_box_oracle, weyl_orbit};
use adlv::rootdata::{Family, RootDatum, WeightVec};

fn main() {
    let datum = RootDatum::build(Family::A, 2).expect("A2 is valid");
    let mu = WeightVec::from_ints(&[1, 1]); // α_1 + α_2 = ω_1 + ω_2

    let orbit = weyl_orbit(&datum, &mu).expect("μ is dominant");
    println!("orbit of {mu}: {} elements", orbit.elements.len());
    for w in &orbit.elements {
        println!("  {w}");
    }

    let pmu = enumerate_pmu(&datum, &mu).expect("μ is dominant and integral");
    println!("\nP_mu has {} lattice points:", pmu.points.len());
    for p in &pmu.points {
        println!("  {p}");
    }

    // the independent bounding-box oracle agrees
    let oracle = pmu_box_oracle(&datum, &mu).expect("μ is dominant");
    assert_eq!(pmu.points, oracle);
    println!("bounding-box oracle agrees: {} points", oracle.len());

    // project everything into X_M for J = {1}
    let levi = LeviSubset::new(&datum, &[0usize].into_iter().collect()).expect("valid Levi");
    let q_xm = xm_quotient(&datum, &levi, AmbientLattice::Weight);
    let image = oracle_phi_pmu(&datum, &q_xm, &pmu).expect("projection");
    let coords: Vec<String> = image.iter().map(|c| format!("{:?}", c.coords)).collect();
    println!("\nimage in X_M (m·ω_1+n·ω_2 ↦ m+2n): {}", coords.join(", "));
}
