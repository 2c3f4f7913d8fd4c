use adlv::lattices::AmbientLattice;
use adlv::folding::verify_any;
use std::time::Instant;

fn main() {
    for (fam, rank, levi, mu) in [
        ("B", 4usize, vec![0usize], vec![1i64, 1, 1, 1]),
        ("B", 4, vec![0], vec![2, 2, 2, 2]),
        ("C", 4, vec![3], vec![2, 2, 2, 2]),
        ("F", 4, vec![0], vec![1, 1, 1, 1]),
        ("A", 4, vec![2], vec![2, 2, 2, 2]),
        ("D", 4, vec![1], vec![2, 2, 2, 2]),
        ("G", 2, vec![0], vec![2, 2]),
    ] {
        let f = adlv::rootdata::Family::parse(fam).unwrap();
        let t = Instant::now();
        let report = verify_any(f, rank, &levi.iter().copied().collect(), &mu, AmbientLattice::Weight).unwrap();
        println!(
            "{fam}{rank} J={levi:?} mu={mu:?}: lhs={} rhs={} equal={} valid={} in {:?}",
            report.lhs.len(), report.rhs.len(), report.equal, report.all_valid(), t.elapsed()
        );
    }
}
