//! Command implementations behind the `adlv` binary.
//!
//! Exit codes are a contract: 0 success, 1 mathematical-condition failure
//! (a set inequality, an invalid certificate, a class outside the
//! characterization), 2 usage or precondition errors, 3 internal consistency
//! failures (which would falsify the verified statements).

use crate::engine::check_certificate;
use crate::error::Error;
use crate::folding::{build_folding, canonical_source, folded_class_witness, verify_any};
use crate::lattices::{xg_quotient, xm_quotient, AmbientLattice, LeviSubset};
use crate::num::Int;
use crate::quasisplit::{adlv_nonempty, build_coinvariants, AdlvQuery};
use crate::report::{
    certificate_from_json, certificate_to_json, report_to_json, sweep_csv_header, sweep_row_csv,
    SweepRow,
};
use crate::rootdata::{Family, RootDatum};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::ConsistencyFailure(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn parse_family(s: &str) -> Result<Family, i32> {
    Family::parse(s).ok_or_else(|| {
        eprintln!("error: unknown type family '{s}' (expected A, B, C, D, E, F, G or BC)");
        EXIT_USAGE
    })
}

fn levi_set(levi_one_based: &[usize]) -> Result<BTreeSet<usize>, i32> {
    let mut out = BTreeSet::new();
    for &i in levi_one_based {
        if i == 0 {
            eprintln!("error: --levi indices are 1-based");
            return Err(EXIT_USAGE);
        }
        out.insert(i - 1);
    }
    Ok(out)
}

fn parse_ambient(s: &str) -> Result<AmbientLattice, i32> {
    match s {
        "weight" | "p" | "P" => Ok(AmbientLattice::Weight),
        "root" | "q" | "Q" => Ok(AmbientLattice::Root),
        other => {
            eprintln!("error: unknown lattice '{other}' (expected weight or root)");
            Err(EXIT_USAGE)
        }
    }
}

fn write_out(path: Option<&Path>, content: &str) -> Result<(), i32> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", p.display());
            EXIT_USAGE
        }),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

/// `verify`: run the projection-identity verification for one `(type, J, μ)`.
pub fn cmd_verify(
    family: &str,
    rank: usize,
    levi_one_based: &[usize],
    mu_fund: &[i64],
    lattice: &str,
    out: Option<&Path>,
) -> i32 {
    let (family, levi, ambient) = match (parse_family(family), levi_set(levi_one_based), parse_ambient(lattice)) {
        (Ok(f), Ok(l), Ok(a)) => (f, l, a),
        (Err(c), _, _) | (_, Err(c), _) | (_, _, Err(c)) => return c,
    };
    match verify_any(family, rank, &levi, mu_fund, ambient) {
        Ok(report) => {
            let json = report_to_json(&report);
            if write_out(out, &json).is_err() {
                return EXIT_USAGE;
            }
            eprintln!(
                "verify {}{rank} levi={levi_one_based:?} mu={mu_fund:?}: |lhs|={} |rhs|={} equal={} certificates={}",
                family,
                report.lhs.len(),
                report.rhs.len(),
                report.equal,
                report.certificates.len()
            );
            if report.all_valid() {
                EXIT_OK
            } else {
                for c in &report.counterexamples {
                    eprintln!("counterexample: {c}");
                }
                EXIT_MATH
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

/// `witness`: produce and save a certificate for one class.
pub fn cmd_witness(
    family: &str,
    rank: usize,
    levi_one_based: &[usize],
    mu_fund: &[i64],
    y_coords: &[i64],
    lattice: &str,
    out: Option<&Path>,
) -> i32 {
    let (family, levi, ambient) = match (parse_family(family), levi_set(levi_one_based), parse_ambient(lattice)) {
        (Ok(f), Ok(l), Ok(a)) => (f, l, a),
        (Err(c), _, _) | (_, Err(c), _) | (_, _, Err(c)) => return c,
    };
    let y_ints: Vec<Int> = y_coords.iter().map(|&v| Int::from(v)).collect();
    let result = (|| -> crate::error::Result<crate::engine::Certificate> {
        let datum = RootDatum::build(family, rank)?;
        if mu_fund.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, got: mu_fund.len() });
        }
        if mu_fund.iter().any(|&c| c < 0) {
            return Err(Error::NotDominant(format!("{mu_fund:?}")));
        }
        if datum.is_simply_laced() {
            let levi = LeviSubset::new(&datum, &levi)?;
            let mu = datum.weight_from_fundamental(mu_fund);
            let q_xm = xm_quotient(&datum, &levi, ambient);
            let q_xg = xg_quotient(&datum, ambient);
            if y_ints.len() != q_xm.num_coords() {
                return Err(Error::DimensionMismatch {
                    expected: q_xm.num_coords(),
                    got: y_ints.len(),
                });
            }
            let y = q_xm.class_from_coords(y_ints.clone());
            crate::engine::witness(&datum, &levi, &q_xm, &q_xg, &mu, &y)
        } else {
            let (src, theta) = canonical_source(family, rank)?;
            let fd = build_folding(src, theta)?;
            let orbit_levi: BTreeSet<usize> =
                levi.iter().map(|&k| fd.orbit_of_h_node[k]).collect();
            let mu_h = fd.h.weight_from_fundamental(mu_fund);
            let mu_fixed = fd.from_h(&mu_h);
            folded_class_witness(&fd, &orbit_levi, &mu_fixed, y_ints.clone(), ambient)
        }
    })();
    match result {
        Ok(cert) => {
            let json = certificate_to_json(&cert);
            if write_out(out, &json).is_err() {
                return EXIT_USAGE;
            }
            eprintln!(
                "witness for y={y_coords:?}: game length {}, all checks pass: {}",
                cert.game.len(),
                cert.all_pass()
            );
            if cert.all_pass() {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            }
        }
        Err(Error::Precondition(msg)) if msg.contains("condition (") => {
            eprintln!("error: {msg}");
            EXIT_MATH
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

/// `check-cert`: re-validate a stored certificate from its data alone.
pub fn cmd_check_cert(path: &Path) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let cert = match certificate_from_json(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match check_certificate(&cert) {
        Ok(verdicts) => {
            let mut all = true;
            for (name, pass) in &verdicts {
                println!("{}: {}", name, if *pass { "pass" } else { "FAIL" });
                all &= pass;
            }
            if all {
                EXIT_OK
            } else {
                EXIT_MATH
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

fn parse_sigma(spec: &str, rank: usize) -> Result<Vec<usize>, i32> {
    match spec {
        "id" => Ok((0..rank).collect()),
        "flip" => Ok((0..rank).map(|i| rank - 1 - i).collect()),
        "triality" => {
            if rank != 4 {
                eprintln!("error: triality needs rank 4 (type D4)");
                return Err(EXIT_USAGE);
            }
            Ok(vec![2, 1, 3, 0])
        }
        other => {
            if let Some(rest) = other.strip_prefix("swap:") {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() == 2 {
                    if let (Ok(a), Ok(b)) = (parts[0].parse::<usize>(), parts[1].parse::<usize>()) {
                        if a >= 1 && b >= 1 && a <= rank && b <= rank && a != b {
                            let mut sigma: Vec<usize> = (0..rank).collect();
                            sigma.swap(a - 1, b - 1);
                            return Ok(sigma);
                        }
                    }
                }
            }
            eprintln!("error: bad sigma '{other}' (expected id, flip, triality or swap:i,j)");
            Err(EXIT_USAGE)
        }
    }
}

/// `adlv`: answer one non-emptiness query.
pub fn cmd_adlv(
    family: &str,
    rank: usize,
    sigma_spec: &str,
    levi_one_based: &[usize],
    mu_fund: &[i64],
    nu_coords: &[i64],
) -> i32 {
    let (family, levi) = match (parse_family(family), levi_set(levi_one_based)) {
        (Ok(f), Ok(l)) => (f, l),
        (Err(c), _) | (_, Err(c)) => return c,
    };
    let sigma = match parse_sigma(sigma_spec, rank) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let result = (|| -> crate::error::Result<crate::quasisplit::AdlvVerdict> {
        let source = RootDatum::build(family, rank)?;
        if mu_fund.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, got: mu_fund.len() });
        }
        let datum = build_coinvariants(source, sigma)?;
        let levi = LeviSubset::new(&datum.source, &levi)?;
        let mu = datum.source.weight_from_fundamental(mu_fund);
        let q_ym = datum.levi_quotient(&levi)?;
        if nu_coords.len() != q_ym.num_coords() {
            return Err(Error::DimensionMismatch {
                expected: q_ym.num_coords(),
                got: nu_coords.len(),
            });
        }
        let nu_m = q_ym.class_from_coords(nu_coords.iter().map(|&v| Int::from(v)).collect());
        let query = AdlvQuery { datum, levi, mu, nu_m };
        adlv_nonempty(&query)
    })();
    match result {
        Ok(verdict) => {
            println!(
                "{} (order path: {}, membership path: {})",
                if verdict.nonempty { "nonempty" } else { "empty" },
                verdict.via_order,
                verdict.via_membership
            );
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

/// `sweep`: every proper nonempty Levi and every dominant μ under the bound.
pub fn cmd_sweep(
    family: &str,
    rank: usize,
    mu_bound: i64,
    lattice: &str,
    out: Option<&Path>,
) -> i32 {
    let (family, ambient) = match (parse_family(family), parse_ambient(lattice)) {
        (Ok(f), Ok(a)) => (f, a),
        (Err(c), _) | (_, Err(c)) => return c,
    };
    if RootDatum::build(family, rank).is_err() {
        eprintln!("error: invalid type {family}{rank}");
        return EXIT_USAGE;
    }
    let mut tasks: Vec<(BTreeSet<usize>, Vec<i64>)> = Vec::new();
    for mask in 1..(1u32 << rank) - 1 {
        let levi: BTreeSet<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).collect();
        let mut mu = vec![0i64; rank];
        loop {
            tasks.push((levi.clone(), mu.clone()));
            let mut carry = true;
            for slot in mu.iter_mut() {
                if *slot < mu_bound {
                    *slot += 1;
                    carry = false;
                    break;
                }
                *slot = 0;
            }
            if carry {
                break;
            }
        }
    }
    let results: Vec<Result<SweepRow, String>> = tasks
        .par_iter()
        .map(|(levi, mu)| {
            verify_any(family, rank, levi, mu, ambient)
                .map(|report| SweepRow {
                    family: family.to_string(),
                    rank,
                    levi: levi.iter().copied().collect(),
                    mu: mu.clone(),
                    lhs_size: report.lhs.len(),
                    equal: report.equal,
                    all_valid: report.all_valid(),
                })
                .map_err(|e| format!("levi={levi:?} mu={mu:?}: {e}"))
        })
        .collect();
    let mut lines = vec![sweep_csv_header().to_string()];
    let mut ok = true;
    for r in &results {
        match r {
            Ok(row) => {
                ok &= row.equal && row.all_valid;
                lines.push(sweep_row_csv(row));
            }
            Err(msg) => {
                ok = false;
                eprintln!("error: {msg}");
            }
        }
    }
    let body = lines.join("\n") + "\n";
    if write_out(out, &body).is_err() {
        return EXIT_USAGE;
    }
    eprintln!("sweep {family}{rank}: {} instances, all consistent: {ok}", results.len());
    if ok {
        EXIT_OK
    } else {
        EXIT_MATH
    }
}
